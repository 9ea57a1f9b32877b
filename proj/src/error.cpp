#include "invtab/error.hpp"

namespace invtab {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_permutation: return "invalid_permutation";
    case Errc::invalid_code: return "invalid_code";
    case Errc::dimension_mismatch: return "dimension_mismatch";
    case Errc::no_cover: return "no_cover";
    case Errc::invalid_diagram: return "invalid_diagram";
    case Errc::invalid_filling: return "invalid_filling";
    case Errc::invalid_box: return "invalid_box";
    case Errc::not_grassmannian: return "not_grassmannian";
    case Errc::shape_mismatch: return "shape_mismatch";
    case Errc::not_reduced: return "not_reduced";
    case Errc::no_move: return "no_move";
    case Errc::not_comparable: return "not_comparable";
    case Errc::expansion_failed: return "expansion_failed";
    case Errc::invalid_chain: return "invalid_chain";
    case Errc::parse_error: return "parse_error";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

}  // namespace invtab
