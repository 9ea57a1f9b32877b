#pragma once

#include <stdexcept>
#include <string>

namespace invtab {

enum class Errc {
  invalid_permutation,
  invalid_code,
  dimension_mismatch,
  no_cover,
  invalid_diagram,
  invalid_filling,
  invalid_box,
  not_grassmannian,
  shape_mismatch,
  not_reduced,
  no_move,
  not_comparable,
  expansion_failed,
  invalid_chain,
  parse_error,
  internal,
};

const char* errc_name(Errc code);

// Every library failure is reported through this type. `internal` marks a
// broken invariant (a bug), everything else is a caller-side domain error.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace invtab
