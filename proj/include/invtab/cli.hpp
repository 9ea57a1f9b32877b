#pragma once

#include <iosfwd>

namespace invtab::cli {

// Exit codes: 0 success, 1 mathematical domain error, 2 usage error.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace invtab::cli
