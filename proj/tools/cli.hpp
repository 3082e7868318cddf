#pragma once

#include <ostream>

namespace eogt::cli {

/// Exit codes: 0 ok, 1 usage/parse/validation error, 2 no match, 3 audit failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace eogt::cli
