#pragma once

#include <iosfwd>

namespace flagstar::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// Exit codes: 0 success / all checks pass, 1 a check failed or the
/// computation raised, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace flagstar::cli
