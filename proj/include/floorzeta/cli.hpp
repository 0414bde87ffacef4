#pragma once

#include <iosfwd>

namespace floorzeta::cli {

// Reported in every JSON document and by --version.
inline constexpr const char* kVersion = "1.0.0";

// Batch front-end. Results go to `out` (JSON by default, CSV with --csv),
// diagnostics and timing to `err`. Standard output is byte-deterministic for
// identical inputs and version: anything wall-clock-dependent goes to `err`.
//
// Exit codes: 0 success, 1 selftest mismatch, 2 usage error, 3 domain error,
// 4 identity report containing a REFUTED verdict while --strict is set.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace floorzeta::cli
