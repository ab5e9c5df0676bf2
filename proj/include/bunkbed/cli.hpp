#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bunkbed::cli {

/// Runs one subcommand (exact, expand, verify-theorem, line, mc,
/// geodesic-check). JSON goes to `out`; usage text, errors and the --verbose
/// table go to `err`.
///
/// Exit status: 0 when every verdict is PASS or DISCREPANCY, 1 on any other
/// verdict, 2 on usage errors, malformed input or exceeded caps.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bunkbed::cli
