#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mtw {

/// Runs one CLI invocation. Returns 0 on success, 1 on a domain error,
/// 2 on a usage error. Output is JSON by default ("--output plain" prints
/// bare values); all numbers are exact rational strings.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mtw
