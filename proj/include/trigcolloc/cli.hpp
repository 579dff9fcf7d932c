#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace trigcolloc {

/// Full argv-style entry point (argv[0] excluded). Exit codes: 0 success,
/// 1 check failure, 2 usage/config error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 17 significant digits, enough to round-trip an IEEE double.
std::string fmt17(double v);

/// Default seed for random-grid trials; TRIGSPEC_SEED overrides it.
std::uint64_t default_seed();

} // namespace trigcolloc
