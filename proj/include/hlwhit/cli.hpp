#pragma once

#include <iosfwd>

namespace hlwhit {

// Runtime bounds; overridable through the config file named by the
// HLWHIT_CONFIG environment variable (key=value lines, # comments).
struct CliConfig {
  int max_table_m = 7;       // kostka table degree bound
  int max_series_degree = 6; // zeta/cauchy truncation bound
  long flag_budget = 1024;   // flag enumeration guard: q^m <= budget
  int max_vars = 10;         // variable-count bound for hl computations
};

CliConfig load_config_from_env();

// Drives the whole command surface. Exit codes: 0 ok, 1 identity violation,
// 2 usage or parse error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hlwhit
