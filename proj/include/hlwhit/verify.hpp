#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hlwhit/speh.hpp"

namespace hlwhit {
namespace verify {

// One suite of identity checks. Every case is exact (zero tolerance); a
// failure records which object broke first.
struct SuiteResult {
  std::string suite;
  long cases = 0;
  long failures = 0;
  std::string first_violation;
  std::vector<std::pair<std::string, bool>> case_lines;
  double elapsed_ms = 0;

  bool ok() const { return failures == 0; }
  void record(const std::string& label, bool pass, const std::string& detail = "");
};

// <P_lambda, H_mu> = delta_{lambda,mu} as rational functions in t, all pairs
// of partitions of every m <= max_size.
SuiteResult duality(int max_size);

// Pipeline Kostka-Foulkes == charge oracle for m <= max_equiv; positivity and
// dominance triangularity for m <= max_structure.
SuiteResult charge(int max_equiv, int max_structure);

// modified_h at t = q == flag-count expansion, m <= max_size, q in {2,3}.
SuiteResult flag(int max_size, long budget = 1024);

// zeta_series_lhs == zeta_series_rhs: symbolically per degree up to
// max_degree, then at `points` random rational specializations.
SuiteResult zeta(int k, int c, int max_degree, unsigned seed, int points = 20);

// cauchy_truncated oracle == zeta_series_rhs at random rational points.
SuiteResult cauchy(int k, int c, int max_degree, unsigned seed, int points = 20);

// c = 1 degeneration: speh_value((m), k) == shintani_value((m), k),
// symbolically and at random Satake points.
SuiteResult shintani(int max_m, int max_k, unsigned seed);

// corollary_expansion == speh_value for mu |- m <= max_size, k <= max_k,
// c <= max_c (symbolic), plus numeric spot checks.
SuiteResult corollary(int max_size, int max_k, int max_c, unsigned seed);

// P(x;0) = s (m <= max_p); modified_h single row = h_m (m <= max_row);
// modified_h in one variable = x^|mu| (m <= max_onevar).
SuiteResult specialization(int max_p, int max_row, int max_onevar);

// speh_value_tuple vanishes exactly when the last entry is negative, over all
// weakly decreasing tuples with entries in [-bound, bound] and length <=
// max_len; speh_value(empty) = (0, 1).
SuiteResult vanishing(int bound, int max_len);

}  // namespace verify
}  // namespace hlwhit
