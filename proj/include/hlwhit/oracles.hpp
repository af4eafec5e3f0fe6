#pragma once

#include <functional>
#include <vector>

#include "hlwhit/symfunc.hpp"

namespace hlwhit {
namespace oracles {

// Brute-force verifiers. Nothing in here touches the symmetrization /
// plethysm / transition-matrix machinery: flag counts come from explicit
// linear algebra over F_q, Kostka-Foulkes polynomials from tableau
// enumeration with the charge statistic, and the Cauchy product from direct
// truncated series multiplication.

inline constexpr long kDefaultFlagBudget = 1024;  // guard: q^m <= budget

// Dense matrix over F_q, q a small prime.
struct FqMatrix {
  unsigned q = 2;
  int m = 0;
  std::vector<unsigned> a;  // row-major, entries in [0, q)

  unsigned at(int r, int c) const { return a[static_cast<size_t>(r) * m + c]; }
  unsigned& at(int r, int c) { return a[static_cast<size_t>(r) * m + c]; }
};

// Unipotent Jordan matrix of type mu: blocks of size mu_i with ones on the
// diagonal and superdiagonal; J_{(1^m)}(1) = I_m.
FqMatrix jordan_matrix(const Partition& mu, unsigned q);

// A flag recorded in ambient coordinates: cumulative subspaces as
// row-reduced bases, dimension jumps in `type`.
struct Flag {
  unsigned q = 2;
  int m = 0;
  std::vector<int> type;
  std::vector<std::vector<std::vector<unsigned>>> steps;  // steps[i] = RREF basis of V_{i+1}
};

// #{flags of type lambda in F_q^m fixed by J_mu(1)}, by enumerating
// J-invariant subspaces dimension jump by dimension jump (each level works
// in the quotient by the chain so far, so only invariant chains are ever
// extended). Optional collector receives every fixed flag.
long flag_count(const Partition& mu, const Partition& lambda, unsigned q,
                long budget = kDefaultFlagBudget,
                const std::function<void(const Flag&)>& collect = {});

// Monomial-basis symmetric function with flag-count coefficients; equals the
// modified Hall-Littlewood polynomial at t = q.
SymFunc modified_h_via_flags(const Partition& mu, unsigned q, int num_vars,
                             long budget = kDefaultFlagBudget);

// K_{lambda,mu}(t) as the charge generating function over SSYT of shape
// lambda and content mu. Requires |lambda| = |mu| <= 6.
Poly charge_kostka_oracle(const Partition& lambda, const Partition& mu);

// Truncated expansion of prod_{i,j} 1/(1 - x_i y_j T): coefficients of
// T^0..T^M, multiplied out one geometric factor at a time.
std::vector<Rational> cauchy_truncated(const std::vector<Rational>& x,
                                       const std::vector<Rational>& y, int max_degree);

}  // namespace oracles
}  // namespace hlwhit
