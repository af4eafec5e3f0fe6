#pragma once

#include <map>
#include <utility>

#include "hlwhit/symfunc.hpp"

namespace hlwhit {

// The one-parameter deformation family. hl_p/hl_q carry polynomial-in-t
// coefficients; transformed_h applies the power-sum substitution
// p_j -> p_j / (1 - t^j) to hl_q; modified_h reverses t with the n(mu) shift.

// Deformation parameter: formal, or specialized to a rational function /
// rational number of the same formal variable.
struct HLParameter {
  enum class Mode { FormalT, Specialized };
  Mode mode = Mode::FormalT;
  RatFunc value;  // meaningful in Specialized mode only

  static HLParameter formal() { return {}; }
  static HLParameter at(RatFunc v) { return {Mode::Specialized, std::move(v)}; }

  // Coefficient-wise application to a symmetric function.
  SymFunc apply(const SymFunc& f) const {
    return mode == Mode::FormalT ? f : f.substitute_parameter(value);
  }
};

// P_lambda(x_1..x_n; t) in the monomial basis, computed by symmetrizing the
// kernel x^lambda prod_{i<j} (1 - t x_j/x_i)/(1 - x_j/x_i) over S_n with
// exact cancellation. Requires l(lambda) <= n.
SymFunc hl_p(const Partition& lambda, int num_vars);

// Same function, Schur basis (what the symmetrization produces natively).
SymFunc hl_p_schur(const Partition& lambda, int num_vars);

// (1-t)^l * prod_i [mult_i(lambda)]_t!
Poly b_factor(const Partition& lambda);

// Q_lambda = b_factor(lambda) * P_lambda, monomial basis.
SymFunc hl_q(const Partition& lambda, int num_vars);

// Transformed Hall-Littlewood H_mu(x; t), Schur basis in num_vars variables.
// Pipeline: Q_mu over |mu| internal variables -> power sums -> plethysm
// divide -> back to Schur. Coefficients are asserted to clear to polynomials.
SymFunc transformed_h(const Partition& mu, int num_vars);

// Modified Hall-Littlewood: t^{n(mu)} H_mu(x; t^{-1}), Schur basis.
SymFunc modified_h(const Partition& mu, int num_vars);

// Schur coefficient of H_mu: the Kostka-Foulkes polynomial K_{lambda,mu}(t).
Poly kostka_foulkes(const Partition& lambda, const Partition& mu);

// Cocharge variant: q^{n(mu)} K_{lambda,mu}(q^{-1}); always a polynomial.
Poly cocharge_kostka(const Partition& lambda, const Partition& mu);

struct KostkaFoulkesTable {
  int degree = 0;
  // (lambda, mu) -> K_{lambda,mu}; all pairs of partitions of `degree`,
  // iterated in decreasing lexicographic order (the canonical order).
  std::map<std::pair<Partition, Partition>, Poly, std::greater<>> entries;
};

KostkaFoulkesTable kostka_foulkes_table(int m, bool cocharge = false);

}  // namespace hlwhit
