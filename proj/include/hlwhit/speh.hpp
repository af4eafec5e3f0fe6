#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hlwhit/halfint.hpp"
#include "hlwhit/hall_littlewood.hpp"

namespace hlwhit {

// The (k,c) model data: Whittaker values of the normalized spherical element
// on diag(pi^mu, 1), their Shintani degeneration, the Schur-expansion
// corollary, and the zeta-series identity that ties them to the Cauchy kernel.

struct SpehContext {
  int k = 1;
  int c = 1;
};

class UnramifiedError : public std::runtime_error {
 public:
  explicit UnramifiedError(const std::string& what) : std::runtime_error(what) {}
};

// Satake data: formal, or a concrete q > 1 with parameter values x_i = q^{-z_i}.
struct SatakeSpec {
  enum class Mode { Symbolic, Numeric };
  Mode mode = Mode::Symbolic;
  Rational q;
  std::vector<Rational> x;

  static SatakeSpec symbolic() { return {}; }
  // Validates q > 1 and x_i != 0. The unramifiedness condition is checked
  // at use sites, where c is known.
  static SatakeSpec numeric(const Rational& q, std::vector<Rational> x);
};

// Throws UnramifiedError unless x_i / x_j avoids q^{+-1}, ..., q^{+-c}.
void check_unramified(const SatakeSpec& spec, int c);

// q^{q_exponent} times either a symbolic Schur expansion in the Satake
// variables (coefficients polynomial in q) or a single rational value. In
// numeric mode the exponent is folded into the value exactly when integral.
struct WhittakerValue {
  bool zero = false;
  HalfInt q_exponent;
  std::optional<SymFunc> symbolic;
  std::optional<Rational> numeric;

  static WhittakerValue make_zero() {
    WhittakerValue w;
    w.zero = true;
    return w;
  }
};

// -c(k-1)|mu|/2, the delta^{1/2} exponent of the (c^k) parabolic.
HalfInt delta_half_exponent(const Partition& mu, const SpehContext& ctx);

// Main value: delta^{1/2} times the modified Hall-Littlewood polynomial in k
// variables at t = q. Requires l(mu) <= c.
WhittakerValue speh_value(const Partition& mu, const SpehContext& ctx, const SatakeSpec& spec);

// Cartan-coordinate version: zero when the last entry is negative, otherwise
// trailing zeros are stripped and speh_value applies.
WhittakerValue speh_value_tuple(const WeaklyDecreasingTuple& tuple, const SpehContext& ctx,
                                const SatakeSpec& spec);

// Whittaker-model value: q^{-|lambda|(k-1)/2 + n(lambda)} s_lambda. Requires
// l(lambda) <= k.
WhittakerValue shintani_value(const Partition& lambda, int k, const SatakeSpec& spec);

// Right-hand side of the Schur-expansion corollary:
// q^{-m(c-1)(k-1)/2} sum_lambda q^{-n(lambda)} Ktilde_{lambda,mu}(q) W(lambda),
// assembled from cocharge_kostka and shintani_value. Equals speh_value.
WhittakerValue corollary_expansion(const Partition& mu, const SpehContext& ctx,
                                   const SatakeSpec& spec);

// Bihomogeneous symmetric function: monomial basis in the x group tensor
// monomial basis in the y group, rational-function coefficients in q.
struct BiSymFunc {
  int x_vars = 0;
  int y_vars = 0;
  int degree = 0;
  std::map<std::pair<Partition, Partition>, RatFunc> terms;

  void add(const Partition& kx, const Partition& ky, const RatFunc& c);
  // term-by-term tensor accumulation of scale * fx (x) fy; both monomial basis
  void add_tensor(const SymFunc& fx, const SymFunc& fy, const RatFunc& scale);
  friend bool operator==(const BiSymFunc& a, const BiSymFunc& b) = default;
};

struct TruncatedSeries {
  enum class Mode { Symbolic, Numeric };
  Mode mode = Mode::Symbolic;
  int max_degree = 0;
  std::vector<BiSymFunc> sym_coeffs;  // symbolic mode, indexed 0..max_degree
  std::vector<Rational> num_coeffs;   // numeric mode
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;
};

// sum_lambda q^{c(k-1)|lambda|/2 - n(lambda)} P_lambda(x; q^{-1})
//            * [speh_value(lambda)] * T^{|lambda|}, truncated at max_degree.
// The two half-integer exponents cancel degree by degree (asserted).
TruncatedSeries zeta_series_lhs(const SpehContext& ctx, int max_degree);
TruncatedSeries zeta_series_lhs(const SpehContext& ctx, int max_degree,
                                const std::vector<Rational>& x, const std::vector<Rational>& y,
                                const Rational& q);

// Cauchy side: coefficient of T^m is sum_{lambda |- m} s_lambda(x) s_lambda(y).
TruncatedSeries zeta_series_rhs(const SpehContext& ctx, int max_degree);
TruncatedSeries zeta_series_rhs(const SpehContext& ctx, int max_degree,
                                const std::vector<Rational>& x, const std::vector<Rational>& y);

}  // namespace hlwhit
