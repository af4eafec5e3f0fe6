#include "hlwhit/speh.hpp"

namespace hlwhit {

namespace {

void require_context(const SpehContext& ctx) {
  if (ctx.k < 1 || ctx.c < 1)
    throw std::invalid_argument("SpehContext: k and c must be positive");
}

RatFunc q_power(long e) {  // q^e as a rational function of the formal variable
  return RatFunc(Poly::variable()).pow(static_cast<int>(e));
}

// Evaluate a symbolic Schur expansion at the numeric Satake point, returning
// (exponent, value) with the exponent folded in when integral.
WhittakerValue numeric_result(HalfInt exponent, const SymFunc& symbolic, const SatakeSpec& spec) {
  RatFunc in_t = evaluate(symbolic, spec.x);
  Rational value = in_t.eval(spec.q);
  WhittakerValue out;
  if (exponent.is_integral()) {
    out.q_exponent = HalfInt::whole(0);
    out.numeric = pow_q(spec.q, exponent) * value;
  } else {
    out.q_exponent = exponent;
    out.numeric = value;
  }
  return out;
}

}  // namespace

SatakeSpec SatakeSpec::numeric(const Rational& q, std::vector<Rational> x) {
  if (q <= 1) throw std::invalid_argument("SatakeSpec: q must exceed 1");
  for (const auto& v : x)
    if (v == 0) throw std::invalid_argument("SatakeSpec: Satake parameters must be nonzero");
  SatakeSpec s;
  s.mode = Mode::Numeric;
  s.q = q;
  s.x = std::move(x);
  return s;
}

void check_unramified(const SatakeSpec& spec, int c) {
  if (spec.mode != SatakeSpec::Mode::Numeric) return;
  for (size_t i = 0; i < spec.x.size(); ++i) {
    for (size_t j = 0; j < spec.x.size(); ++j) {
      if (i == j) continue;
      Rational ratio = spec.x[i] / spec.x[j];
      Rational p(1);
      for (int d = 1; d <= c; ++d) {
        p *= spec.q;
        if (ratio == p || ratio * p == 1)
          throw UnramifiedError("Satake parameters violate unramifiedness: x_" +
                                std::to_string(i + 1) + "/x_" + std::to_string(j + 1) + " = q^" +
                                (ratio == p ? std::to_string(d) : std::to_string(-d)));
      }
    }
  }
}

HalfInt delta_half_exponent(const Partition& mu, const SpehContext& ctx) {
  require_context(ctx);
  if (mu.length() > ctx.c)
    throw std::invalid_argument("delta_half_exponent: l(mu) exceeds c");
  return HalfInt::of_doubled(-static_cast<long>(ctx.c) * (ctx.k - 1) * mu.size());
}

WhittakerValue speh_value(const Partition& mu, const SpehContext& ctx, const SatakeSpec& spec) {
  require_context(ctx);
  if (mu.length() > ctx.c)
    throw std::invalid_argument("speh_value: l(mu) exceeds c");
  HalfInt exponent = delta_half_exponent(mu, ctx);
  SymFunc value = modified_h(mu, ctx.k);
  if (spec.mode == SatakeSpec::Mode::Numeric) {
    if (static_cast<int>(spec.x.size()) != ctx.k)
      throw std::invalid_argument("speh_value: expected k Satake parameters");
    check_unramified(spec, ctx.c);
    return numeric_result(exponent, value, spec);
  }
  WhittakerValue out;
  out.q_exponent = exponent;
  out.symbolic = std::move(value);
  return out;
}

WhittakerValue speh_value_tuple(const WeaklyDecreasingTuple& tuple, const SpehContext& ctx,
                                const SatakeSpec& spec) {
  require_context(ctx);
  // Vanishing applies before any shape validation.
  if (tuple.last_negative()) return WhittakerValue::make_zero();
  return speh_value(tuple.to_partition(), ctx, spec);
}

WhittakerValue shintani_value(const Partition& lambda, int k, const SatakeSpec& spec) {
  if (k < 1) throw std::invalid_argument("shintani_value: k must be positive");
  if (lambda.length() > k)
    throw std::invalid_argument("shintani_value: l(lambda) exceeds k");
  HalfInt exponent =
      HalfInt::of_doubled(-static_cast<long>(lambda.size()) * (k - 1) + 2 * lambda.n_stat());
  SymFunc value = SymFunc::basis_element(Basis::Schur, lambda, k);
  if (spec.mode == SatakeSpec::Mode::Numeric) {
    if (static_cast<int>(spec.x.size()) != k)
      throw std::invalid_argument("shintani_value: expected k Satake parameters");
    check_unramified(spec, 1);
    return numeric_result(exponent, value, spec);
  }
  WhittakerValue out;
  out.q_exponent = exponent;
  out.symbolic = std::move(value);
  return out;
}

WhittakerValue corollary_expansion(const Partition& mu, const SpehContext& ctx,
                                   const SatakeSpec& spec) {
  require_context(ctx);
  if (mu.length() > ctx.c)
    throw std::invalid_argument("corollary_expansion: l(mu) exceeds c");
  int m = mu.size();
  HalfInt prefactor = HalfInt::of_doubled(-static_cast<long>(m) * (ctx.c - 1) * (ctx.k - 1));
  HalfInt base = delta_half_exponent(mu, ctx);

  SymFunc total(m, ctx.k, Basis::Schur);
  for (const auto& lambda : enumerate_partitions(m, ctx.k)) {
    WhittakerValue w = shintani_value(lambda, ctx.k, SatakeSpec::symbolic());
    // Align this term's exponent with the common delta^{1/2} exponent; the
    // difference is an integer power of q absorbed into the coefficient.
    HalfInt shift = prefactor + w.q_exponent - base;
    RatFunc coeff = RatFunc(cocharge_kostka(lambda, mu)) * q_power(-lambda.n_stat()) *
                    q_power(shift.as_integer());
    total = total + w.symbolic->scaled(coeff);
  }
  if (!total.has_polynomial_coeffs())
    throw std::logic_error("corollary_expansion: q-powers did not cancel");

  if (spec.mode == SatakeSpec::Mode::Numeric) {
    if (static_cast<int>(spec.x.size()) != ctx.k)
      throw std::invalid_argument("corollary_expansion: expected k Satake parameters");
    check_unramified(spec, ctx.c);
    return numeric_result(base, total, spec);
  }
  WhittakerValue out;
  out.q_exponent = base;
  out.symbolic = std::move(total);
  return out;
}

// ---------------------------------------------------------------------------
// Series

void BiSymFunc::add(const Partition& kx, const Partition& ky, const RatFunc& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(kx, ky);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(std::move(key), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

void BiSymFunc::add_tensor(const SymFunc& fx, const SymFunc& fy, const RatFunc& scale) {
  if (fx.basis() != Basis::Monomial || fy.basis() != Basis::Monomial)
    throw std::invalid_argument("BiSymFunc::add_tensor: expects monomial-basis factors");
  if (scale.is_zero()) return;
  for (const auto& [kx, cx] : fx.terms())
    for (const auto& [ky, cy] : fy.terms()) add(kx, ky, cx * cy * scale);
}

namespace {

// One lambda term of the left-hand side, with its exponent bookkeeping.
struct LhsTerm {
  SymFunc p_part;    // P_lambda(x; q^{-1}), monomial basis in c variables
  SymFunc h_part;    // modified Hall-Littlewood factor of speh_value, monomial, k vars
  RatFunc scale;     // q^{-n(lambda)} and the cancelled half powers
};

LhsTerm lhs_term(const Partition& lambda, const SpehContext& ctx) {
  // Macdonald-side factor q^{c(k-1)m/2 - n(lambda)} P_lambda(x; q^{-1})
  HalfInt macdonald = HalfInt::of_doubled(static_cast<long>(ctx.c) * (ctx.k - 1) * lambda.size());
  WhittakerValue w = speh_value(lambda, ctx, SatakeSpec::symbolic());
  HalfInt residual = macdonald + w.q_exponent;
  // the lemma's q^{+-c(k-1)m/2} factors annihilate
  if (residual.doubled() != 0)
    throw std::logic_error("zeta_series_lhs: half-integer exponents failed to cancel");

  return LhsTerm{
      hl_p(lambda, ctx.c).substitute_parameter(RatFunc(Poly(Rational(1)), Poly::variable())),
      convert(*w.symbolic, Basis::Monomial),
      q_power(-lambda.n_stat()) * q_power(residual.as_integer())};
}

}  // namespace

TruncatedSeries zeta_series_lhs(const SpehContext& ctx, int max_degree) {
  require_context(ctx);
  TruncatedSeries series;
  series.mode = TruncatedSeries::Mode::Symbolic;
  series.max_degree = max_degree;
  for (int m = 0; m <= max_degree; ++m) {
    BiSymFunc coeff;
    coeff.x_vars = ctx.c;
    coeff.y_vars = ctx.k;
    coeff.degree = m;
    for (const auto& lambda : enumerate_partitions(m, ctx.c)) {
      LhsTerm term = lhs_term(lambda, ctx);
      coeff.add_tensor(term.p_part, term.h_part, term.scale);
    }
    series.sym_coeffs.push_back(std::move(coeff));
  }
  return series;
}

TruncatedSeries zeta_series_lhs(const SpehContext& ctx, int max_degree,
                                const std::vector<Rational>& x, const std::vector<Rational>& y,
                                const Rational& q) {
  require_context(ctx);
  if (static_cast<int>(x.size()) != ctx.c || static_cast<int>(y.size()) != ctx.k)
    throw std::invalid_argument("zeta_series_lhs: point sizes must be (c, k)");
  TruncatedSeries series;
  series.mode = TruncatedSeries::Mode::Numeric;
  series.max_degree = max_degree;
  for (int m = 0; m <= max_degree; ++m) {
    Rational acc(0);
    for (const auto& lambda : enumerate_partitions(m, ctx.c)) {
      LhsTerm term = lhs_term(lambda, ctx);
      Rational v = evaluate(term.p_part, x).eval(q) * evaluate(term.h_part, y).eval(q) *
                   term.scale.eval(q);
      acc += v;
    }
    series.num_coeffs.push_back(acc);
  }
  return series;
}

TruncatedSeries zeta_series_rhs(const SpehContext& ctx, int max_degree) {
  require_context(ctx);
  TruncatedSeries series;
  series.mode = TruncatedSeries::Mode::Symbolic;
  series.max_degree = max_degree;
  for (int m = 0; m <= max_degree; ++m) {
    BiSymFunc coeff;
    coeff.x_vars = ctx.c;
    coeff.y_vars = ctx.k;
    coeff.degree = m;
    for (const auto& lambda : enumerate_partitions(m)) {
      if (lambda.length() > ctx.c || lambda.length() > ctx.k) continue;  // s vanishes
      SymFunc sx = convert(SymFunc::basis_element(Basis::Schur, lambda, ctx.c), Basis::Monomial);
      SymFunc sy = convert(SymFunc::basis_element(Basis::Schur, lambda, ctx.k), Basis::Monomial);
      coeff.add_tensor(sx, sy, RatFunc(Rational(1)));
    }
    series.sym_coeffs.push_back(std::move(coeff));
  }
  return series;
}

TruncatedSeries zeta_series_rhs(const SpehContext& ctx, int max_degree,
                                const std::vector<Rational>& x, const std::vector<Rational>& y) {
  require_context(ctx);
  if (static_cast<int>(x.size()) != ctx.c || static_cast<int>(y.size()) != ctx.k)
    throw std::invalid_argument("zeta_series_rhs: point sizes must be (c, k)");
  TruncatedSeries series;
  series.mode = TruncatedSeries::Mode::Numeric;
  series.max_degree = max_degree;
  for (int m = 0; m <= max_degree; ++m) {
    Rational acc(0);
    for (const auto& lambda : enumerate_partitions(m)) {
      if (lambda.length() > ctx.c || lambda.length() > ctx.k) continue;
      Rational vx = evaluate(SymFunc::basis_element(Basis::Schur, lambda, ctx.c), x).eval(Rational(0));
      Rational vy = evaluate(SymFunc::basis_element(Basis::Schur, lambda, ctx.k), y).eval(Rational(0));
      acc += vx * vy;
    }
    series.num_coeffs.push_back(acc);
  }
  return series;
}

}  // namespace hlwhit
