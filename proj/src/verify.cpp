#include "hlwhit/verify.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "hlwhit/oracles.hpp"

namespace hlwhit {
namespace verify {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
  SuiteResult& r;
  Clock::time_point start = Clock::now();
  explicit Timer(SuiteResult& result) : r(result) {}
  ~Timer() {
    r.elapsed_ms =
        std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count() / 1000.0;
  }
};

Rational random_nonzero(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  long n = 0;
  while (n == 0) n = num(rng);
  return rational(n, den(rng));
}

std::vector<Rational> random_point(std::mt19937_64& rng, int n) {
  std::vector<Rational> out;
  out.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(random_nonzero(rng));
  return out;
}

// Random Satake data satisfying the unramifiedness condition for this c.
SatakeSpec random_satake(std::mt19937_64& rng, int k, int c) {
  std::uniform_int_distribution<long> qd(2, 7);
  for (int attempt = 0; attempt < 200; ++attempt) {
    Rational q(qd(rng));
    std::vector<Rational> x = random_point(rng, k);
    try {
      SatakeSpec spec = SatakeSpec::numeric(q, std::move(x));
      check_unramified(spec, c);
      return spec;
    } catch (const UnramifiedError&) {
      continue;
    }
  }
  throw std::logic_error("random_satake: could not draw an unramified point");
}

bool same_value(const WhittakerValue& a, const WhittakerValue& b) {
  if (a.zero != b.zero) return false;
  if (a.zero) return true;
  if (!(a.q_exponent == b.q_exponent)) return false;
  if (a.symbolic.has_value() != b.symbolic.has_value()) return false;
  if (a.numeric.has_value() != b.numeric.has_value()) return false;
  if (a.symbolic && !(convert(*a.symbolic, Basis::Schur) == convert(*b.symbolic, Basis::Schur)))
    return false;
  if (a.numeric && *a.numeric != *b.numeric) return false;
  return true;
}

}  // namespace

void SuiteResult::record(const std::string& label, bool pass, const std::string& detail) {
  ++cases;
  case_lines.emplace_back(label, pass);
  if (!pass) {
    ++failures;
    if (first_violation.empty())
      first_violation = detail.empty() ? label : label + ": " + detail;
  }
}

SuiteResult duality(int max_size) {
  SuiteResult r;
  r.suite = "duality";
  Timer timer(r);
  for (int m = 0; m <= max_size; ++m) {
    int n = std::max(m, 1);
    auto parts = enumerate_partitions(m);
    for (const auto& lam : parts) {
      SymFunc p = hl_p_schur(lam, n);
      for (const auto& mu : parts) {
        RatFunc v = pairing(p, transformed_h(mu, n));
        RatFunc expect(Rational(lam == mu ? 1 : 0));
        r.record("<P_" + lam.str() + ", H_" + mu.str() + ">", v == expect,
                 "pairing = " + v.str());
      }
    }
  }
  return r;
}

SuiteResult charge(int max_equiv, int max_structure) {
  SuiteResult r;
  r.suite = "charge";
  Timer timer(r);
  for (int m = 0; m <= max_equiv; ++m) {
    auto parts = enumerate_partitions(m);
    for (const auto& lam : parts)
      for (const auto& mu : parts) {
        Poly pipeline = kostka_foulkes(lam, mu);
        Poly oracle = oracles::charge_kostka_oracle(lam, mu);
        r.record("K[" + lam.str() + ";" + mu.str() + "] pipeline==charge", pipeline == oracle,
                 "pipeline " + pipeline.str() + " vs charge " + oracle.str());
      }
  }
  for (int m = 0; m <= max_structure; ++m) {
    auto parts = enumerate_partitions(m);
    for (const auto& lam : parts)
      for (const auto& mu : parts) {
        Poly k = kostka_foulkes(lam, mu);
        bool positive = true;
        for (int i = 0; i <= k.degree(); ++i)
          if (k.coeff(i) < 0 || k.coeff(i).get_den() != 1) positive = false;
        bool triangular = dominates(lam, mu) ? true : k.is_zero();
        bool diag = (lam == mu) ? k.is_one() : true;
        r.record("K[" + lam.str() + ";" + mu.str() + "] structure",
                 positive && triangular && diag, "K = " + k.str());
      }
  }
  return r;
}

SuiteResult flag(int max_size, long budget) {
  SuiteResult r;
  r.suite = "flag";
  Timer timer(r);
  for (int m = 1; m <= max_size; ++m) {
    for (const auto& mu : enumerate_partitions(m)) {
      for (unsigned q : {2u, 3u}) {
        SymFunc pipeline = convert(modified_h(mu, m), Basis::Monomial)
                               .substitute_parameter(RatFunc(Rational(static_cast<long>(q))));
        SymFunc flags = oracles::modified_h_via_flags(mu, q, m, budget);
        r.record("H~[" + mu.str() + "] at q=" + std::to_string(q), pipeline == flags);
      }
    }
  }
  return r;
}

SuiteResult zeta(int k, int c, int max_degree, unsigned seed, int points) {
  SuiteResult r;
  r.suite = "zeta";
  Timer timer(r);
  SpehContext ctx{k, c};
  TruncatedSeries lhs = zeta_series_lhs(ctx, max_degree);
  TruncatedSeries rhs = zeta_series_rhs(ctx, max_degree);
  for (int m = 0; m <= max_degree; ++m) {
    std::ostringstream label;
    label << "(k,c)=(" << k << "," << c << ") symbolic T^" << m;
    r.record(label.str(), lhs.sym_coeffs[static_cast<size_t>(m)] == rhs.sym_coeffs[static_cast<size_t>(m)]);
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> qd(2, 9);
  for (int p = 0; p < points; ++p) {
    std::vector<Rational> x = random_point(rng, c);
    std::vector<Rational> y = random_point(rng, k);
    Rational q(qd(rng));
    TruncatedSeries nl = zeta_series_lhs(ctx, max_degree, x, y, q);
    TruncatedSeries nr = zeta_series_rhs(ctx, max_degree, x, y);
    std::ostringstream label;
    label << "(k,c)=(" << k << "," << c << ") numeric point " << (p + 1);
    r.record(label.str(), nl.num_coeffs == nr.num_coeffs);
  }
  return r;
}

SuiteResult cauchy(int k, int c, int max_degree, unsigned seed, int points) {
  SuiteResult r;
  r.suite = "cauchy";
  Timer timer(r);
  SpehContext ctx{k, c};
  std::mt19937_64 rng(seed);
  for (int p = 0; p < points; ++p) {
    std::vector<Rational> x = random_point(rng, c);
    std::vector<Rational> y = random_point(rng, k);
    std::vector<Rational> product = oracles::cauchy_truncated(x, y, max_degree);
    TruncatedSeries schur = zeta_series_rhs(ctx, max_degree, x, y);
    std::ostringstream label;
    label << "cauchy point " << (p + 1);
    r.record(label.str(), product == schur.num_coeffs);
  }
  return r;
}

SuiteResult shintani(int max_m, int max_k, unsigned seed) {
  SuiteResult r;
  r.suite = "shintani";
  Timer timer(r);
  std::mt19937_64 rng(seed);
  for (int k = 1; k <= max_k; ++k) {
    for (int m = 0; m <= max_m; ++m) {
      Partition row = m ? Partition({m}) : Partition();
      SpehContext ctx{k, 1};
      WhittakerValue a = speh_value(row, ctx, SatakeSpec::symbolic());
      WhittakerValue b = shintani_value(row, k, SatakeSpec::symbolic());
      std::ostringstream label;
      label << "c=1, mu=(" << m << "), k=" << k;
      r.record(label.str() + " symbolic", same_value(a, b));

      SatakeSpec spec = random_satake(rng, k, 1);
      WhittakerValue an = speh_value(row, ctx, spec);
      WhittakerValue bn = shintani_value(row, k, spec);
      r.record(label.str() + " numeric", same_value(an, bn));
    }
  }
  return r;
}

SuiteResult corollary(int max_size, int max_k, int max_c, unsigned seed) {
  SuiteResult r;
  r.suite = "corollary";
  Timer timer(r);
  std::mt19937_64 rng(seed);
  for (int k = 1; k <= max_k; ++k) {
    for (int c = 1; c <= max_c; ++c) {
      SpehContext ctx{k, c};
      for (int m = 0; m <= max_size; ++m) {
        for (const auto& mu : enumerate_partitions(m, c)) {
          WhittakerValue direct = speh_value(mu, ctx, SatakeSpec::symbolic());
          WhittakerValue expanded = corollary_expansion(mu, ctx, SatakeSpec::symbolic());
          std::ostringstream label;
          label << "mu=" << mu.str() << " (k,c)=(" << k << "," << c << ")";
          r.record(label.str(), same_value(direct, expanded));
        }
      }
      // one numeric spot check per context
      SatakeSpec spec = random_satake(rng, k, c);
      for (const auto& mu : enumerate_partitions(std::min(max_size, 3), c)) {
        WhittakerValue direct = speh_value(mu, ctx, spec);
        WhittakerValue expanded = corollary_expansion(mu, ctx, spec);
        std::ostringstream label;
        label << "numeric mu=" << mu.str() << " (k,c)=(" << k << "," << c << ")";
        r.record(label.str(), same_value(direct, expanded));
      }
    }
  }
  return r;
}

SuiteResult specialization(int max_p, int max_row, int max_onevar) {
  SuiteResult r;
  r.suite = "specialization";
  Timer timer(r);
  for (int m = 0; m <= max_p; ++m) {
    int n = std::max(m, 1);
    for (const auto& lam : enumerate_partitions(m)) {
      SymFunc p0 = hl_p_schur(lam, n).substitute_parameter(RatFunc(Rational(0)));
      r.record("P_" + lam.str() + "(x;0) = s", p0 == SymFunc::basis_element(Basis::Schur, lam, n));
    }
  }
  for (int m = 1; m <= max_row; ++m) {
    SymFunc h = convert(modified_h(Partition({m}), m), Basis::Monomial);
    bool ok = true;
    for (const auto& lam : enumerate_partitions(m))
      if (!(h.coeff(lam) == RatFunc(Rational(1)))) ok = false;
    r.record("H~_(" + std::to_string(m) + ") = h_" + std::to_string(m), ok);
  }
  for (int m = 1; m <= max_onevar; ++m) {
    for (const auto& mu : enumerate_partitions(m)) {
      SymFunc h = convert(modified_h(mu, 1), Basis::Monomial);
      bool ok = h.terms().size() == 1 && h.coeff(Partition({m})) == RatFunc(Rational(1));
      r.record("H~_" + mu.str() + " in one variable", ok);
    }
  }
  return r;
}

SuiteResult vanishing(int bound, int max_len) {
  SuiteResult r;
  r.suite = "vanishing";
  Timer timer(r);
  SpehContext ctx{2, static_cast<int>(max_len)};

  // normalization: the empty partition evaluates to exactly (0, 1)
  WhittakerValue base = speh_value(Partition(), ctx, SatakeSpec::symbolic());
  bool norm_ok = !base.zero && base.q_exponent.doubled() == 0 && base.symbolic &&
                 *base.symbolic == SymFunc::one(ctx.k, Basis::Schur);
  r.record("speh_value(empty) = (0, 1)", norm_ok);

  // every weakly decreasing tuple with entries in [-bound, bound]
  std::vector<long> acc;
  std::function<void(long)> walk = [&](long max_entry) {
    if (!acc.empty()) {
      WeaklyDecreasingTuple tuple(acc);
      WhittakerValue v = speh_value_tuple(tuple, ctx, SatakeSpec::symbolic());
      bool expect_zero = tuple.last_negative();
      r.record("tuple (" + tuple.str() + ")", v.zero == expect_zero);
    }
    if (static_cast<int>(acc.size()) == max_len) return;
    for (long e = max_entry; e >= -bound; --e) {
      acc.push_back(e);
      walk(e);
      acc.pop_back();
    }
  };
  walk(bound);
  return r;
}

}  // namespace verify
}  // namespace hlwhit
