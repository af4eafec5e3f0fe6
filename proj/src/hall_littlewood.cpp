#include "hlwhit/hall_littlewood.hpp"

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace hlwhit {

namespace {

// --------------------------------------------------------------------------
// Symmetrization engine.
//
// P_lambda * prod_{i>=0} [alpha_i]_t!  =  AntiSym(x^lambda * W) / Vandermonde,
// where W = prod_{i<j} (x_i - t x_j). We expand x^lambda * W once, collecting
// like monomials; a monomial with two equal finalized exponents cannot survive
// antisymmetrization, so those are pruned as soon as a coordinate stops
// receiving factors (coordinate i is final once all (x_i - t x_j) factors are
// absorbed). The surviving alternants divide by the Vandermonde via
// a_{mu+rho} / a_rho = s_mu.
//
// Exponents are packed 5 bits per variable into a uint64 key; coefficients are
// integer t-polynomials (subset counts, far below the int64 range for the
// variable counts the pack guard admits).

constexpr int kMaxVars = 12;
constexpr int kMaxPackedExp = 31;

using PolyZ = std::vector<long long>;  // ascending t-coefficients

void add_scaled(PolyZ& dst, const PolyZ& src, int shift, long long scale) {
  if (dst.size() < src.size() + static_cast<size_t>(shift))
    dst.resize(src.size() + static_cast<size_t>(shift), 0);
  for (size_t i = 0; i < src.size(); ++i)
    dst[i + static_cast<size_t>(shift)] += scale * src[i];
}

int unpack(uint64_t key, int i) { return static_cast<int>((key >> (5 * i)) & 0x1f); }

SymFunc hl_p_schur_uncached(const Partition& lambda, int n) {
  if (lambda.length() > n)
    throw std::invalid_argument("hl_p: partition " + lambda.str() + " longer than " +
                                std::to_string(n) + " variables");
  if (n < 1) throw std::invalid_argument("hl_p: need at least one variable");
  if (n > kMaxVars || lambda.part(0) + n - 1 > kMaxPackedExp)
    throw std::invalid_argument("hl_p: size exceeds the symmetrization guard");

  std::unordered_map<uint64_t, PolyZ> cur;
  uint64_t key0 = 0;
  for (int i = 0; i < lambda.length(); ++i)
    key0 |= static_cast<uint64_t>(lambda.part(i)) << (5 * i);
  cur.emplace(key0, PolyZ{1});

  for (int i = 0; i + 1 < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::unordered_map<uint64_t, PolyZ> next;
      next.reserve(cur.size() * 2);
      for (const auto& [key, poly] : cur) {
        add_scaled(next[key + (uint64_t(1) << (5 * i))], poly, 0, 1);
        add_scaled(next[key + (uint64_t(1) << (5 * j))], poly, 1, -1);
      }
      cur = std::move(next);
    }
    // Coordinate i is final: monomials with a repeat among 0..i die.
    for (auto it = cur.begin(); it != cur.end();) {
      int ei = unpack(it->first, i);
      bool repeat = false;
      for (int a = 0; a < i && !repeat; ++a) repeat = (unpack(it->first, a) == ei);
      it = repeat ? cur.erase(it) : ++it;
    }
  }

  // Collect alternants: sort each exponent vector to its strictly decreasing
  // representative, fold the sign, subtract the staircase.
  std::map<Partition, PolyZ> alternants;
  std::vector<int> e(static_cast<size_t>(n));
  for (const auto& [key, poly] : cur) {
    bool skip = false;
    for (int i = 0; i < n; ++i) e[static_cast<size_t>(i)] = unpack(key, i);
    for (int a = 0; a < n - 1 && !skip; ++a) skip = (e[static_cast<size_t>(a)] == e[static_cast<size_t>(n - 1)]);
    if (skip) continue;
    int inversions = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (e[static_cast<size_t>(a)] < e[static_cast<size_t>(b)]) ++inversions;
    std::vector<int> sorted = e;
    std::sort(sorted.rbegin(), sorted.rend());
    std::vector<int> mu;
    for (int i = 0; i < n; ++i) {
      int v = sorted[static_cast<size_t>(i)] - (n - 1 - i);
      if (v < 0) throw std::logic_error("hl_p: alternant below the staircase");
      mu.push_back(v);
    }
    while (!mu.empty() && mu.back() == 0) mu.pop_back();
    add_scaled(alternants[Partition(std::move(mu))], poly, 0, inversions % 2 ? -1 : 1);
  }

  // Normalization 1 / prod_{i>=0} [alpha_i]_t! with alpha_0 = n - l(lambda).
  Poly norm = q_factorial(n - lambda.length());
  for (int j = 1; j <= lambda.part(0); ++j) norm *= q_factorial(lambda.multiplicity(j));

  SymFunc out(lambda.size(), n, Basis::Schur);
  for (const auto& [mu, polyz] : alternants) {
    std::vector<Rational> coeffs;
    coeffs.reserve(polyz.size());
    for (long long v : polyz) coeffs.emplace_back(Rational(static_cast<long>(v)));
    RatFunc c = RatFunc(Poly(std::move(coeffs))) / RatFunc(norm);
    if (c.is_zero()) continue;
    if (!c.is_polynomial())
      throw std::logic_error("hl_p: symmetrization did not cancel to a polynomial");
    out.set_coeff(mu, c);
  }
  return out;
}

std::map<std::pair<Partition, int>, SymFunc> g_hlp_cache;
std::mutex g_hlp_mutex;

// Full Schur expansion of H_mu over |mu| variables (no length truncation).
std::map<Partition, SymFunc> g_transformed_cache;
std::mutex g_transformed_mutex;

SymFunc transformed_h_full(const Partition& mu) {
  {
    std::lock_guard<std::mutex> lock(g_transformed_mutex);
    auto it = g_transformed_cache.find(mu);
    if (it != g_transformed_cache.end()) return it->second;
  }
  int m = std::max(mu.size(), 1);
  SymFunc q = hl_p_schur(mu, m).scaled(RatFunc(b_factor(mu)));
  SymFunc q_power = convert(q, Basis::PowerSum);
  SymFunc h_power = plethysm_one_minus_t(q_power, PlethysmDirection::Divide);
  SymFunc h_schur = convert(h_power, Basis::Schur);
  if (!h_schur.has_polynomial_coeffs())
    throw std::logic_error("transformed_h: plethysm denominators did not clear for mu=" + mu.str());
  std::lock_guard<std::mutex> lock(g_transformed_mutex);
  return g_transformed_cache.emplace(mu, std::move(h_schur)).first->second;
}

SymFunc restrict_schur(const SymFunc& full, int num_vars) {
  SymFunc out(full.degree(), num_vars, Basis::Schur);
  for (const auto& [key, c] : full.terms())
    if (key.length() <= num_vars) out.set_coeff(key, c);
  return out;
}

}  // namespace

SymFunc hl_p_schur(const Partition& lambda, int num_vars) {
  auto key = std::make_pair(lambda, num_vars);
  {
    std::lock_guard<std::mutex> lock(g_hlp_mutex);
    auto it = g_hlp_cache.find(key);
    if (it != g_hlp_cache.end()) return it->second;
  }
  SymFunc result = hl_p_schur_uncached(lambda, num_vars);
  std::lock_guard<std::mutex> lock(g_hlp_mutex);
  return g_hlp_cache.emplace(std::move(key), std::move(result)).first->second;
}

SymFunc hl_p(const Partition& lambda, int num_vars) {
  SymFunc m = convert(hl_p_schur(lambda, num_vars), Basis::Monomial);
  if (!m.has_polynomial_coeffs())
    throw std::logic_error("hl_p: non-polynomial monomial coefficient");
  return m;
}

Poly b_factor(const Partition& lambda) {
  Poly one_minus_t = Poly(Rational(1)) - Poly::variable();
  Poly out = one_minus_t.pow(lambda.length());
  for (int j = 1; j <= lambda.part(0); ++j) out *= q_factorial(lambda.multiplicity(j));
  return out;
}

SymFunc hl_q(const Partition& lambda, int num_vars) {
  return hl_p(lambda, num_vars).scaled(RatFunc(b_factor(lambda)));
}

SymFunc transformed_h(const Partition& mu, int num_vars) {
  if (num_vars < 1) throw std::invalid_argument("transformed_h: need at least one variable");
  return restrict_schur(transformed_h_full(mu), num_vars);
}

SymFunc modified_h(const Partition& mu, int num_vars) {
  if (num_vars < 1) throw std::invalid_argument("modified_h: need at least one variable");
  const SymFunc full = transformed_h_full(mu);
  long shift = mu.n_stat();
  SymFunc out(full.degree(), num_vars, Basis::Schur);
  for (const auto& [key, c] : full.terms()) {
    if (key.length() > num_vars) continue;
    auto [deg, rev] = c.as_poly().inverse_variable();
    if (deg > shift)
      throw std::logic_error("modified_h: t-reversal left a negative power for mu=" + mu.str());
    out.set_coeff(key, RatFunc(rev.shifted(static_cast<int>(shift) - deg)));
  }
  return out;
}

Poly kostka_foulkes(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("kostka_foulkes: size mismatch");
  return transformed_h_full(mu).coeff(lambda).as_poly();
}

Poly cocharge_kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw std::invalid_argument("cocharge_kostka: size mismatch");
  Poly k = kostka_foulkes(lambda, mu);
  if (k.is_zero()) return k;
  auto [deg, rev] = k.inverse_variable();
  long shift = mu.n_stat();
  if (deg > shift)
    throw std::logic_error("cocharge_kostka: non-polynomial reversal");
  return rev.shifted(static_cast<int>(shift) - deg);
}

KostkaFoulkesTable kostka_foulkes_table(int m, bool cocharge) {
  KostkaFoulkesTable table;
  table.degree = m;
  auto parts = enumerate_partitions(m);
  for (const auto& lambda : parts)
    for (const auto& mu : parts)
      table.entries[{lambda, mu}] =
          cocharge ? cocharge_kostka(lambda, mu) : kostka_foulkes(lambda, mu);
  return table;
}

}  // namespace hlwhit
