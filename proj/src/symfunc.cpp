#include "hlwhit/symfunc.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace hlwhit {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::Monomial: return "monomial";
    case Basis::Schur: return "schur";
    case Basis::PowerSum: return "power_sum";
    case Basis::Homogeneous: return "homogeneous";
  }
  return "?";
}

char basis_symbol(Basis b) {
  switch (b) {
    case Basis::Monomial: return 'm';
    case Basis::Schur: return 's';
    case Basis::PowerSum: return 'p';
    case Basis::Homogeneous: return 'h';
  }
  return '?';
}

Basis parse_basis(const std::string& name) {
  if (name == "monomial" || name == "m") return Basis::Monomial;
  if (name == "schur" || name == "s") return Basis::Schur;
  if (name == "power_sum" || name == "p") return Basis::PowerSum;
  if (name == "homogeneous" || name == "h") return Basis::Homogeneous;
  throw std::invalid_argument("parse_basis: unknown basis '" + name + "'");
}

SymFunc::SymFunc(int degree, int num_vars, Basis basis)
    : degree_(degree), num_vars_(num_vars), basis_(basis) {
  if (degree < 0) throw std::invalid_argument("SymFunc: negative degree");
  if (num_vars < 1) throw std::invalid_argument("SymFunc: need at least one variable");
}

SymFunc SymFunc::one(int num_vars, Basis basis) {
  SymFunc f(0, num_vars, basis);
  f.set_coeff(Partition(), RatFunc(Rational(1)));
  return f;
}

SymFunc SymFunc::basis_element(Basis basis, const Partition& lambda, int num_vars) {
  SymFunc f(lambda.size(), num_vars, basis);
  f.set_coeff(lambda, RatFunc(Rational(1)));
  return f;
}

void SymFunc::check_key(const Partition& key) const {
  if (key.size() != degree_)
    throw std::invalid_argument("SymFunc: key " + key.str() + " does not partition degree " +
                                std::to_string(degree_));
  if ((basis_ == Basis::Monomial || basis_ == Basis::Schur) && key.length() > num_vars_)
    throw std::invalid_argument("SymFunc: key " + key.str() + " longer than " +
                                std::to_string(num_vars_) + " variables");
}

const RatFunc& SymFunc::coeff(const Partition& key) const {
  static const RatFunc kZero;
  auto it = terms_.find(key);
  return it == terms_.end() ? kZero : it->second;
}

void SymFunc::set_coeff(const Partition& key, RatFunc value) {
  check_key(key);
  if (value.is_zero())
    terms_.erase(key);
  else
    terms_[key] = std::move(value);
}

void SymFunc::add_coeff(const Partition& key, const RatFunc& value) {
  check_key(key);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (!value.is_zero()) terms_.emplace(key, value);
    return;
  }
  it->second += value;
  if (it->second.is_zero()) terms_.erase(it);
}

SymFunc SymFunc::scaled(const RatFunc& s) const {
  SymFunc out(degree_, num_vars_, basis_);
  if (s.is_zero()) return out;
  for (const auto& [key, c] : terms_) out.terms_[key] = c * s;
  return out;
}

SymFunc operator+(const SymFunc& a, const SymFunc& b) {
  if (a.degree_ != b.degree_ || a.num_vars_ != b.num_vars_ || a.basis_ != b.basis_)
    throw std::invalid_argument("SymFunc: mismatched operands in +");
  SymFunc out = a;
  for (const auto& [key, c] : b.terms_) out.add_coeff(key, c);
  return out;
}

SymFunc operator-(const SymFunc& a, const SymFunc& b) {
  return a + b.scaled(RatFunc(Rational(-1)));
}

SymFunc SymFunc::substitute_parameter(const RatFunc& value) const {
  SymFunc out(degree_, num_vars_, basis_);
  for (const auto& [key, c] : terms_) out.set_coeff(key, c.compose(value));
  return out;
}

bool SymFunc::has_polynomial_coeffs() const {
  for (const auto& [key, c] : terms_)
    if (!c.is_polynomial()) return false;
  return true;
}

std::string SymFunc::str(const std::string& coeff_var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (degree_ == 0) {
      os << c.str(coeff_var);
      continue;
    }
    std::string cs = c.str(coeff_var);
    std::string sym = std::string(1, basis_symbol(basis_)) + "[" + key.str() + "]";
    if (c.is_one()) {
      os << sym;
    } else if (cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos) {
      os << "(" << cs << ")*" << sym;
    } else {
      os << cs << "*" << sym;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Kostka numbers

namespace {

std::map<std::pair<Partition, Partition>, long> g_kostka_memo;
std::mutex g_kostka_mutex;

// Sum over ways of removing a horizontal strip of the last content part.
long kostka_rec(const Partition& shape, const std::vector<int>& content, size_t clen);

void strip_choices(const Partition& shape, int idx, int remaining,
                   std::vector<int>& acc, const std::vector<int>& content,
                   size_t clen, long& total) {
  if (idx == shape.length()) {
    if (remaining == 0) {
      std::vector<int> parts = acc;
      while (!parts.empty() && parts.back() == 0) parts.pop_back();
      total += kostka_rec(Partition(std::move(parts)), content, clen - 1);
    }
    return;
  }
  // interleaving: shape[idx+1] <= new_part <= shape[idx]
  int lo = std::max(shape.part(idx + 1), shape.part(idx) - remaining);
  // rows above are already fixed; keep weak decrease with the previous row
  int hi = idx == 0 ? shape.part(idx) : std::min(shape.part(idx), acc[static_cast<size_t>(idx) - 1]);
  for (int v = hi; v >= lo; --v) {
    acc.push_back(v);
    strip_choices(shape, idx + 1, remaining - (shape.part(idx) - v), acc, content, clen, total);
    acc.pop_back();
  }
}

long kostka_rec(const Partition& shape, const std::vector<int>& content, size_t clen) {
  if (clen == 0) return shape.empty() ? 1 : 0;
  std::vector<int> cvec(content.begin(), content.begin() + static_cast<long>(clen));
  auto key = std::make_pair(shape, Partition(std::move(cvec)));
  {
    std::lock_guard<std::mutex> lock(g_kostka_mutex);
    auto it = g_kostka_memo.find(key);
    if (it != g_kostka_memo.end()) return it->second;
  }
  long total = 0;
  std::vector<int> acc;
  strip_choices(shape, 0, content[clen - 1], acc, content, clen, total);
  std::lock_guard<std::mutex> lock(g_kostka_mutex);
  g_kostka_memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

long kostka_number(const Partition& shape, const Partition& content) {
  if (shape.size() != content.size())
    throw std::invalid_argument("kostka_number: size mismatch");
  return kostka_rec(shape, content.parts(), content.parts().size());
}

// ---------------------------------------------------------------------------
// Transition matrices, one set per degree

namespace {

using Mat = std::vector<std::vector<Rational>>;
using ExpMap = std::map<std::vector<int>, long long>;

ExpMap mult_by_power_sum(const ExpMap& f, int j, int n) {
  ExpMap out;
  for (const auto& [e, c] : f) {
    for (int i = 0; i < n; ++i) {
      std::vector<int> e2 = e;
      e2[static_cast<size_t>(i)] += j;
      out[e2] += c;
    }
  }
  return out;
}

void compositions(int total, int slots, std::vector<int>& acc,
                  const std::function<void(const std::vector<int>&)>& visit) {
  if (slots == 1) {
    acc.push_back(total);
    visit(acc);
    acc.pop_back();
    return;
  }
  for (int v = 0; v <= total; ++v) {
    acc.push_back(v);
    compositions(total - v, slots - 1, acc, visit);
    acc.pop_back();
  }
}

ExpMap mult_by_homogeneous(const ExpMap& f, int j, int n) {
  ExpMap out;
  std::vector<int> acc;
  compositions(j, n, acc, [&](const std::vector<int>& comp) {
    for (const auto& [e, c] : f) {
      std::vector<int> e2 = e;
      for (int i = 0; i < n; ++i) e2[static_cast<size_t>(i)] += comp[static_cast<size_t>(i)];
      out[e2] += c;
    }
  });
  return out;
}

// Reads off the coefficient of each m_kappa: the value at the padded
// weakly-decreasing representative exponent.
std::vector<Rational> monomial_column(const ExpMap& f, const std::vector<Partition>& parts, int n) {
  std::vector<Rational> col(parts.size(), Rational(0));
  for (size_t r = 0; r < parts.size(); ++r) {
    std::vector<int> rep(static_cast<size_t>(n), 0);
    for (int i = 0; i < parts[r].length(); ++i) rep[static_cast<size_t>(i)] = parts[r].part(i);
    auto it = f.find(rep);
    if (it != f.end()) col[r] = Rational(static_cast<long>(it->second));
  }
  return col;
}

Mat invert(Mat a) {
  size_t n = a.size();
  Mat inv(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("transition matrix is singular");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational d = a[col][col];
    for (size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

struct DegreeTables {
  std::vector<Partition> parts;  // decreasing lex
  std::map<Partition, int> index;
  // to_mono[b] * coefficient-vector-in-basis-b = coefficient vector in m.
  Mat to_mono[3], from_mono[3];  // 0 = Schur, 1 = PowerSum, 2 = Homogeneous
};

int basis_slot(Basis b) {
  switch (b) {
    case Basis::Schur: return 0;
    case Basis::PowerSum: return 1;
    case Basis::Homogeneous: return 2;
    default: throw std::logic_error("basis_slot: monomial has no slot");
  }
}

std::unique_ptr<DegreeTables> build_degree_tables(int m) {
  auto T = std::make_unique<DegreeTables>();
  T->parts = enumerate_partitions(m);
  for (size_t i = 0; i < T->parts.size(); ++i) T->index[T->parts[i]] = static_cast<int>(i);
  size_t np = T->parts.size();
  int n = std::max(m, 1);  // m variables suffice for the stable expansions

  for (int b = 0; b < 3; ++b) T->to_mono[b].assign(np, std::vector<Rational>(np, Rational(0)));

  for (size_t c = 0; c < np; ++c) {
    const Partition& lam = T->parts[c];
    // Schur: Kostka numbers.
    for (size_t r = 0; r < np; ++r)
      T->to_mono[0][r][c] = Rational(kostka_number(lam, T->parts[r]));
    // Power sum and homogeneous: expand the products over m variables.
    ExpMap pdict{{std::vector<int>(static_cast<size_t>(n), 0), 1}};
    ExpMap hdict = pdict;
    for (int i = 0; i < lam.length(); ++i) {
      pdict = mult_by_power_sum(pdict, lam.part(i), n);
      hdict = mult_by_homogeneous(hdict, lam.part(i), n);
    }
    auto pcol = monomial_column(pdict, T->parts, n);
    auto hcol = monomial_column(hdict, T->parts, n);
    for (size_t r = 0; r < np; ++r) {
      T->to_mono[1][r][c] = pcol[r];
      T->to_mono[2][r][c] = hcol[r];
    }
  }
  for (int b = 0; b < 3; ++b) T->from_mono[b] = invert(T->to_mono[b]);
  return T;
}

std::map<int, std::unique_ptr<DegreeTables>> g_tables;
std::mutex g_tables_mutex;

const DegreeTables& degree_tables(int m) {
  std::lock_guard<std::mutex> lock(g_tables_mutex);
  auto it = g_tables.find(m);
  if (it == g_tables.end()) it = g_tables.emplace(m, build_degree_tables(m)).first;
  return *it->second;
}

std::vector<RatFunc> apply_mat(const Mat& M, const std::vector<RatFunc>& v) {
  std::vector<RatFunc> out(v.size());
  for (size_t r = 0; r < M.size(); ++r) {
    RatFunc acc;
    for (size_t c = 0; c < v.size(); ++c) {
      if (v[c].is_zero() || M[r][c] == 0) continue;
      acc += v[c] * RatFunc(M[r][c]);
    }
    out[r] = std::move(acc);
  }
  return out;
}

}  // namespace

SymFunc convert(const SymFunc& f, Basis target) {
  if (f.basis() == target) return f;
  const DegreeTables& T = degree_tables(f.degree());
  std::vector<RatFunc> v(T.parts.size());
  for (const auto& [key, c] : f.terms()) v[static_cast<size_t>(T.index.at(key))] = c;

  if (f.basis() != Basis::Monomial) v = apply_mat(T.to_mono[basis_slot(f.basis())], v);
  // Impose the variable count: monomials longer than num_vars vanish.
  for (size_t i = 0; i < T.parts.size(); ++i)
    if (T.parts[i].length() > f.num_vars()) v[i] = RatFunc();
  if (target != Basis::Monomial) v = apply_mat(T.from_mono[basis_slot(target)], v);

  SymFunc out(f.degree(), f.num_vars(), target);
  bool capped = (target == Basis::Monomial || target == Basis::Schur);
  for (size_t i = 0; i < T.parts.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (capped && T.parts[i].length() > f.num_vars()) {
      // Schur coefficients beyond the variable count vanish identically;
      // anything else here means the transition data is wrong.
      if (target == Basis::Schur)
        throw std::logic_error("convert: nonzero Schur coefficient beyond variable count");
      continue;
    }
    out.set_coeff(T.parts[i], v[i]);
  }
  return out;
}

RatFunc pairing(const SymFunc& f, const SymFunc& g) {
  if (f.degree() != g.degree()) throw std::invalid_argument("pairing: degree mismatch");
  if (f.num_vars() != g.num_vars())
    throw std::invalid_argument("pairing: variable-count mismatch");
  SymFunc fs = convert(f, Basis::Schur);
  SymFunc gs = convert(g, Basis::Schur);
  RatFunc acc;
  for (const auto& [key, c] : fs.terms()) {
    const RatFunc& d = gs.coeff(key);
    if (!d.is_zero()) acc += c * d;
  }
  return acc;
}

namespace {

// Visits every distinct arrangement of the padded exponent vector.
template <class F>
void for_each_arrangement(const Partition& key, int n, F&& visit) {
  std::vector<int> v(static_cast<size_t>(n), 0);
  for (int i = 0; i < key.length(); ++i) v[static_cast<size_t>(i)] = key.part(i);
  std::sort(v.begin(), v.end());
  do {
    visit(v);
  } while (std::next_permutation(v.begin(), v.end()));
}

}  // namespace

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
  if (f.num_vars() != g.num_vars())
    throw std::invalid_argument("multiply: variable-count mismatch");
  int n = f.num_vars();
  SymFunc fm = convert(f, Basis::Monomial);
  SymFunc gm = convert(g, Basis::Monomial);

  std::map<std::vector<int>, RatFunc> prod;
  for (const auto& [ka, ca] : fm.terms()) {
    for (const auto& [kb, cb] : gm.terms()) {
      RatFunc c = ca * cb;
      for_each_arrangement(ka, n, [&](const std::vector<int>& ea) {
        for_each_arrangement(kb, n, [&](const std::vector<int>& eb) {
          std::vector<int> e(static_cast<size_t>(n));
          for (int i = 0; i < n; ++i)
            e[static_cast<size_t>(i)] = ea[static_cast<size_t>(i)] + eb[static_cast<size_t>(i)];
          prod[e] += c;
        });
      });
    }
  }

  SymFunc out(f.degree() + g.degree(), n, Basis::Monomial);
  for (const auto& [e, c] : prod) {
    if (c.is_zero()) continue;
    if (!std::is_sorted(e.rbegin(), e.rend())) continue;  // not the representative
    std::vector<int> parts(e.begin(), e.end());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    out.set_coeff(Partition(std::move(parts)), c);
  }
  return out;
}

RatFunc evaluate(const SymFunc& f, const EvaluationPoint& pt) {
  if (static_cast<int>(pt.size()) != f.num_vars())
    throw std::invalid_argument("evaluate: point length mismatch");
  SymFunc fm = convert(f, Basis::Monomial);
  RatFunc acc;
  for (const auto& [key, c] : fm.terms()) {
    Rational msum(0);
    for_each_arrangement(key, f.num_vars(), [&](const std::vector<int>& e) {
      Rational term(1);
      for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] != 0) term *= pow_rational(pt[i], e[i]);
      }
      msum += term;
    });
    if (msum != 0) acc += c * RatFunc(msum);
  }
  return acc;
}

SymFunc plethysm_one_minus_t(const SymFunc& f, PlethysmDirection dir) {
  if (f.basis() != Basis::PowerSum)
    throw std::invalid_argument("plethysm_one_minus_t: input must be in the power-sum basis");
  SymFunc out(f.degree(), f.num_vars(), Basis::PowerSum);
  for (const auto& [key, c] : f.terms()) {
    RatFunc factor(Rational(1));
    for (int i = 0; i < key.length(); ++i) {
      Poly one_minus_tj = Poly(Rational(1)) - Poly::monomial(Rational(1), key.part(i));
      factor *= RatFunc(one_minus_tj);
    }
    out.set_coeff(key, dir == PlethysmDirection::Divide ? c / factor : c * factor);
  }
  return out;
}

}  // namespace hlwhit
