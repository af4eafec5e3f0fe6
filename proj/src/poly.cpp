#include "hlwhit/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace hlwhit {

namespace {
const Rational kZero(0);
}

Poly::Poly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::variable() { return monomial(Rational(1), 1); }

Poly Poly::monomial(const Rational& c, int exp) {
  if (exp < 0) throw std::invalid_argument("Poly::monomial: negative exponent");
  Poly p;
  if (c != 0) {
    p.c_.assign(static_cast<size_t>(exp) + 1, kZero);
    p.c_.back() = c;
  }
  return p;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool Poly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

const Rational& Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(i)];
}

const Rational& Poly::leading() const {
  if (is_zero()) throw std::logic_error("Poly::leading on zero polynomial");
  return c_.back();
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& x : out.c_) x = -x;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Poly out;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  out.trim();
  return out;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::scaled(const Rational& s) const {
  if (s == 0) return Poly();
  Poly out(*this);
  for (auto& x : out.c_) x *= s;
  return out;
}

Poly Poly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("Poly::shifted: negative shift");
  if (is_zero()) return Poly();
  Poly out;
  out.c_.assign(c_.size() + static_cast<size_t>(k), kZero);
  for (size_t i = 0; i < c_.size(); ++i) out.c_[i + static_cast<size_t>(k)] = c_[i];
  return out;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("Poly::pow: negative exponent");
  Poly out = Rational(1);
  Poly base(*this);
  while (e) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / leading());
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("Poly::divmod: division by zero");
  Poly r(a);
  Poly q;
  if (r.degree() >= b.degree())
    q.c_.assign(static_cast<size_t>(r.degree() - b.degree()) + 1, kZero);
  const Rational lead_inv = Rational(1) / b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    Rational factor = r.leading() * lead_inv;
    q.c_[static_cast<size_t>(shift)] = factor;
    for (size_t i = 0; i < b.c_.size(); ++i)
      r.c_[i + static_cast<size_t>(shift)] -= factor * b.c_[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r).monic();
  }
  return x.monic();
}

Rational Poly::eval(const Rational& x) const {
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

std::pair<int, Poly> Poly::inverse_variable() const {
  if (is_zero()) return {0, Poly()};
  Poly rev;
  rev.c_.assign(c_.rbegin(), c_.rend());
  rev.trim();
  return {degree(), rev};
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    bool unit = (a == 1);
    if (i == 0) {
      os << a.get_str();
    } else {
      if (!unit) {
        if (a.get_den() == 1)
          os << a.get_str();
        else
          os << "(" << a.get_str() << ")";
      }
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

Poly q_int(int k) {
  if (k < 0) throw std::invalid_argument("q_int: negative argument");
  std::vector<Rational> c(static_cast<size_t>(k), Rational(1));
  return Poly(std::move(c));
}

Poly q_factorial(int k) {
  Poly out = Rational(1);
  for (int j = 1; j <= k; ++j) out *= q_int(j);
  return out;
}

}  // namespace hlwhit
