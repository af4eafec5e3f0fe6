#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hlwhit/rational.hpp"

namespace hlwhit {

// Univariate polynomial over Q. Dense ascending coefficient vector, trailing
// zeros trimmed, so the zero polynomial is the empty vector. The variable is
// formal; rendering chooses its name (t for Hall-Littlewood work, q for
// Whittaker values).
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // constant (implicit: scalars promote freely)
  Poly(long c) : Poly(Rational(c)) {}
  explicit Poly(std::vector<Rational> coeffs);

  static Poly variable();
  static Poly monomial(const Rational& c, int exp);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  const Rational& coeff(int i) const;
  const Rational& leading() const;
  const Rational& constant_term() const { return coeff(0); }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly scaled(const Rational& s) const;
  Poly shifted(int k) const;  // multiply by t^k, k >= 0
  Poly pow(int e) const;
  Poly monic() const;

  // Exact Euclidean division: a = q*b + r with deg r < deg b.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  // Monic gcd by the Euclidean algorithm; gcd(0,0) = 0.
  static Poly gcd(const Poly& a, const Poly& b);

  Rational eval(const Rational& x) const;

  // p(1/t) = t^{-shift} * result with shift = deg p and result the
  // coefficient-reversed polynomial. Zero maps to (0, 0).
  std::pair<int, Poly> inverse_variable() const;

  std::string str(const std::string& var = "t") const;

 private:
  std::vector<Rational> c_;
  void trim();
};

// [k]_t = 1 + t + ... + t^{k-1} and [k]_t! = prod_{j<=k} [j]_t.
Poly q_int(int k);
Poly q_factorial(int k);

}  // namespace hlwhit
