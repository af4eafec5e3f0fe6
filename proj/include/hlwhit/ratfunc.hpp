#pragma once

#include <string>

#include "hlwhit/poly.hpp"

namespace hlwhit {

// Reduced rational function in one formal variable: num/den with
// gcd(num, den) = 1 and den monic, so equality is representative equality.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Rational(1)) {}
  RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}
  RatFunc(long c) : num_(Rational(c)), den_(Rational(1)) {}
  RatFunc(Poly num) : num_(std::move(num)), den_(Rational(1)) {}
  RatFunc(Poly num, Poly den);  // reduces; throws on den = 0

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  // The polynomial value; throws when the denominator is nontrivial.
  const Poly& as_poly() const;

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFunc pow(int e) const;  // e may be negative (throws on 0^negative)

  Rational eval(const Rational& x) const;  // throws if den(x) = 0
  // Substitute the variable by another rational function.
  RatFunc compose(const RatFunc& value) const;

  std::string str(const std::string& var = "t") const;

 private:
  Poly num_, den_;
  void reduce();
};

inline RatFunc variable_ratfunc() { return RatFunc(Poly::variable()); }

}  // namespace hlwhit
