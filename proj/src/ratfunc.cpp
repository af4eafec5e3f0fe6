#include "hlwhit/ratfunc.hpp"

#include <stdexcept>

namespace hlwhit {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = Poly(Rational(1));
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (!g.is_one()) {
    num_ = Poly::divmod(num_, g).first;
    den_ = Poly::divmod(den_, g).first;
  }
  Rational lead = den_.leading();
  if (lead != 1) {
    Rational inv = Rational(1) / lead;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

const Poly& RatFunc::as_poly() const {
  if (!is_polynomial())
    throw std::logic_error("RatFunc::as_poly: nontrivial denominator " + den_.str());
  return num_;
}

RatFunc RatFunc::operator-() const {
  RatFunc out(*this);
  out.num_ = -out.num_;
  return out;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw std::invalid_argument("RatFunc: division by zero");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  reduce();
  return *this;
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) {
    if (is_zero()) throw std::invalid_argument("RatFunc::pow: negative power of zero");
    return RatFunc(den_, num_).pow(-e);
  }
  RatFunc out = Rational(1);
  RatFunc base(*this);
  while (e) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

Rational RatFunc::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d == 0) throw std::invalid_argument("RatFunc::eval: pole at evaluation point");
  return num_.eval(x) / d;
}

RatFunc RatFunc::compose(const RatFunc& value) const {
  auto horner = [&value](const Poly& p) {
    RatFunc acc;
    for (int i = p.degree(); i >= 0; --i) acc = acc * value + RatFunc(p.coeff(i));
    return acc;
  };
  RatFunc d = horner(den_);
  if (d.is_zero()) throw std::invalid_argument("RatFunc::compose: denominator vanishes");
  return horner(num_) / d;
}

std::string RatFunc::str(const std::string& var) const {
  if (is_polynomial()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace hlwhit
