#pragma once

#include <stdexcept>
#include <string>

#include "hlwhit/rational.hpp"

namespace hlwhit {

// Element of (1/2)Z stored as its doubled value. All modulus-character
// exponents live here; they cancel to integers in every verified identity.
class HalfInt {
 public:
  HalfInt() = default;
  static HalfInt of_doubled(long d) { return HalfInt(d); }
  static HalfInt whole(long n) { return HalfInt(2 * n); }

  long doubled() const { return d_; }
  bool is_integral() const { return d_ % 2 == 0; }
  long as_integer() const {
    if (!is_integral()) throw std::logic_error("HalfInt: not an integer: " + str());
    return d_ / 2;
  }

  HalfInt operator-() const { return HalfInt(-d_); }
  friend HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.d_ + b.d_); }
  friend HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.d_ - b.d_); }
  friend bool operator==(HalfInt a, HalfInt b) { return a.d_ == b.d_; }
  friend auto operator<=>(HalfInt a, HalfInt b) { return a.d_ <=> b.d_; }

  std::string str() const {
    if (is_integral()) return std::to_string(d_ / 2);
    return std::to_string(d_) + "/2";
  }

 private:
  explicit HalfInt(long d) : d_(d) {}
  long d_ = 0;
};

// q^e for integral e; throws on genuinely half-odd exponents.
inline Rational pow_q(const Rational& q, HalfInt e) {
  return pow_rational(q, e.as_integer());
}

}  // namespace hlwhit
