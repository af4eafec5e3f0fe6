#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hlwhit {

// Exact scalar field: arbitrary-precision rationals. GMP keeps values in
// canonical form (gcd(|num|, den) = 1, den >= 1) for every arithmetic result;
// the entry points below canonicalize raw input.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("parse_rational: bad literal '" + s + "'");
  if (r.get_den() == 0)
    throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

// base^exp with exp possibly negative; 0^negative throws.
inline Rational pow_rational(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (base == 0 && exp < 0)
    throw std::invalid_argument("pow_rational: negative power of zero");
  Rational out;
  unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
  if (exp < 0) out = Rational(1) / out;
  out.canonicalize();
  return out;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace hlwhit
