#pragma once

#include <gmpxx.h>

#include <string>

namespace ksg {

// Arbitrary-precision rational, kept canonical (reduced, positive denominator)
// by GMP as long as every directly constructed value is canonicalized once.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) {
  return q.get_str();
}

// -1, 0, +1
inline int sign(const Rational& q) {
  return sgn(q);
}

}  // namespace ksg
