#pragma once

#include <Eigen/Core>

#include <iosfwd>
#include <string>
#include <string_view>

#include "ksg/errors.hpp"
#include "ksg/rational.hpp"

namespace ksg {

// Throws std::invalid_argument unless r >= 0 and square-free.
void validate_radical(long r);

// Exact element of the quadratic field Q(sqrt(r)): rational_part + radical_part * sqrt(r).
//
// Canonical form: radical_part == 0 implies radical() == 0, and r in {0, 1}
// folds into the rational part. A value with zero radical part is compatible
// with any radical; combining two values whose radical parts are both nonzero
// requires equal radicals (RadicalMismatch otherwise).
class QuadExt {
 public:
  QuadExt() : a_(0), b_(0), r_(0) {}
  QuadExt(int v) : a_(v), b_(0), r_(0) {}        // NOLINT: implicit by design
  QuadExt(long v) : a_(v), b_(0), r_(0) {}       // NOLINT
  QuadExt(Rational a) : a_(std::move(a)), b_(0), r_(0) {}  // NOLINT

  QuadExt(Rational a, Rational b, long radical);

  // 0 + 1*sqrt(r)
  static QuadExt sqrt_of(long radical);

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }
  long radical() const { return r_; }

  bool is_rational() const { return r_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  // Exact sign of the real number a + b*sqrt(r): -1, 0 or +1.
  int sign() const;

  QuadExt conjugate() const { return QuadExt(a_, -b_, r_); }
  QuadExt inverse() const;

  // Informational only; never used in a verdict path.
  double approx() const;

  QuadExt operator-() const { return QuadExt(-a_, -b_, r_); }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y);
  friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inverse(); }

  QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
  QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
  QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
  QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.r_ == y.r_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

  // Real-number order (exact).
  friend bool operator<(const QuadExt& x, const QuadExt& y) { return (x - y).sign() < 0; }
  friend bool operator>(const QuadExt& x, const QuadExt& y) { return y < x; }
  friend bool operator<=(const QuadExt& x, const QuadExt& y) { return !(y < x); }
  friend bool operator>=(const QuadExt& x, const QuadExt& y) { return !(x < y); }

 private:
  Rational a_, b_;
  long r_;

  static long merge_radicals(const QuadExt& x, const QuadExt& y);
};

inline int sign(const QuadExt& x) { return x.sign(); }
inline QuadExt inv(const QuadExt& x) { return x.inverse(); }
inline QuadExt abs(const QuadExt& x) { return x.sign() < 0 ? -x : x; }

// Canonical textual form: "p/q", "p/q+s/t*sqrt(r)", "sqrt(r)", "-3*sqrt(2)", ...
// Integers print without the "/1".
std::string to_string(const QuadExt& x);
std::ostream& operator<<(std::ostream& os, const QuadExt& x);

// Parses the textual scalar syntax. expected_radical = -1 accepts any radical;
// expected_radical = 0 rejects radical terms; otherwise the term's radical must
// match. Throws std::invalid_argument on malformed input (position-free; the
// catalog parser wraps it with line/column info).
QuadExt parse_scalar(std::string_view text, long expected_radical = -1);

}  // namespace ksg

namespace Eigen {

template <>
struct NumTraits<ksg::QuadExt> : GenericNumTraits<ksg::QuadExt> {
  typedef ksg::QuadExt Real;
  typedef ksg::QuadExt NonInteger;
  typedef ksg::QuadExt Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60
  };
  static inline Real epsilon() { return ksg::QuadExt(0); }
  static inline Real dummy_precision() { return ksg::QuadExt(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
