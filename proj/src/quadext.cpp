#include "ksg/quadext.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace ksg {

void validate_radical(long r) {
  if (r < 0) throw std::invalid_argument("radical must be non-negative");
  for (long p = 2; p * p <= r; ++p) {
    if (r % (p * p) == 0) {
      throw std::invalid_argument("radical must be square-free: " + std::to_string(r));
    }
  }
}

QuadExt::QuadExt(Rational a, Rational b, long radical)
    : a_(std::move(a)), b_(std::move(b)), r_(radical) {
  if (r_ < 0) throw std::invalid_argument("radical must be non-negative");
  if (r_ == 0) {
    // sqrt(0) = 0: the radical part vanishes.
    b_ = 0;
  } else if (r_ == 1) {
    a_ += b_;
    b_ = 0;
    r_ = 0;
  }
  if (b_ == 0) {
    r_ = 0;
  } else {
    validate_radical(r_);
  }
}

QuadExt QuadExt::sqrt_of(long radical) {
  validate_radical(radical);
  return QuadExt(Rational(0), Rational(1), radical);
}

long QuadExt::merge_radicals(const QuadExt& x, const QuadExt& y) {
  if (x.r_ != 0 && y.r_ != 0 && x.r_ != y.r_) throw RadicalMismatch(x.r_, y.r_);
  return x.r_ != 0 ? x.r_ : y.r_;
}

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
  long r = QuadExt::merge_radicals(x, y);
  return QuadExt(x.a_ + y.a_, x.b_ + y.b_, r);
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) {
  long r = QuadExt::merge_radicals(x, y);
  return QuadExt(x.a_ - y.a_, x.b_ - y.b_, r);
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
  long r = QuadExt::merge_radicals(x, y);
  // (a1 + b1 s)(a2 + b2 s) = a1 a2 + r b1 b2 + (a1 b2 + b1 a2) s,  s = sqrt(r)
  Rational a = x.a_ * y.a_ + x.b_ * y.b_ * r;
  Rational b = x.a_ * y.b_ + x.b_ * y.a_;
  return QuadExt(std::move(a), std::move(b), r);
}

int QuadExt::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;  // sqrt(r) > 0
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 against r b^2. Equality would make sqrt(r)
  // rational, impossible for square-free r >= 2 with a, b != 0.
  int cmp = sgn(a_ * a_ - b_ * b_ * r_);
  if (cmp == 0) throw Error("non-square-free radical slipped in: " + std::to_string(r_));
  return sa * cmp;
}

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (b_ == 0) return QuadExt(1 / a_, Rational(0), 0);
  // 1/(a + b s) = (a - b s)/(a^2 - r b^2)
  Rational d = a_ * a_ - b_ * b_ * r_;
  if (d == 0) throw Error("non-square-free radical slipped in: " + std::to_string(r_));
  return QuadExt(a_ / d, -b_ / d, r_);
}

double QuadExt::approx() const {
  return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(r_));
}

namespace {

std::string format_radical_magnitude(const Rational& abs_b, long r) {
  std::string root = "sqrt(" + std::to_string(r) + ")";
  if (abs_b == 1) return root;
  return abs_b.get_str() + "*" + root;
}

}  // namespace

std::string to_string(const QuadExt& x) {
  if (x.radical_part() == 0) return x.rational_part().get_str();
  const Rational& a = x.rational_part();
  const Rational& b = x.radical_part();
  Rational abs_b = b < 0 ? Rational(-b) : b;
  std::string rad = format_radical_magnitude(abs_b, x.radical());
  if (a == 0) return (b < 0 ? "-" : "") + rad;
  return a.get_str() + (b < 0 ? "-" : "+") + rad;
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) {
  return os << to_string(x);
}

namespace {

struct ScalarLexer {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos == s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool consume(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool consume_word(std::string_view w) {
    skip_ws();
    if (s.substr(pos, w.size()) == w) {
      pos += w.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument(msg + " at offset " + std::to_string(pos) + " in scalar '" +
                                std::string(s) + "'");
  }

  Integer integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return Integer(std::string(s.substr(start, pos - start)));
  }

  // uint ( '/' uint )?
  Rational rational() {
    Integer num = integer();
    if (consume('/')) {
      Integer den = integer();
      if (den == 0) fail("zero denominator");
      return make_rational(num, den);
    }
    return Rational(num);
  }

  long radical_token() {
    if (!consume_word("sqrt")) fail("expected sqrt");
    if (!consume('(')) fail("expected '(' after sqrt");
    Integer r = integer();
    if (!consume(')')) fail("expected ')'");
    if (!r.fits_slong_p()) fail("radical out of range");
    return r.get_si();
  }
};

}  // namespace

QuadExt parse_scalar(std::string_view text, long expected_radical) {
  ScalarLexer lx{text};
  Rational a(0), b(0);
  long radical = 0;
  bool saw_radical_term = false;

  for (int term = 0;; ++term) {
    int sgn_term = 1;
    if (lx.consume('-')) {
      sgn_term = -1;
    } else if (lx.consume('+')) {
      if (term == 0) lx.fail("unexpected leading '+'");
    } else if (term > 0) {
      break;
    }

    if (lx.peek() == 's') {
      // bare sqrt(r) term with implicit coefficient 1
      long r = lx.radical_token();
      if (saw_radical_term) lx.fail("more than one radical term");
      saw_radical_term = true;
      radical = r;
      b += sgn_term;
    } else {
      Rational coeff = lx.rational();
      if (lx.consume('*')) {
        long r = lx.radical_token();
        if (saw_radical_term) lx.fail("more than one radical term");
        saw_radical_term = true;
        radical = r;
        b += sgn_term * coeff;
      } else {
        if (term > 0 && !saw_radical_term && lx.eof()) {
          // "a+b" with no radical is not part of the grammar
          lx.fail("second rational term without sqrt");
        }
        a += sgn_term * coeff;
      }
    }
    if (lx.eof()) break;
    if (term >= 1) break;
  }
  if (!lx.eof()) lx.fail("trailing characters");

  if (saw_radical_term) {
    validate_radical(radical);
    if (radical < 2) lx.fail("sqrt argument must be a square-free integer >= 2");
    if (expected_radical == 0) lx.fail("radical term not allowed here (radical=0 context)");
    if (expected_radical > 0 && radical != expected_radical) {
      throw RadicalMismatch(radical, expected_radical);
    }
  }
  return QuadExt(std::move(a), std::move(b), saw_radical_term ? radical : 0);
}

}  // namespace ksg
