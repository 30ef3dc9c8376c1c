#include <doctest.h>

#include <gmpxx.h>

#include "ksg/quadext.hpp"
#include "test_util.hpp"

using namespace ksg;

namespace {
const QuadExt kSqrt2 = QuadExt::sqrt_of(2);
}

TEST_CASE("field basics on Q(sqrt(2))") {
  CHECK(kSqrt2 * kSqrt2 == QuadExt(2));
  QuadExt one_plus = QuadExt(1) + kSqrt2;
  QuadExt one_minus = QuadExt(1) - kSqrt2;
  CHECK(one_plus + one_minus == QuadExt(2));

  QuadExt inv = one_plus.inverse();
  CHECK(inv == QuadExt(Rational(-1), Rational(1), 2));  // -1 + sqrt(2)
  CHECK(inv * one_plus == QuadExt(1));
}

TEST_CASE("exact sign") {
  CHECK(QuadExt(Rational(-3), Rational(2), 2).sign() == -1);  // (2*sqrt2)^2 = 8 < 9
  CHECK(QuadExt(0).sign() == 0);
  CHECK((QuadExt(1) - kSqrt2).sign() == -1);
  CHECK((kSqrt2 - QuadExt(1)).sign() == 1);
  CHECK(kSqrt2.sign() == 1);
  CHECK((-kSqrt2).sign() == -1);
}

TEST_CASE("sign agrees with 256-bit floating evaluation on random scalars") {
  std::mt19937_64 gen(20260809);
  mpf_set_default_prec(256);
  mpf_class root2(2);
  root2 = sqrt(root2);
  for (int i = 0; i < 10000; ++i) {
    QuadExt q = testutil::rand_quadext(gen);
    mpf_class approx = mpf_class(q.rational_part()) + mpf_class(q.radical_part()) * root2;
    int expected = approx > 0 ? 1 : (approx < 0 ? -1 : 0);
    CHECK(q.sign() == expected);
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 gen(42);
  for (int i = 0; i < 3000; ++i) {
    QuadExt a = testutil::rand_quadext(gen);
    QuadExt b = testutil::rand_quadext(gen);
    QuadExt c = testutil::rand_quadext(gen);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == QuadExt(1));
    CHECK(a + (-a) == QuadExt(0));
  }
}

TEST_CASE("canonical form is unique") {
  std::mt19937_64 gen(7);
  for (int i = 0; i < 2000; ++i) {
    QuadExt a = testutil::rand_quadext(gen);
    QuadExt b = testutil::rand_quadext(gen);
    CHECK(((a - b).is_zero()) == (a == b));
  }
  // r in {0,1} collapses to the pure-rational mode.
  CHECK(QuadExt(Rational(2), Rational(3), 1) == QuadExt(5));
  CHECK(QuadExt(Rational(2), Rational(3), 0) == QuadExt(2));
  CHECK(QuadExt(Rational(2), Rational(0), 2).radical() == 0);
}

TEST_CASE("radical promotion and mismatch") {
  QuadExt rational_five(5);
  CHECK(rational_five + kSqrt2 == QuadExt(Rational(5), Rational(1), 2));
  QuadExt sqrt3 = QuadExt::sqrt_of(3);
  CHECK_THROWS_AS(kSqrt2 + sqrt3, RadicalMismatch);
  CHECK_THROWS_AS(kSqrt2 * sqrt3, RadicalMismatch);
  CHECK_THROWS_AS(QuadExt(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(QuadExt::sqrt_of(8), std::invalid_argument);
  CHECK_THROWS_AS(QuadExt::sqrt_of(-2), std::invalid_argument);
}

TEST_CASE("scalar parsing and printing round-trip") {
  auto roundtrip = [](const std::string& text, long radical) {
    QuadExt q = parse_scalar(text, radical);
    CHECK(to_string(q) == text);
    CHECK(parse_scalar(to_string(q), radical) == q);
  };
  roundtrip("0", 0);
  roundtrip("-7", 0);
  roundtrip("3/4", 0);
  roundtrip("-3/4", 0);
  roundtrip("sqrt(2)", 2);
  roundtrip("-sqrt(2)", 2);
  roundtrip("2*sqrt(2)", 2);
  roundtrip("-1/2*sqrt(2)", 2);
  roundtrip("1+sqrt(2)", 2);
  roundtrip("1/2-3/4*sqrt(2)", 2);

  CHECK(parse_scalar("4/6", -1) == QuadExt(make_rational(2, 3)));
  CHECK(parse_scalar("  1 + sqrt( 2 )  ", -1) == QuadExt(Rational(1), Rational(1), 2));

  CHECK_THROWS(parse_scalar("1+2", -1));
  CHECK_THROWS(parse_scalar("", -1));
  CHECK_THROWS(parse_scalar("sqrt(4)", -1));
  CHECK_THROWS(parse_scalar("1/0", -1));
  CHECK_THROWS(parse_scalar("sqrt(2)+sqrt(2)", -1));
  CHECK_THROWS(parse_scalar("2x", -1));
  CHECK_THROWS_AS(parse_scalar("sqrt(3)", 2), RadicalMismatch);
  CHECK_THROWS(parse_scalar("sqrt(2)", 0));
}

TEST_CASE("random print/parse round-trip") {
  std::mt19937_64 gen(11);
  for (int i = 0; i < 2000; ++i) {
    QuadExt q = testutil::rand_quadext(gen);
    CHECK(parse_scalar(to_string(q), -1) == q);
  }
}
