#include "rankmech/rational.hpp"

#include <stdexcept>

#include "doctest.h"
#include "rankmech/harness.hpp"

using namespace rankmech;

TEST_CASE("parse accepts the wire grammar") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("0") == Rational(0));
  CHECK(parse_rational("6/8") == Rational(3, 4));
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("--1"), std::invalid_argument);
}

TEST_CASE("render uses canonical form without /1") {
  CHECK(render_rational(Rational(3, 4)) == "3/4");
  CHECK(render_rational(Rational(-3, 4)) == "-3/4");
  CHECK(render_rational(Rational(5)) == "5");
  CHECK(render_rational(Rational(0)) == "0");
  CHECK(render_rational(Rational(4, 2)) == "2");
}

TEST_CASE("parse-render round trip on random rationals") {
  SplitMix64 rng(17);
  for (int i = 0; i < 500; ++i) {
    Int num = Int(rng.below(100000)) - 50000;
    Int den = Int(1 + rng.below(9999));
    Rational x(num, den);
    CHECK(parse_rational(render_rational(x)) == x);
  }
}

TEST_CASE("decimal rendering rounds half up") {
  CHECK(render_decimal(Rational(1, 2), 0) == "1");
  CHECK(render_decimal(Rational(1, 3), 3) == "0.333");
  CHECK(render_decimal(Rational(2, 3), 3) == "0.667");
  CHECK(render_decimal(Rational(25, 1000), 2) == "0.03");
  CHECK(render_decimal(Rational(-1, 8), 2) == "-0.13");
  CHECK(render_decimal(Rational(923, 10), 1) == "92.3");
  CHECK(render_decimal(Rational(95), 1) == "95.0");
}

TEST_CASE("binomial values") {
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(12, 5) == 792);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(0, 0) == 1);
}

TEST_CASE("binomial satisfies the Pascal recurrence") {
  for (unsigned n = 1; n <= 30; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}

TEST_CASE("psi consecutive products and the empty-product convention") {
  CHECK(psi(2, 4) == 24);
  CHECK(psi(5, 4) == 1);
  CHECK(psi(8, 12) == 95040);
  CHECK(psi(1, 5) == 120);
  CHECK_THROWS_AS(psi(5, 3), std::invalid_argument);
}

TEST_CASE("alternating binomial prefix values") {
  CHECK(alternating_binomial_prefix(5, 2) == 6);
  CHECK(alternating_binomial_prefix(5, 5) == 0);
  CHECK(alternating_binomial_prefix(7, 0) == 1);
  CHECK_THROWS_AS(alternating_binomial_prefix(4, 5), std::invalid_argument);
}

TEST_CASE("alternating binomial prefix collapses to a single binomial") {
  for (unsigned n = 1; n <= 20; ++n) {
    for (unsigned r = 0; r < n; ++r) {
      Int expected = binomial(n - 1, r);
      if (r % 2 == 1) expected = -expected;
      CHECK(alternating_binomial_prefix(n, r) == expected);
    }
    CHECK(alternating_binomial_prefix(n, n) == 0);
  }
}
