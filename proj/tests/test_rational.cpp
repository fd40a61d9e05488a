#include <doctest.h>

#include <stdexcept>

#include "altseq/rational.hpp"

using altseq::Rational;

TEST_CASE("rational arithmetic normalizes") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(2, 3) * Rational(3, 4)) == Rational(1, 2));
  CHECK((Rational(1, 2) - Rational(1, 2)).is_zero());
  CHECK((Rational(7, 2) / Rational(7, 4)) == Rational(2));
}

TEST_CASE("rational ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(8, 45) > Rational(13, 180));
}

TEST_CASE("rational text round trips") {
  CHECK(Rational::from_string("17/6").str() == "17/6");
  CHECK(Rational::from_string("0.25") == Rational(1, 4));
  CHECK(Rational::from_string("-3") == Rational(-3));
  CHECK(Rational::from_string("1.50") == Rational(3, 2));
  CHECK(Rational(10, 5).str() == "2");
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1.2.3"), std::invalid_argument);
}

TEST_CASE("rational pow and conversion") {
  CHECK(altseq::pow(Rational(1, 2), 20) == Rational(1, 1048576));
  CHECK(Rational(1, 4).to_double() == doctest::Approx(0.25));
  CHECK(altseq::pow(Rational(3, 5), 0) == Rational(1));
}

TEST_CASE("rational division by zero throws") {
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}
