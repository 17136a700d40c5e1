#include "markedfree/rational.hpp"

#include <doctest.h>

using namespace markedfree;

TEST_CASE("rational arithmetic is exact and canonical") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(7, 3) * Rational(3, 7)).is_one());
    CHECK((Rational(1, 3) - Rational(1, 3)).is_zero());
    CHECK(Rational(5, 3) / Rational(5, 3) == Rational(1));
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK(Rational(-7, 2) < Rational(-3));
    CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("rational parsing and printing round-trip") {
    CHECK(Rational::parse("3/4").str() == "3/4");
    CHECK(Rational::parse("-6/8") == Rational(-3, 4));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational(5).str() == "5/1");
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("dyadic and power-of-two predicates") {
    CHECK(Rational(3, 8).is_dyadic());
    CHECK(Rational(7).is_dyadic());
    CHECK_FALSE(Rational(1, 3).is_dyadic());
    CHECK(Rational(3, 8).dyadic_exponent() == 3);

    long e = 0;
    CHECK(Rational(8).is_power_of_two(&e));
    CHECK(e == 3);
    CHECK(Rational(1, 4).is_power_of_two(&e));
    CHECK(e == -2);
    CHECK(Rational(1).is_power_of_two(&e));
    CHECK(e == 0);
    CHECK_FALSE(Rational(3).is_power_of_two());
    CHECK_FALSE(Rational(-2).is_power_of_two());
    CHECK_FALSE(Rational(3, 4).is_power_of_two());

    CHECK(Rational::pow2(5) == Rational(32));
    CHECK(Rational::pow2(-3) == Rational(1, 8));
    CHECK(Rational::pow2(0) == Rational(1));
}

TEST_CASE("floor") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(4).floor() == 4);
}
