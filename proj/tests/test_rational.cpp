#include "gridtorus/rational.hpp"

#include <doctest.h>

#include <stdexcept>

using gridtorus::BigInt;
using gridtorus::Rational;

TEST_CASE("rational normal form") {
    Rational r(BigInt(6), BigInt(-4));
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(r.str() == "-3/2");
    CHECK(Rational(4).str() == "4");
    CHECK(Rational(BigInt(0), BigInt(-7)) == Rational(0));
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("rational parse") {
    CHECK(Rational::parse("5/36") == Rational(5, 36));
    CHECK(Rational::parse("-8") == Rational(-8));
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("abc"));
    CHECK_THROWS(Rational::parse(""));
}

TEST_CASE("rational arithmetic and order") {
    const Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK(b < a);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).abs() == Rational(7, 2));
    CHECK(Rational(2, 3).inverse() == Rational(3, 2));
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
    CHECK(Rational(9).to_int64() == 9);
    CHECK_THROWS(Rational(1, 2).to_int64());
    CHECK(Rational(1, 4).to_double() == doctest::Approx(0.25));
}

TEST_CASE("binomial coefficients") {
    CHECK(gridtorus::binomial(9, 4) == 126);
    CHECK(gridtorus::binomial(11, 5) == 462);
    CHECK(gridtorus::binomial(5, 7) == 0);
    CHECK(gridtorus::binomial(5, -1) == 0);
    CHECK(gridtorus::binomial(60, 30) == BigInt("118264581564861424"));
}
