#include "gridtorus/laurent.hpp"

#include <doctest.h>

using namespace gridtorus;

namespace {
LaurentPoly t(std::int64_t e, std::int64_t c = 1) { return LaurentPoly::term(e, Rational(c)); }
LaurentPoly one() { return LaurentPoly::constant(Rational(1)); }
}  // namespace

TEST_CASE("Laurent polynomial arithmetic") {
    LaurentPoly p = one() + t(1);
    CHECK(p.pow(2) == one() + t(1, 2) + t(2));
    CHECK((p - p).is_zero());
    CHECK((t(-2) * t(3)) == t(1));
    CHECK(p.pow(3).coefficient_sum() == Rational(8));
    CHECK((t(-1) + t(2)).low_degree() == -1);
    CHECK((t(-1) + t(2)).high_degree() == 2);
    CHECK(p.compose_power(-1) == one() + t(-1));
    CHECK(p.evaluate(Rational(1, 2)) == Rational(3, 2));
    CHECK_THROWS(t(-1).evaluate(Rational(0)));
    CHECK(p.str() == "t + 1");
}

TEST_CASE("multivariate substitution") {
    LaurentPoly x = LaurentPoly::variable(0, 2), y = LaurentPoly::variable(1, 2);
    LaurentPoly f = x * y + x;
    LaurentPoly g = f.substitute(Projection::diagonal(2));
    CHECK(g == t(2) + t(1));
}

TEST_CASE("gcd and exact division") {
    LaurentPoly a = (one() - t(1)) * (one() + t(1));
    LaurentPoly b = (one() - t(1)).pow(2);
    CHECK(poly_gcd(a, b) == t(1) - one());
    LaurentPoly q;
    CHECK(poly_divides(one() - t(1), a, &q));
    CHECK(q == one() + t(1));
    CHECK_FALSE(poly_divides(one() + t(2), a, nullptr));
}

TEST_CASE("rational functions reduce to Laurent polynomials") {
    // 1/(1 - t^-1) + 1/(1 - t) = 1
    LaurentRational s = LaurentRational(one(), one() - t(-1)) + LaurentRational(one(), one() - t(1));
    CHECK(s.is_laurent_polynomial());
    CHECK(s.to_laurent_poly() == one());
    LaurentRational r(one(), one() - t(1));
    CHECK_FALSE(r.is_laurent_polynomial());
    CHECK_THROWS(r.to_laurent_poly());
    CHECK_THROWS(r.evaluate(Rational(1)));
    CHECK(r.evaluate(Rational(2)) == Rational(-1));
    CHECK(r * LaurentRational(one() - t(1)) == LaurentRational(one()));
    CHECK(r / r == LaurentRational(one()));
    CHECK_THROWS(LaurentRational(one(), LaurentPoly(1)));
}

TEST_CASE("two-variable sum of localization terms") {
    // P1 x P1 with O(0,0): four fixed points, chi(O) = 1.
    LaurentPoly x = LaurentPoly::variable(0, 2), y = LaurentPoly::variable(1, 2);
    LaurentPoly c1 = LaurentPoly::constant(Rational(1), 2);
    LaurentPoly xi = LaurentPoly::monomial({-1, 0}), yi = LaurentPoly::monomial({0, -1});
    LaurentRational sum(2);
    for (const auto& fx : {c1 - xi, c1 - x})
        for (const auto& fy : {c1 - yi, c1 - y}) sum = sum + LaurentRational(c1, fx * fy);
    CHECK(sum == LaurentRational(c1));
    CHECK(sum.is_laurent_polynomial());
}
