#include "gridtorus/lattice.hpp"
#include "gridtorus/polytope.hpp"

#include <doctest.h>

using namespace gridtorus;

TEST_CASE("weight arithmetic") {
    Weight a{1, -2}, b{3, 4};
    CHECK(a + b == Weight{4, 2});
    CHECK(a - b == Weight{-2, -6});
    CHECK(-a == Weight{-1, 2});
    CHECK(3 * a == Weight{3, -6});
    CHECK(is_zero(Weight{0, 0}));
    CHECK(format_weight(Weight{5}) == "5");
    CHECK(format_weight(a) == "(1,-2)");
    CHECK_THROWS(to_weight(QVector{Rational(1, 2)}));
}

TEST_CASE("projections") {
    Projection p(std::vector<std::vector<std::int64_t>>{{1, 1, 1}});
    CHECK(p.apply(Weight{1, 0, 1}) == Weight{2});
    CHECK(Projection::diagonal(3).rows() == p.rows());
    CHECK(Projection::coordinate(3, 1).apply(Weight{4, 5, 6}) == Weight{5});
    CHECK(Projection::identity(2).apply(Weight{7, -1}) == Weight{7, -1});
    Projection q(std::vector<std::vector<std::int64_t>>{{2, 0}});
    CHECK_FALSE(q.rows_primitive());
    CHECK(p.rows_primitive());
    Projection swap(std::vector<std::vector<std::int64_t>>{{0, 1}, {1, 0}});
    CHECK(swap.compose(swap).rows() == Projection::identity(2).rows());
    CHECK_THROWS(p.apply(Weight{1, 2}));
}

TEST_CASE("exact LP and convex hulls") {
    std::vector<Weight> square{{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}};
    CHECK(in_convex_hull(QVector{Rational(1), Rational(1, 2)}, square));
    CHECK_FALSE(in_convex_hull(QVector{Rational(3), Rational(0)}, square));
    CHECK(in_convex_hull(QVector{Rational(2), Rational(2)}, square));
    LatticePolytope poly(square);
    CHECK(poly.vertices() == std::vector<Weight>{{0, 0}, {0, 2}, {2, 0}, {2, 2}});
    CHECK(is_centrally_symmetric(poly));
    CHECK_FALSE(is_centrally_symmetric(LatticePolytope({{0, 0}, {1, 0}, {0, 1}})));
    // x + y = 1, x, y >= 0 is feasible; x + y = -1 is not.
    CHECK(lp_feasible({{Rational(1), Rational(1)}}, {Rational(1)}));
    CHECK_FALSE(lp_feasible({{Rational(1), Rational(1)}}, {Rational(-1)}));
}

TEST_CASE("cross-polytope stays centrally symmetric under projection") {
    std::vector<Weight> pts;
    for (std::size_t i = 0; i < 3; ++i) {
        pts.push_back(unit_weight(3, i));
        pts.push_back(-unit_weight(3, i));
    }
    LatticePolytope cross(pts);
    CHECK(cross.vertices().size() == 6);
    for (const auto& p : {Projection::diagonal(3), Projection::coordinate(3, 0),
                          Projection(std::vector<std::vector<std::int64_t>>{{1, 2, 0}, {0, 1, 3}})}) {
        CHECK(is_centrally_symmetric(cross.project(p)));
    }
}
