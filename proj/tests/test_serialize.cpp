#include "gridtorus/contact.hpp"
#include "gridtorus/families.hpp"
#include "gridtorus/serialize.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace gridtorus;

namespace {

std::vector<GridData> samples() {
    return {build_scroll(4),
            build_scroll(5, ScrollSplit::TwoTwo),
            build_quadric_bundle(6),
            build_p1cubed(),
            build_sp6(),
            build_p1xp1_o12(),
            build_projective_space({{0, 2}, {3, 1}, {1, 1}}),
            build_cube_full_torus(),
            build_quadric_full_torus(5),
            quadric_downgrade_axis(build_quadric_full_torus(5)),
            quadric_downgrade_diagonal(build_quadric_full_torus(4)),
            build_so_adjoint(10),
            build_so_adjoint(12),
            so_adjoint_slice(build_so_adjoint(9), 2)};
}

std::string expect_schema_error(const std::string& text) {
    try {
        from_json(text);
    } catch (const SchemaError& e) {
        return e.path();
    }
    return "<no error>";
}

}  // namespace

TEST_CASE("JSON round trip is byte-identical") {
    for (const auto& g : samples()) {
        const std::string a = to_json(g);
        const GridData back = from_json(a);
        CHECK(to_json(back) == a);
        CHECK(back.components.size() == g.components.size());
        CHECK(back.flags == g.flags);
    }
}

TEST_CASE("JSON is independent of component and edge order") {
    GridData g = build_quadric_bundle(5);
    const std::string a = to_json(g);
    std::mt19937 rng(7);
    std::shuffle(g.components.begin(), g.components.end(), rng);
    std::shuffle(g.edges.begin(), g.edges.end(), rng);
    CHECK(to_json(g) == a);
}

TEST_CASE("rational mu values survive the round trip") {
    GridData g = combine_bundles(build_sp6(), "half", {{"L", Rational(1, 2)}});
    GridData back = from_json(to_json(g));
    CHECK(back.at("Y1").mu_of("half")[0] == Rational(1, 2));
    CHECK(to_json(g).find("\"1/2\"") != std::string::npos);
}

TEST_CASE("schema errors name the offending field") {
    const std::string good = to_json(build_sp6());
    CHECK(expect_schema_error("{") == "$");
    CHECK(expect_schema_error("[]") == "$");
    std::string bad = good;
    bad.replace(bad.find("grid-torus/1"), 12, "grid-torus/9");
    CHECK(expect_schema_error(bad) == "$.schema");
    bad = good;
    bad.replace(bad.find("\"dim\": 0"), 8, "\"dim\": \"x\"");
    CHECK(expect_schema_error(bad).find(".dim") != std::string::npos);
    bad = good;
    bad.replace(bad.find("\"A\""), 3, "\"Q\"");
    CHECK(expect_schema_error(bad).find("$.edges[") == 0);
    bad = good;
    bad.erase(bad.find("\"rank\": 1,"), 10);
    CHECK(expect_schema_error(bad) == "$.rank");
}

TEST_CASE("unspecified compasses are preserved") {
    GridData g = from_json(to_json(build_so_adjoint(12)));
    CHECK_FALSE(g.at("center").compass_specified);
    CHECK(to_json(g).find("\"unspecified\"") != std::string::npos);
}

TEST_CASE("DOT export is stable and ranked by mu") {
    GridData g = build_quadric_bundle(5);
    const std::string a = to_dot(g);
    std::reverse(g.components.begin(), g.components.end());
    std::reverse(g.edges.begin(), g.edges.end());
    CHECK(to_dot(g) == a);
    CHECK(a.find("rank=same") != std::string::npos);
    CHECK(a.find("darkgreen") != std::string::npos);
    CHECK(a.find("\"Q2\" -> \"Q1\"") != std::string::npos);
}
