#include "gridtorus/families.hpp"
#include "gridtorus/grid.hpp"

#include <doctest.h>

#include <algorithm>

using namespace gridtorus;

namespace {

bool has_code(const std::vector<Violation>& v, const std::string& code) {
    return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.code == code; });
}

}  // namespace

TEST_CASE("compass bookkeeping") {
    Compass c{{Weight{1}, 3}, {Weight{-1}, 1}};
    c.add(Weight{1});
    CHECK(c.total() == 5);
    CHECK(c.multiplicity(Weight{1}) == 4);
    CHECK(c.str() == "{1^4, -1}");
    CHECK(c.negated().multiplicity(Weight{-1}) == 4);
    CHECK(parse_edge_tag("C") == EdgeTag::C);
    CHECK_THROWS_AS(parse_edge_tag("D"), std::invalid_argument);
}

TEST_CASE("ranks, bandwidth, source and sink on the scroll") {
    const GridData g = build_scroll(5);
    CHECK(validate(g).empty());
    CHECK(rk_plus(g.at("Y1")) == 1);
    CHECK(rk_minus(g.at("Y2")) == 1);
    CHECK(rk_plus(g, g.at("source")) == 5);
    CHECK(bandwidth(g, "L") == Rational(3));
    CHECK(sink_of(g) == "sink");
    CHECK(source_of(g) == "source");
    GridData no_edges = g;
    no_edges.edges.clear();
    no_edges.flags.edges_complete = false;
    CHECK(sink_of(no_edges) == "sink");
    CHECK_THROWS_AS(is_nef(no_edges, "L"), std::logic_error);
}

TEST_CASE("normalize_linearization shifts the sink to zero") {
    GridData g = combine_bundles(build_sp6(), "L", {{"L", Rational(1)}});
    for (auto& c : g.components) c.mu["L"][0] += Rational(7, 2);
    GridData n = normalize_linearization(g, "L");
    CHECK(n.at("sink").mu_of("L")[0] == Rational(0));
    CHECK(n.at("source").mu_of("L")[0] == Rational(3));
}

TEST_CASE("mu_canonical and mu_adjoint") {
    const GridData g = mu_adjoint(mu_canonical(build_quadric_bundle(5)), Rational(4));
    CHECK(g.at("source").mu_of("-K")[0] == Rational(5));
    CHECK(g.at("Q1").mu_of("-K")[0] == Rational(-1));
    // K + 4L at the sink: 5 + 0
    CHECK(g.at("sink").mu_of("K+tauL")[0] == Rational(5));
    CHECK(is_nef(g, "K+tauL"));
    CHECK_THROWS(mu_canonical(build_projective_space({{0, 1}, {2, 1}})));
}

TEST_CASE("minimal edges drop shortcuts") {
    const GridData g = build_p1cubed();
    auto m = minimal_edges(g);
    CHECK(m.size() == 12);
    for (const auto& e : m) CHECK(e.tags.size() == 1);
    for (const auto& e : m) CHECK((e.tags.count(EdgeTag::A) + e.tags.count(EdgeTag::C)) == 1);
}

TEST_CASE("validate reports each broken invariant") {
    const GridData base = build_quadric_bundle(5);
    REQUIRE(validate(base).empty());

    GridData g = base;
    g.components[1].id = g.components[0].id;
    CHECK(has_code(validate(g), "duplicate-id"));

    g = base;
    g.at("Q1").compass.add(Weight{1});
    CHECK(has_code(validate(g), "codimension"));

    g = base;
    g.at("P1").compass.add(Weight{2});
    CHECK(has_code(validate(g), "equalized"));

    g = base;
    g.at("P1").compass.add(Weight{0});
    CHECK(has_code(validate(g), "compass-zero"));

    g = base;
    g.at("Q1").split[Weight{1}].rank = 3;
    CHECK(has_code(validate(g), "split-rank"));

    g = base;
    g.edges.push_back({"sink", "source", 1, {}});
    CHECK(has_code(validate(g), "cycle"));

    g = base;
    g.edges.push_back({"source", "nowhere", 1, {}});
    CHECK(has_code(validate(g), "edge-endpoint"));

    g = base;
    g.edges.push_back({"P1", "P1", 1, {}});
    CHECK(has_code(validate(g), "edge-loop"));

    g = base;
    g.edges.front().delta = 2;
    CHECK(has_code(validate(g), "edge-delta"));

    g = base;
    g.edges.erase(std::remove_if(g.edges.begin(), g.edges.end(), [](const OrbitEdge& e) { return e.dst == "sink"; }),
                  g.edges.end());
    CHECK(has_code(validate(g), "sink"));

    g = base;
    g.at("P1").dim = 9;
    CHECK(has_code(validate(g), "dim-range"));

    g = base;
    g.at("P1").mu["L"] = QVector{Rational(1), Rational(2)};
    CHECK(has_code(validate(g), "mu-rank"));
}

TEST_CASE("intersection-dimension check") {
    // Two inner components whose only successor is the sink with
    // dims adding past n-2.
    GridData g = build_scroll(4);
    g.at("Y2").dim = 2;
    g.edges.erase(std::remove_if(g.edges.begin(), g.edges.end(), [](const OrbitEdge& e) { return e.src == "Y2"; }),
                  g.edges.end());
    g.edges.push_back({"Y2", "sink", 1, {EdgeTag::B}});
    CHECK(has_code(validate(g), "intersection-dimension"));
}

TEST_CASE("reverse_action swaps source and sink") {
    const GridData g = build_sp6();
    const GridData r = reverse_action(g);
    CHECK(validate(r).empty());
    CHECK(source_of(r) == "sink");
    CHECK(sink_of(r) == "source");
    CHECK(r.at("Y1").compass == g.at("Y1").compass.negated());
    CHECK(reverse_action(r).edges == g.edges);
}

TEST_CASE("downgrade by the identity keeps everything") {
    const GridData g = build_sp6();
    const GridData d = downgrade(g, Projection::identity(1), MergeMode::Trivial);
    CHECK(d.components == g.components);
    CHECK(d.edges == g.edges);
    CHECK(d.flags == g.flags);
}

TEST_CASE("cube downgraded along the diagonal is the P1xP1xP1 grid") {
    const GridData d = downgrade(build_cube_full_torus(), Projection::diagonal(3), MergeMode::Trivial);
    const GridData p = build_p1cubed();
    REQUIRE(d.components.size() == p.components.size());
    for (const auto& c : p.components) {
        const FixedComponent& x = d.at(c.id);
        CHECK(x.mu_of("L") == c.mu_of("L"));
        CHECK(x.compass == c.compass);
        CHECK(x.dim == c.dim);
        CHECK(x.absorbed == 0);
    }
    CHECK(d.flags.equalized);
    CHECK(bandwidth(d, "L") == Rational(3));
}

TEST_CASE("downgrade commutes with normalize_linearization") {
    GridData g = combine_bundles(build_cube_full_torus(), "L", {{"L", Rational(1)}});
    for (auto& c : g.components) c.mu["L"] = c.mu["L"] + QVector{Rational(2), Rational(-1), Rational(5)};
    const Projection p = Projection::diagonal(3);
    GridData a = normalize_linearization(downgrade(g, p, MergeMode::Trivial), "L");
    GridData b = normalize_linearization(downgrade(build_cube_full_torus(), p, MergeMode::Trivial), "L");
    for (const auto& c : b.components) CHECK(a.at(c.id).mu_of("L") == c.mu_of("L"));
}

TEST_CASE("merge groups must share the projected weight") {
    const GridData q = build_quadric_full_torus(4);
    CHECK_THROWS_AS(downgrade(q, Projection::coordinate(3, 0), std::vector<MergeGroup>{{{"e1+", "e1-"}, "", ""},
                                                                                         {{"e2+", "e2-", "e3+", "e3-"}, "", ""}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(downgrade(q, Projection::coordinate(3, 0), std::vector<MergeGroup>{{{"e1+"}, "", ""}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(downgrade(q, Projection::diagonal(2), MergeMode::Trivial), std::invalid_argument);
}

TEST_CASE("ByWeight merging on the quadric") {
    const GridData q = build_quadric_full_torus(6);
    const GridData d = downgrade(q, Projection::coordinate(4, 0));
    CHECK(d.components.size() == 3);
    const GridData axis = quadric_downgrade_axis(q);
    const FixedComponent& mid = axis.at("Q");
    CHECK(mid.dim == 4);
    CHECK(mid.label == "Q^4");
    CHECK(mid.absorbed == 4);
    CHECK(mid.compass == Compass{{Weight{1}, 1}, {Weight{-1}, 1}});
    CHECK(validate(axis).empty());
}
