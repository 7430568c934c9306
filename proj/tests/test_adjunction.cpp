#include "gridtorus/adjunction.hpp"
#include "gridtorus/families.hpp"

#include <doctest.h>

using namespace gridtorus;

namespace {

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

OrbitRow row(EdgeTag t, int l, int k) { return {t, Rational(l), Rational(k), Rational(k, l)}; }

}  // namespace

TEST_CASE("orbit table rows") {
    const auto rows = orbit_table(6, 2, 1, 2);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == row(EdgeTag::A, 1, 4));
    CHECK(rows[1] == row(EdgeTag::B, 2, 8));
    CHECK(rows[2] == row(EdgeTag::C, 1, 5));
    CHECK(rows[3] == row(EdgeTag::E, 3, 12));

    CHECK(orbit_table(3, 0, 0, 0)[1].tau_bound == Rational(2));
    CHECK_THROWS(orbit_table(2, 0, 0, 0));
    CHECK_THROWS(orbit_table(5, 4, 0, 0));
    CHECK_THROWS(orbit_table(5, 0, -1, 0));
}

TEST_CASE("orbit rows read dimensions from the endpoints") {
    const GridData g = build_sp6();
    for (const auto& e : g.edges) {
        const OrbitRow r = orbit_row(g, e);
        CHECK(r.tau_bound <= Rational(4));
    }
    CHECK(tau_lower_bound(g) == Rational(4));
    CHECK(tau_lower_bound(build_quadric_bundle(5)) == Rational(4));
    CHECK(tau_lower_bound(build_scroll(5)) == Rational(5));

    GridData untagged = build_sp6();
    untagged.edges.front().tags.clear();
    CHECK_THROWS(orbit_row(untagged, untagged.edges.front()));
    CHECK_THROWS(tau_lower_bound(untagged));
}

TEST_CASE("integrality of the nef value") {
    CHECK(tau_integrality(4, Rational(3)) == TauVerdict::Allowed);
    CHECK(tau_integrality(4, Rational(5)) == TauVerdict::Allowed);
    CHECK(tau_integrality(4, Rational(5, 2)) == TauVerdict::Forbidden);
    CHECK(tau_integrality(4, Rational(6)) == TauVerdict::Forbidden);
    CHECK(tau_integrality(4, Rational(5, 2), "P^4,O(2)") == TauVerdict::Exceptional);
    CHECK(tau_integrality(3, Rational(4, 3), "P^3, O(3)") == TauVerdict::Exceptional);
    CHECK(tau_integrality(3, Rational(3, 2), "Q^3,O(2)") == TauVerdict::Exceptional);
    CHECK(tau_integrality(3, Rational(3, 2), "P^4,O(2)") == TauVerdict::Forbidden);
    CHECK_THROWS(tau_integrality(2, Rational(3)));
    CHECK_THROWS(tau_integrality(5, Rational(3)));
    CHECK(to_string(TauVerdict::Exceptional) == "exceptional");
}

TEST_CASE("bandwidth-3 surfaces") {
    CHECK(surface_bw3(build_p1xp1_o12()) == SurfaceCase::P1xP1_O12);
    CHECK(surface_bw3(build_scroll(2)) == SurfaceCase::Hirzebruch_F2);
    CHECK(surface_bw3(reverse_action(build_scroll(2))) == SurfaceCase::Hirzebruch_F2);

    GridData both = build_p1xp1_o12();
    both.edges.push_back(OrbitEdge{"P2", "P1", 1, {EdgeTag::C}});
    CHECK_THROWS(surface_bw3(both));
    CHECK_THROWS(surface_bw3(build_scroll(3)));
}

TEST_CASE("classification of the model families") {
    for (std::int64_t n = 2; n <= 8; ++n) {
        const ClassificationOutcome s = classify_bw3(build_scroll(n));
        CHECK_MESSAGE(s.kind == Bw3Case::Scroll, "n = ", n, ": ", s.detail);
        if (n >= 3) CHECK(s.tau == Rational(n));
    }
    for (std::int64_t n = 4; n <= 8; ++n) {
        const ClassificationOutcome q = classify_bw3(build_quadric_bundle(n));
        CHECK_MESSAGE(q.kind == Bw3Case::QuadricBundle, "n = ", n, ": ", q.detail);
        CHECK(q.tau == Rational(n - 1));
    }
    const ClassificationOutcome c = classify_bw3(build_p1cubed());
    CHECK(c.kind == Bw3Case::QuadricBundle);
    CHECK(c.detail.find("rho=3") != std::string::npos);
    CHECK(c.tau == Rational(2));

    const ClassificationOutcome f = classify_bw3(build_sp6());
    CHECK(f.kind == Bw3Case::FanoRhoOne);
    CHECK(f.tau == Rational(4));

    const ClassificationOutcome s2 = classify_bw3(build_p1xp1_o12());
    CHECK(s2.kind == Bw3Case::QuadricBundle);
    CHECK_FALSE(s2.tau.has_value());
}

TEST_CASE("classification is invariant under reversing the action") {
    for (const GridData& g : {build_scroll(5), build_quadric_bundle(6), build_p1cubed(), build_sp6(), build_p1xp1_o12()}) {
        const ClassificationOutcome a = classify_bw3(g);
        const ClassificationOutcome b = classify_bw3(reverse_action(g));
        CHECK(a.kind == b.kind);
        CHECK(a.tau == b.tau);
    }
    for (const GridData& g : {build_scroll(5), build_quadric_bundle(6), build_sp6()})
        CHECK(tau_lower_bound(reverse_action(g)) == tau_lower_bound(g));
}

TEST_CASE("violations carry stable codes") {
    auto code_of = [](const GridData& g) {
        const ClassificationOutcome o = classify_bw3(g);
        REQUIRE(o.kind == Bw3Case::Inconsistent);
        return o.detail.substr(0, o.detail.find(':'));
    };
    CHECK(code_of(build_quadric_full_torus(4)) == "rank");
    CHECK(code_of(build_projective_space({{0, 1}, {1, 1}, {2, 1}})) == "equalized");
    CHECK(code_of(build_projective_space({{0, 2}, {1, 1}})) == "bandwidth");

    GridData fat_sink = build_bw3_grid(4, {0}, {0});
    for (auto& c : fat_sink.components)
        if (c.mu_of("L")[0] == Rational(0)) {
            c.dim = 1;
            c.compass = Compass{{Weight{1}, 3}};
        }
    CHECK(code_of(fat_sink) == "two-pointed-ends");

    GridData uneq = build_scroll(4);
    uneq.flags.equalized = false;
    CHECK(code_of(uneq) == "equalized");

    CHECK(code_of(build_bw3_grid(4, {}, {0})) == "inner-levels-nonempty");
    CHECK(code_of(build_bw3_grid(4, {2}, {0, 0})) == "scroll-pattern");
    CHECK(code_of(build_bw3_grid(4, {0, 0}, {0, 0})) == "isolated-points-identity");
    CHECK(code_of(build_bw3_isolated(4, 3)) == "isolated-points-identity");
    CHECK(code_of(build_bw3_grid(5, {1}, {1})) == "fano-divisibility");
    CHECK(code_of(build_bw3_grid(6, {1}, {1})) == "fano-inner-dim");
    CHECK(code_of(build_bw3_grid(5, {0, 3}, {0, 2})) == "scroll-pattern");
    CHECK(code_of(build_bw3_grid(6, {0, 1}, {0, 3})) == "quadric-inner-dim");
    CHECK(code_of(build_bw3_grid(6, {1, 1}, {1, 1})) == "inner-pattern");

    GridData surf = build_p1xp1_o12();
    surf.flags.edges_complete = false;
    CHECK(code_of(surf) == "surface-edges");

    GridData tagged = build_scroll(5);
    for (auto& e : tagged.edges)
        if (e.tags.count(EdgeTag::A)) e.tags = {EdgeTag::E};
    const std::string detail = classify_bw3(tagged).detail;
    CHECK((starts_with(detail, "validation") || starts_with(detail, "tau-bound")));
}

TEST_CASE("untagged isolated grids from the identity") {
    const ClassificationOutcome q = classify_bw3(build_bw3_isolated(3, 3));
    CHECK(q.kind == Bw3Case::QuadricBundle);
    CHECK(q.tau == Rational(2));
    CHECK(classify_bw3(build_bw3_isolated(3, 2)).kind == Bw3Case::Inconsistent);
}
