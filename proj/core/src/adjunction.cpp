#include "gridtorus/adjunction.hpp"

#include "gridtorus/localization.hpp"

#include <algorithm>
#include <stdexcept>

namespace gridtorus {

namespace {

OrbitRow make_row(EdgeTag tag, std::int64_t n, std::int64_t d1, std::int64_t d2) {
    OrbitRow r{tag, Rational(0), Rational(0), Rational(0)};
    switch (tag) {
        case EdgeTag::A:
            r.deg_L = 1;
            r.deg_minusK = d1 + 2;
            break;
        case EdgeTag::B:
            r.deg_L = 2;
            r.deg_minusK = 2 * n - d1 - 2;
            break;
        case EdgeTag::C:
            r.deg_L = 1;
            r.deg_minusK = 2 * n - 4 - (d1 + d2);
            break;
        case EdgeTag::E:
            r.deg_L = 3;
            r.deg_minusK = 2 * n;
            break;
    }
    r.tau_bound = r.deg_minusK / r.deg_L;
    return r;
}

void require_dim(std::int64_t n, std::int64_t d, const char* name) {
    if (d < 0 || d > n - 2)
        throw std::invalid_argument(std::string(name) + " = " + std::to_string(d) + " outside 0.." + std::to_string(n - 2));
}

std::string strip(const std::string& s) {
    std::string out;
    for (char ch : s)
        if (ch != ' ' && ch != '(' && ch != ')') out += ch;
    return out;
}

std::string level_summary(const std::vector<const FixedComponent*>& level) {
    std::vector<std::int64_t> dims;
    for (const auto* c : level) dims.push_back(c->dim);
    std::sort(dims.begin(), dims.end());
    std::string s = "[";
    for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
    return s + "]";
}

EdgeTag tag_of(const GridData& g, const OrbitEdge& e) {
    if (e.tags.size() == 1) return *e.tags.begin();
    if (!e.tags.empty()) throw std::invalid_argument("edge " + e.src + "->" + e.dst + " carries several tags");
    // Untagged: read the type off the L-weights of the endpoints.
    Rational hi = g.at(e.src).mu_of("L").at(0);
    Rational lo = g.at(e.dst).mu_of("L").at(0);
    Rational drop = hi - lo;
    if (drop == Rational(3)) return EdgeTag::E;
    if (drop == Rational(2)) return EdgeTag::B;
    if (drop == Rational(1)) return (hi == Rational(2) && lo == Rational(1)) ? EdgeTag::C : EdgeTag::A;
    throw std::invalid_argument("edge " + e.src + "->" + e.dst + " has no bandwidth-3 orbit type");
}

}  // namespace

std::vector<OrbitRow> orbit_table(std::int64_t n, std::int64_t d_star, std::int64_t d1, std::int64_t d2) {
    if (n < 3) throw std::invalid_argument("orbit_table needs n >= 3");
    require_dim(n, d_star, "d_star");
    require_dim(n, d1, "d1");
    require_dim(n, d2, "d2");
    return {make_row(EdgeTag::A, n, d_star, 0), make_row(EdgeTag::B, n, d_star, 0), make_row(EdgeTag::C, n, d1, d2),
            make_row(EdgeTag::E, n, 0, 0)};
}

OrbitRow orbit_row(const GridData& g, const OrbitEdge& e) {
    if (e.tags.size() != 1) throw std::invalid_argument("edge " + e.src + "->" + e.dst + " must carry exactly one tag");
    const EdgeTag tag = *e.tags.begin();
    const auto& s = g.at(e.src);
    const auto& d = g.at(e.dst);
    if (tag == EdgeTag::C) {
        require_dim(g.n, s.dim, "d1");
        require_dim(g.n, d.dim, "d2");
        return make_row(tag, g.n, s.dim, d.dim);
    }
    const std::int64_t inner = std::max(s.dim, d.dim);
    if (tag != EdgeTag::E) require_dim(g.n, inner, "d_star");
    return make_row(tag, g.n, inner, 0);
}

Rational tau_lower_bound(const GridData& g) {
    if (g.edges.empty()) throw std::invalid_argument("tau_lower_bound needs orbit edges");
    std::optional<Rational> best;
    for (const auto& e : g.edges) {
        if (e.tags.empty()) throw std::invalid_argument("untagged edge " + e.src + "->" + e.dst);
        OrbitRow r = orbit_row(g, e);
        if (!best || r.tau_bound > *best) best = r.tau_bound;
    }
    return *best;
}

std::string to_string(TauVerdict v) {
    switch (v) {
        case TauVerdict::Allowed: return "allowed";
        case TauVerdict::Forbidden: return "forbidden";
        case TauVerdict::Exceptional: return "exceptional";
    }
    return "?";
}

TauVerdict tau_integrality(std::int64_t n, const Rational& tau, const std::string& label) {
    if (n < 3) throw std::invalid_argument("tau_integrality needs n >= 3");
    if (tau <= Rational(n - 2)) throw std::invalid_argument("tau_integrality needs tau > n-2");
    const std::string key = strip(label);
    if ((key == "P^4,O2" && n == 4) || (key == "P^3,O3" && n == 3) || (key == "Q^3,O2" && n == 3))
        return TauVerdict::Exceptional;
    if (tau.is_integer() && tau >= Rational(n - 1) && tau <= Rational(n + 1)) return TauVerdict::Allowed;
    return TauVerdict::Forbidden;
}

std::string to_string(SurfaceCase s) {
    return s == SurfaceCase::P1xP1_O12 ? "P1xP1_O12" : "Hirzebruch_F2";
}

SurfaceCase surface_bw3(const GridData& g0) {
    if (g0.rank != 1 || g0.n != 2) throw std::invalid_argument("surface_bw3 needs a rank-1 grid with n = 2");
    if (g0.components.size() != 4) throw std::invalid_argument("surface_bw3 needs exactly four fixed points");
    for (const auto& c : g0.components)
        if (c.dim != 0) throw std::invalid_argument("surface_bw3 needs isolated fixed points");
    GridData g = normalize_linearization(g0, "L");
    for (std::int64_t lvl = 0; lvl <= 3; ++lvl)
        if (components_at(g, "L", Rational(lvl)).size() != 1)
            throw std::invalid_argument("surface_bw3 needs one fixed point at each of the levels 0,1,2,3");
    bool has_b = false, has_c = false;
    for (const auto& e : g.edges) {
        EdgeTag t = tag_of(g, e);
        has_b = has_b || t == EdgeTag::B;
        has_c = has_c || t == EdgeTag::C;
    }
    if (has_b && !has_c) return SurfaceCase::P1xP1_O12;
    if (has_c && !has_b) return SurfaceCase::Hirzebruch_F2;
    throw std::invalid_argument(has_b ? "orbits of types B and C both present: no bandwidth-3 surface fits"
                                      : "neither B nor C orbits present: no bandwidth-3 surface fits");
}

std::string to_string(Bw3Case c) {
    switch (c) {
        case Bw3Case::Scroll: return "Scroll";
        case Bw3Case::QuadricBundle: return "QuadricBundle";
        case Bw3Case::FanoRhoOne: return "FanoRhoOne";
        case Bw3Case::Inconsistent: return "Inconsistent";
    }
    return "?";
}

ClassificationOutcome classify_bw3(const GridData& g0) {
    ClassificationOutcome out;
    auto fail = [&](const std::string& reason) {
        out.kind = Bw3Case::Inconsistent;
        out.detail = reason;
        out.tau.reset();
        return out;
    };
    auto& certs = out.certificates;

    if (g0.rank != 1) return fail("rank: a C*-action (rank 1) is required");
    if (auto v = validate(g0); !v.empty()) return fail("validation: " + v.front().str());
    if (!g0.flags.equalized) return fail("equalized: the action must be equalized");
    const std::int64_t n = g0.n;
    if (n < 2) return fail("dimension: n >= 2 is required");
    for (const auto& c : g0.components) {
        auto it = c.mu.find("L");
        if (it == c.mu.end() || !is_integral(it->second))
            return fail("linearization: every component needs an integral mu for L");
    }

    GridData g;
    try {
        g = normalize_linearization(g0, "L");
    } catch (const std::exception& e) {
        return fail(std::string("two-pointed-ends: ") + e.what());
    }
    if (bandwidth(g, "L") != Rational(3)) return fail("bandwidth: L must have bandwidth 3, got " + bandwidth(g, "L").str());
    certs.push_back("equalized, bandwidth 3");

    auto sinks = components_at(g, "L", Rational(0));
    auto sources = components_at(g, "L", Rational(3));
    if (sinks.size() != 1 || sources.size() != 1 || sinks[0]->dim != 0 || sources[0]->dim != 0)
        return fail("two-pointed-ends: source and sink must be single points");
    if (rk_minus(*sinks[0]) != n || rk_plus(*sources[0]) != n)
        return fail("two-pointed-ends: sink compass must be (-1)^n and source compass (+1)^n");
    certs.push_back("source and sink are isolated points");

    if (n == 2) {
        if (!g.flags.edges_complete)
            return fail("surface-edges: n = 2 needs the complete orbit graph to separate the two surfaces");
        try {
            SurfaceCase s = surface_bw3(g);
            certs.push_back("surface case " + to_string(s));
            if (s == SurfaceCase::P1xP1_O12) {
                out.kind = Bw3Case::QuadricBundle;
                out.detail = "surface P1xP1 with O(1,2), that is P1 x Q^1 (no C orbit)";
            } else {
                out.kind = Bw3Case::Scroll;
                out.detail = "surface P(O(1)+O(3)) over P1, the Hirzebruch surface F2 (no B orbit)";
            }
            return out;
        } catch (const std::exception& e) {
            return fail(std::string("surface-pattern: ") + e.what());
        }
    }

    auto y1 = components_at(g, "L", Rational(1));
    auto y2 = components_at(g, "L", Rational(2));
    if (y1.empty() || y2.empty()) return fail("inner-levels-nonempty: both inner levels must contain fixed components");
    certs.push_back("inner levels nonempty: level 1 dims " + level_summary(y1) + ", level 2 dims " + level_summary(y2));
    for (const auto* c : y1)
        if (rk_plus(*c) != 1) return fail("inner-rank: rk+ must be 1 on level 1, fails on '" + c->id + "'");
    for (const auto* c : y2)
        if (rk_minus(*c) != 1) return fail("inner-rank: rk- must be 1 on level 2, fails on '" + c->id + "'");
    certs.push_back("rk+ = 1 on level 1 and rk- = 1 on level 2");

    auto has_dim = [](const std::vector<const FixedComponent*>& lvl, std::int64_t d) {
        return std::any_of(lvl.begin(), lvl.end(), [d](auto* c) { return c->dim == d; });
    };
    auto dims_of = [](const std::vector<const FixedComponent*>& lvl) {
        std::vector<std::int64_t> d;
        for (auto* c : lvl) d.push_back(c->dim);
        std::sort(d.begin(), d.end());
        return d;
    };

    if (has_dim(y1, n - 2) || has_dim(y2, n - 2)) {
        if (y1.size() == 1 && y2.size() == 1 && y1[0]->dim == n - 2 && y2[0]->dim == n - 2) {
            out.kind = Bw3Case::Scroll;
            out.tau = Rational(n);
            out.detail = "scroll over P1: one P^" + std::to_string(n - 2) + " on each inner level, tau = n";
            certs.push_back("codimension-2 inner components force tau >= n");
        } else {
            return fail("scroll-pattern: a codimension-2 inner component forces tau >= n, which needs exactly one P^" +
                        std::to_string(n - 2) + " on each inner level");
        }
    } else if (n == 3 && dims_of(y1) == std::vector<std::int64_t>{0, 0, 0} &&
               dims_of(y2) == std::vector<std::int64_t>{0, 0, 0}) {
        if (solve_bw3_a(3) != std::optional<std::int64_t>(3))
            return fail("isolated-points-identity: three points per level must solve the bandwidth-3 identity");
        out.kind = Bw3Case::QuadricBundle;
        out.tau = Rational(2);
        out.detail = "rho=3 product case (P1xP1xP1, O(1,1,1)) = P1 x Q^2, tau = 2n/3 = n-1 = 2";
        certs.push_back("three isolated points per inner level match the identity solution a = 3");
    } else if (n >= 4 && dims_of(y1) == std::vector<std::int64_t>{0, n - 3} &&
               dims_of(y2) == std::vector<std::int64_t>{0, n - 3}) {
        out.kind = Bw3Case::QuadricBundle;
        out.tau = Rational(n - 1);
        out.detail = "quadric bundle P1 x Q^" + std::to_string(n - 1) + ": a point and a Q^" + std::to_string(n - 3) +
                     " on each inner level, tau = n-1";
        certs.push_back("inner pattern {point, Q^{n-3}} on both levels");
    } else if (y1.size() == 1 && y2.size() == 1) {
        if (n % 3 != 0 || n < 6)
            return fail("fano-divisibility: a single inner component per level needs n divisible by 3 and n >= 6, got n = " +
                        std::to_string(n));
        const std::int64_t d = 2 * n / 3 - 2;
        if (y1[0]->dim != d || y2[0]->dim != d)
            return fail("fano-inner-dim: inner components must have dimension 2n/3-2 = " + std::to_string(d) + ", got " +
                        std::to_string(y1[0]->dim) + " and " + std::to_string(y2[0]->dim));
        out.kind = Bw3Case::FanoRhoOne;
        out.tau = Rational(2 * n, 3);
        out.detail = "Fano of Picard number one and index 2n/3 = " + std::to_string(2 * n / 3) +
                     ", inner components of dimension " + std::to_string(d);
        certs.push_back("n divisible by 3, n >= 6, inner dims 2n/3-2");
    } else {
        bool isolated = true;
        for (const auto* c : y1) isolated = isolated && c->dim == 0;
        for (const auto* c : y2) isolated = isolated && c->dim == 0;
        auto has_point = [&](const std::vector<const FixedComponent*>& lvl) { return has_dim(lvl, 0); };
        if (n >= 4 && y1.size() == 2 && y2.size() == 2 && has_point(y1) && has_point(y2) && !isolated)
            return fail("quadric-inner-dim: a point and a Q^" + std::to_string(n - 3) +
                        " are needed on each inner level, got dims " + level_summary(y1) + " / " + level_summary(y2));
        if (isolated) {
            auto a = solve_bw3_a(n);
            return fail("isolated-points-identity: " + std::to_string(y1.size()) +
                        " isolated points per level, the bandwidth-3 identity allows " +
                        (a ? std::to_string(*a) : std::string("none")) + " for n = " + std::to_string(n));
        }
        return fail("inner-pattern: levels " + level_summary(y1) + " / " + level_summary(y2) +
                    " match none of the scroll, quadric bundle or Fano patterns");
    }

    bool tagged = !g.edges.empty() && std::all_of(g.edges.begin(), g.edges.end(), [](const OrbitEdge& e) {
        return e.tags.size() == 1;
    });
    if (tagged && out.tau) {
        Rational bound;
        try {
            bound = tau_lower_bound(g);
        } catch (const std::exception& e) {
            return fail(std::string("tau-bound: ") + e.what());
        }
        if (bound != *out.tau)
            return fail("tau-bound: tagged orbits give tau >= " + bound.str() + " but the case needs tau = " + out.tau->str());
        certs.push_back("tau lower bound from tagged orbits = " + bound.str());
    }
    return out;
}

}  // namespace gridtorus
