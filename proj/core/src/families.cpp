#include "gridtorus/families.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace gridtorus {

namespace {

Compass signs(std::int64_t pos, std::int64_t neg) {
    Compass c;
    if (pos > 0) c.add(Weight{1}, pos);
    if (neg > 0) c.add(Weight{-1}, neg);
    return c;
}

FixedComponent component(std::string id, std::string label, std::int64_t dim, std::int64_t mu, Compass compass) {
    FixedComponent c;
    c.id = std::move(id);
    c.label = std::move(label);
    c.dim = dim;
    c.mu["L"] = QVector{Rational(mu)};
    c.compass = std::move(compass);
    return c;
}

OrbitEdge edge(std::string src, std::string dst, EdgeTag tag, std::int64_t delta = 1) {
    return OrbitEdge{std::move(src), std::move(dst), delta, {tag}};
}

OrbitEdge untagged(std::string src, std::string dst, std::int64_t delta = 1) {
    return OrbitEdge{std::move(src), std::move(dst), delta, {}};
}

std::string projective_label(std::int64_t k) { return k == 0 ? "pt" : "P^" + std::to_string(k); }

std::string dim_label(std::int64_t d) { return d == 0 ? "pt" : "fixed(dim=" + std::to_string(d) + ")"; }

void set_split(FixedComponent& c, std::string plus, std::string minus) {
    c.split[Weight{1}] = SplitPart{1, std::move(plus)};
    c.split[Weight{-1}] = SplitPart{1, std::move(minus)};
}

GridData bw3_frame(std::int64_t n) {
    GridData g;
    g.rank = 1;
    g.n = n;
    g.flags.equalized = true;
    g.components.push_back(component("source", "pt", 0, 3, signs(n, 0)));
    g.components.push_back(component("sink", "pt", 0, 0, signs(0, n)));
    return g;
}

}  // namespace

std::string quadric_label(std::int64_t k) {
    if (k < 1) throw std::invalid_argument("no single-component label for Q^" + std::to_string(k));
    if (k == 1) return "P^1";
    if (k == 2) return "P1xP1";
    return "Q^" + std::to_string(k);
}

GridData build_projective_space(const std::vector<std::pair<std::int64_t, std::int64_t>>& weights) {
    if (weights.empty()) throw std::invalid_argument("build_projective_space needs at least one weight");
    std::set<std::int64_t> seen;
    std::int64_t total = 0;
    for (const auto& [a, d] : weights) {
        if (d < 1) throw std::invalid_argument("block size must be positive");
        if (!seen.insert(a).second) throw std::invalid_argument("weights must be distinct, " + std::to_string(a) + " repeats");
        total += d;
    }
    GridData g;
    g.rank = 1;
    g.n = total - 1;
    g.flags.edges_complete = true;
    g.metadata["variety"] = "P^" + std::to_string(g.n);
    bool equalized = true;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const auto [ai, di] = weights[i];
        Compass c;
        for (std::size_t j = 0; j < weights.size(); ++j) {
            if (j == i) continue;
            const auto [aj, dj] = weights[j];
            c.add(Weight{aj - ai}, dj);
            if (aj - ai != 1 && aj - ai != -1) equalized = false;
        }
        g.components.push_back(component("Y" + std::to_string(i), projective_label(di - 1), di - 1, -ai, c));
    }
    for (std::size_t i = 0; i < weights.size(); ++i)
        for (std::size_t j = 0; j < weights.size(); ++j)
            if (weights[i].first < weights[j].first)
                g.edges.push_back(
                    untagged("Y" + std::to_string(i), "Y" + std::to_string(j), weights[j].first - weights[i].first));
    g.flags.equalized = equalized;
    return g;
}

ScrollSplit parse_scroll_split(std::int64_t n, const std::string& text) {
    std::vector<std::int64_t> parts;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (cur.empty()) throw std::invalid_argument("empty entry in split '" + text + "'");
            parts.push_back(std::stoll(cur));
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    std::sort(parts.begin(), parts.end());
    std::vector<std::int64_t> ones3(static_cast<std::size_t>(std::max<std::int64_t>(n - 1, 0)), 1);
    ones3.push_back(3);
    std::vector<std::int64_t> twos(static_cast<std::size_t>(std::max<std::int64_t>(n - 2, 0)), 1);
    twos.push_back(2);
    twos.push_back(2);
    if (parts == ones3) return ScrollSplit::OnesThree;
    if (parts == twos) return ScrollSplit::TwoTwo;
    throw std::invalid_argument("split '" + text + "' is neither (1^{n-1},3) nor (1^{n-2},2,2) for n = " + std::to_string(n));
}

std::string to_string(ScrollSplit s, std::int64_t n) {
    std::string out;
    const std::int64_t ones = s == ScrollSplit::OnesThree ? n - 1 : n - 2;
    for (std::int64_t i = 0; i < ones; ++i) out += "1,";
    return out + (s == ScrollSplit::OnesThree ? "3" : "2,2");
}

GridData build_scroll(std::int64_t n, ScrollSplit split) {
    if (n < 2) throw std::invalid_argument("build_scroll needs n >= 2");
    if (split == ScrollSplit::TwoTwo && n < 3)
        throw std::invalid_argument("the (2,2) split at n = 2 is P1xP1, not a scroll with two inner P^{n-2}");
    GridData g = bw3_frame(n);
    g.flags.edges_complete = true;
    g.metadata["family"] = "scroll";
    g.metadata["split"] = to_string(split, n);
    auto y2 = component("Y2", projective_label(n - 2), n - 2, 2, signs(1, 1));
    set_split(y2, "O", "O(1)");
    auto y1 = component("Y1", projective_label(n - 2), n - 2, 1, signs(1, 1));
    set_split(y1, "O(1)", "O");
    g.components.push_back(y2);
    g.components.push_back(y1);
    g.edges = {edge("source", "Y2", EdgeTag::A), edge("Y1", "sink", EdgeTag::A), edge("Y2", "Y1", EdgeTag::C),
               edge("source", "sink", EdgeTag::E)};
    if (split == ScrollSplit::TwoTwo) {
        g.edges.push_back(edge("Y2", "sink", EdgeTag::B));
        g.edges.push_back(edge("source", "Y1", EdgeTag::B));
    }
    return g;
}

GridData build_quadric_bundle(std::int64_t n) {
    if (n < 4) throw std::invalid_argument("build_quadric_bundle needs n >= 4 (use build_p1cubed for n = 3)");
    GridData g = bw3_frame(n);
    g.flags.edges_complete = true;
    g.metadata["family"] = "quadric-bundle";
    g.metadata["variety"] = "P1xQ^" + std::to_string(n - 1);
    const std::string q = quadric_label(n - 3);
    g.components.push_back(component("P2", "pt", 0, 2, signs(n - 1, 1)));
    auto q2 = component("Q2", q, n - 3, 2, signs(2, 1));
    q2.split[Weight{1}] = SplitPart{2, "O(1)+O"};
    q2.split[Weight{-1}] = SplitPart{1, "O(1)"};
    g.components.push_back(q2);
    g.components.push_back(component("P1", "pt", 0, 1, signs(1, n - 1)));
    auto q1 = component("Q1", q, n - 3, 1, signs(1, 2));
    q1.split[Weight{1}] = SplitPart{1, "O(1)"};
    q1.split[Weight{-1}] = SplitPart{2, "O(1)+O"};
    g.components.push_back(q1);
    g.edges = {
        edge("source", "P2", EdgeTag::A), edge("source", "Q2", EdgeTag::A), edge("Q1", "sink", EdgeTag::A),
        edge("P1", "sink", EdgeTag::A),   edge("source", "P1", EdgeTag::B), edge("source", "Q1", EdgeTag::B),
        edge("P2", "sink", EdgeTag::B),   edge("Q2", "sink", EdgeTag::B),   edge("Q2", "Q1", EdgeTag::C),
        edge("Q2", "P1", EdgeTag::C),     edge("P2", "Q1", EdgeTag::C),     edge("source", "sink", EdgeTag::E),
    };
    return g;
}

namespace {

using Vertex = std::array<int, 3>;

std::vector<Vertex> cube_vertices() {
    std::vector<Vertex> out;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) out.push_back({a, b, c});
    return out;
}

std::string vertex_id(const Vertex& v) {
    return "v" + std::to_string(v[0]) + std::to_string(v[1]) + std::to_string(v[2]);
}

int level(const Vertex& v) { return v[0] + v[1] + v[2]; }

}  // namespace

GridData build_p1cubed() {
    GridData g;
    g.rank = 1;
    g.n = 3;
    g.flags.equalized = true;
    g.flags.edges_complete = true;
    g.metadata["variety"] = "P1xP1xP1";
    g.metadata["bundle"] = "O(1,1,1)";
    const auto verts = cube_vertices();
    for (const auto& v : verts) {
        Compass c;
        for (int x : v) c.add(Weight{2 * x - 1});
        g.components.push_back(component(vertex_id(v), "pt", 0, level(v), c));
    }
    for (const auto& u : verts)
        for (const auto& v : verts) {
            if (level(u) <= level(v)) continue;
            int diff = 0;
            bool below = true;
            for (int i = 0; i < 3; ++i) {
                diff += u[i] != v[i];
                below = below && u[i] >= v[i];
            }
            if (!below) continue;
            EdgeTag tag;
            if (diff == 3)
                tag = EdgeTag::E;
            else if (diff == 2)
                tag = EdgeTag::B;
            else
                tag = (level(u) == 3 || level(v) == 0) ? EdgeTag::A : EdgeTag::C;
            g.edges.push_back(edge(vertex_id(u), vertex_id(v), tag));
        }
    return g;
}

GridData build_cube_full_torus() {
    GridData g;
    g.rank = 3;
    g.n = 3;
    g.metadata["variety"] = "P1xP1xP1";
    g.metadata["bundle"] = "O(1,1,1)";
    for (const auto& v : cube_vertices()) {
        FixedComponent c;
        c.id = vertex_id(v);
        c.label = "pt";
        c.mu["L"] = QVector{Rational(v[0]), Rational(v[1]), Rational(v[2])};
        for (std::size_t i = 0; i < 3; ++i) c.compass.add((2 * v[i] - 1) * unit_weight(3, i));
        g.components.push_back(c);
    }
    return g;
}

GridData build_sp6() {
    GridData g = bw3_frame(6);
    g.flags.edges_complete = true;
    g.metadata["family"] = "sp6";
    g.metadata["variety"] = "LG(2,5)";
    g.components.push_back(component("Y2", "P^2", 2, 2, signs(3, 1)));
    g.components.push_back(component("Y1", "P^2", 2, 1, signs(1, 3)));
    g.edges = {edge("source", "Y2", EdgeTag::A), edge("Y1", "sink", EdgeTag::A), edge("source", "Y1", EdgeTag::B),
               edge("Y2", "sink", EdgeTag::B),   edge("Y2", "Y1", EdgeTag::C),   edge("source", "sink", EdgeTag::E)};
    return g;
}

GridData build_p1xp1_o12() {
    GridData g = bw3_frame(2);
    g.flags.edges_complete = true;
    g.metadata["variety"] = "P1xP1";
    g.metadata["bundle"] = "O(1,2)";
    g.components.push_back(component("P2", "pt", 0, 2, signs(1, 1)));
    g.components.push_back(component("P1", "pt", 0, 1, signs(1, 1)));
    g.edges = {edge("source", "P2", EdgeTag::A), edge("P1", "sink", EdgeTag::A), edge("source", "P1", EdgeTag::B),
               edge("P2", "sink", EdgeTag::B), edge("source", "sink", EdgeTag::E)};
    return g;
}

GridData build_quadric_full_torus(std::int64_t n) {
    if (n < 3) throw std::invalid_argument("build_quadric_full_torus needs n >= 3");
    const std::int64_t r = (n + 2) / 2;
    const auto ur = static_cast<std::size_t>(r);
    GridData g;
    g.rank = r;
    g.n = n;
    g.metadata["variety"] = "Q^" + std::to_string(n);
    for (std::size_t i = 0; i < ur; ++i)
        for (int s : {1, -1}) {
            FixedComponent c;
            c.id = "e" + std::to_string(i + 1) + (s > 0 ? "+" : "-");
            c.label = "pt";
            Weight ei = s * unit_weight(ur, i);
            c.mu["L"] = to_qvector(ei);
            for (std::size_t j = 0; j < ur; ++j) {
                if (j == i) continue;
                c.compass.add(ei - unit_weight(ur, j));
                c.compass.add(ei + unit_weight(ur, j));
            }
            if (n % 2 == 1) c.compass.add(ei);
            g.components.push_back(c);
        }
    return g;
}

GridData quadric_downgrade_axis(const GridData& full) {
    const auto r = static_cast<std::size_t>(full.rank);
    std::vector<MergeGroup> groups{{{"e1+"}, "e1+", "pt"}, {{"e1-"}, "e1-", "pt"}};
    MergeGroup middle{{}, "Q", quadric_label(full.n - 2)};
    for (std::size_t i = 1; i < r; ++i) {
        middle.members.push_back("e" + std::to_string(i + 1) + "+");
        middle.members.push_back("e" + std::to_string(i + 1) + "-");
    }
    groups.push_back(middle);
    GridData g = downgrade(full, Projection::coordinate(r, 0), groups);
    g.edges = {untagged("e1+", "Q"), untagged("Q", "e1-"), untagged("e1+", "e1-")};
    g.flags.edges_complete = true;
    return g;
}

GridData quadric_downgrade_diagonal(const GridData& full) {
    const auto r = static_cast<std::size_t>(full.rank);
    const std::string label = "P^" + std::to_string(full.n / 2);
    MergeGroup plus{{}, "P+", label}, minus{{}, "P-", label};
    for (std::size_t i = 0; i < r; ++i) {
        plus.members.push_back("e" + std::to_string(i + 1) + "+");
        minus.members.push_back("e" + std::to_string(i + 1) + "-");
    }
    return downgrade(full, Projection::diagonal(r), std::vector<MergeGroup>{plus, minus});
}

GridData build_bw3_isolated(std::int64_t n, std::int64_t a) {
    if (n < 2 || a < 0) throw std::invalid_argument("build_bw3_isolated needs n >= 2 and a >= 0");
    return build_bw3_grid(n, std::vector<std::int64_t>(static_cast<std::size_t>(a), 0),
                          std::vector<std::int64_t>(static_cast<std::size_t>(a), 0));
}

GridData build_bw3_grid(std::int64_t n, const std::vector<std::int64_t>& level1, const std::vector<std::int64_t>& level2) {
    if (n < 2) throw std::invalid_argument("build_bw3_grid needs n >= 2");
    GridData g = bw3_frame(n);
    auto add_level = [&](const std::vector<std::int64_t>& dims, std::int64_t lvl) {
        for (std::size_t k = 0; k < dims.size(); ++k) {
            const std::int64_t d = dims[k];
            if (d < 0 || d > n - 2) throw std::invalid_argument("inner dimension " + std::to_string(d) + " outside 0..n-2");
            Compass c = lvl == 1 ? signs(1, n - d - 1) : signs(n - d - 1, 1);
            g.components.push_back(
                component("y" + std::to_string(lvl) + "_" + std::to_string(k), dim_label(d), d, lvl, c));
        }
    };
    add_level(level1, 1);
    add_level(level2, 2);
    return g;
}

}  // namespace gridtorus
