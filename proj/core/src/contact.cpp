#include "gridtorus/contact.hpp"

#include "gridtorus/adjunction.hpp"
#include "gridtorus/families.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gridtorus {

namespace {

const char* kPoint = "\xE2\x80\xA2";     // bullet
const char* kUnion = "\xE2\x8A\x94";     // square cup
const char* kEmpty = "\xE2\x88\x85";     // empty set

std::int64_t dot(const Projection& p, const Weight& w) { return p.apply(w).at(0); }

}  // namespace

int mod6(std::int64_t i) { return static_cast<int>(((i % 6) + 6) % 6); }

const Weight& ContactHexagonData::a(std::int64_t i) const { return alpha[static_cast<std::size_t>(mod6(i))]; }
const Weight& ContactHexagonData::b(std::int64_t i) const { return beta[static_cast<std::size_t>(mod6(i))]; }

ContactHexagonData contact_hexagon(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("contact hexagon needs n >= 2");
    ContactHexagonData h;
    h.n = n;
    h.beta = {Weight{0, 1}, Weight{1, 0}, Weight{1, -1}, Weight{0, -1}, Weight{-1, 0}, Weight{-1, 1}};
    for (int i = 0; i < 6; ++i) h.alpha[static_cast<std::size_t>(i)] = h.b(i) + h.b(i + 1);
    const std::int64_t m = n + 4;
    std::vector<std::int64_t> dims{0};
    if (m == 8) dims = {0, 0, 0};
    if (m >= 9) dims = {0, m - 8};
    for (int i = 0; i < 6; ++i) h.inner_dims[i] = dims;
    return h;
}

Compass compass_alpha(const ContactHexagonData& h, std::int64_t i) {
    const Weight& base = h.a(i - 1);
    Compass c;
    c.add(h.a(i) - base);
    c.add(h.a(i - 2) - base);
    c.add(-base);
    c.add(h.b(i) - base, h.n - 1);
    c.add(h.b(i - 1) - base, h.n - 1);
    return c;
}

Compass compass_inner(const ContactHexagonData& h, std::int64_t i, std::int64_t d) {
    if (d < 0 || d > h.n - 2) throw std::invalid_argument("inner dimension outside 0..n-2");
    const Weight& base = h.b(i);
    Compass c;
    c.add(h.b(i + 1));
    c.add(h.b(i - 1));
    c.add(h.b(i + 2) - base);
    c.add(h.b(i - 2) - base);
    c.add(-base, d + 1);
    if (h.n - d - 2 > 0) {
        c.add(h.b(i + 1) - base, h.n - d - 2);
        c.add(h.b(i - 1) - base, h.n - d - 2);
    }
    return c;
}

std::pair<Compass, Compass> contact_compasses(const ContactHexagonData& h, std::int64_t i, std::int64_t d) {
    return {compass_alpha(h, i), compass_inner(h, i, d)};
}

Projection slice_projection(const ContactHexagonData& h, std::int64_t i) {
    const Weight& k = h.b(i + 2);
    Projection p(std::vector<std::vector<std::int64_t>>{{k[1], -k[0]}});
    if (dot(p, h.b(i)) < 0) p = Projection(std::vector<std::vector<std::int64_t>>{{-k[1], k[0]}});
    if (dot(p, h.b(i)) != 1) throw std::logic_error("hexagon basis is not unimodular");
    return p;
}

Weight kernel_generator(const Projection& p) {
    if (p.target_rank() != 1 || p.source_rank() != 2) throw std::invalid_argument("kernel_generator needs a 1x2 projection");
    const std::int64_t a = p.at(0, 0), b = p.at(0, 1);
    const std::int64_t g = std::gcd(a, b);
    if (g == 0) throw std::invalid_argument("zero projection");
    return Weight{b / g, -a / g};
}

Compass restrict_compass(const Compass& c, const Projection& p) {
    const Weight gen = kernel_generator(p);
    const std::size_t pivot = gen[0] != 0 ? 0 : 1;
    Compass out;
    for (const auto& [w, k] : c.entries()) {
        if (dot(p, w) != 0) continue;
        const std::int64_t coeff = w[pivot] / gen[pivot];
        out.add(Weight{coeff}, k);
    }
    return out;
}

GridData build_so_adjoint(std::int64_t m) {
    if (m < 6) throw std::invalid_argument("build_so_adjoint needs m >= 6");
    const std::int64_t n = m - 4;
    const ContactHexagonData h = contact_hexagon(n);
    GridData g;
    g.rank = 2;
    g.n = 2 * n + 1;
    g.flags.contact = true;
    g.metadata["group"] = "SO" + std::to_string(m);
    g.metadata["variety"] = "G(1,Q^" + std::to_string(m - 2) + ")";
    g.metadata["contact_pairing"] = "unverified";

    auto add = [&](std::string id, std::string label, std::int64_t dim, const Weight& mu, const Compass& contact) {
        FixedComponent c;
        c.id = std::move(id);
        c.label = std::move(label);
        c.dim = dim;
        c.mu["L"] = to_qvector(mu);
        c.compass = contact.negated();
        g.components.push_back(std::move(c));
    };

    for (int k = 0; k < 6; ++k) {
        add("alpha" + std::to_string(k), "pt", 0, h.a(k), compass_alpha(h, k + 1));
        add("beta" + std::to_string(k), "pt", 0, h.b(k), compass_inner(h, k, 0));
        const std::string base = "beta" + std::to_string(k) + "_q";
        if (m == 8) {
            add(base + "0", "pt", 0, h.b(k), compass_inner(h, k, 0));
            add(base + "1", "pt", 0, h.b(k), compass_inner(h, k, 0));
        } else if (m >= 9) {
            add(base, quadric_label(m - 8), m - 8, h.b(k), compass_inner(h, k, m - 8));
        }
    }

    const Weight zero{0, 0};
    Compass central;
    for (int k = 0; k < 6; ++k) central.add(h.b(k), 2);
    if (m == 10) {
        add("center0", "P^1", 1, zero, central);
        add("center1", "P^1", 1, zero, central);
    } else if (m == 11) {
        add("center", "P^3", 3, zero, central);
        g.components.back().compass = Compass{};
        g.components.back().compass_specified = false;
    } else if (m >= 12) {
        add("center", "G(1,Q^" + std::to_string(m - 8) + ")", 2 * (m - 8) - 3, zero, central);
        g.components.back().compass = Compass{};
        g.components.back().compass_specified = false;
    }
    return g;
}

GridData so_adjoint_slice(const GridData& so, std::int64_t i) {
    if (so.rank != 2) throw std::invalid_argument("so_adjoint_slice needs the rank-2 grid");
    const ContactHexagonData h = contact_hexagon((so.n - 1) / 2);
    const Projection p = slice_projection(h, i);
    const Weight gen = kernel_generator(p);
    const std::size_t pivot = gen[0] != 0 ? 0 : 1;
    const Weight& origin = h.a(i - 1);

    GridData out;
    out.rank = 1;
    out.n = h.n - 1;
    out.flags.equalized = true;
    out.metadata = so.metadata;
    out.metadata["slice"] = std::to_string(mod6(i));
    for (const auto& c : so.components) {
        const Weight mu = to_weight(c.mu_of("L"));
        if (dot(p, mu) != 1) continue;
        if (!c.compass_specified) throw std::logic_error("component '" + c.id + "' in the slice has no compass");
        const Weight offset = mu - origin;
        FixedComponent nc;
        nc.id = c.id;
        nc.label = c.label;
        nc.dim = c.dim;
        nc.mu["L"] = QVector{Rational(offset[pivot] / gen[pivot])};
        nc.compass = restrict_compass(c.compass, p);
        for (const auto& [w, k] : nc.compass.entries())
            if (w[0] != 1 && w[0] != -1) out.flags.equalized = false;
        out.components.push_back(std::move(nc));
    }
    return out;
}

std::string disjoint_union(std::vector<std::string> labels) {
    if (labels.empty()) return kEmpty;
    std::stable_partition(labels.begin(), labels.end(), [](const std::string& s) { return s == "pt"; });
    std::string out;
    for (std::size_t k = 0; k < labels.size(); ++k) {
        if (k) out += kUnion;
        out += labels[k] == "pt" ? std::string(kPoint) : labels[k];
    }
    return out;
}

AdjointRow adjoint_table_row(AdjointGroup grp, std::int64_t n) {
    if (n < 3) throw std::out_of_range("no table row for n = " + std::to_string(n));
    const std::string u = kUnion;
    AdjointRow r;
    r.n = std::to_string(n);
    switch (grp) {
        case AdjointGroup::SO: {
            r.group = "SO" + std::to_string(n + 4);
            r.rank = std::to_string((n + 4) / 2);
            r.x_adj = "G(1,Q^" + std::to_string(n + 2) + ")";
            if (n == 3) {
                r.x_i = "P1xP1";
                r.y_star = kPoint;
                r.y_0 = kEmpty;
            } else if (n == 4) {
                r.x_i = "P1xP1xP1";
                r.y_star = std::string(kPoint) + u + kPoint + u + kPoint;
                r.y_0 = kEmpty;
            } else {
                r.x_i = "P1xQ^" + std::to_string(n - 2);
                r.y_star = std::string(kPoint) + u + quadric_label(n - 4);
                if (n == 5)
                    r.y_0 = kEmpty;
                else if (n == 6)
                    r.y_0 = "P^1" + u + "P^1";
                else if (n == 7)
                    r.y_0 = "P^3";
                else
                    r.y_0 = "G(1,Q^" + std::to_string(n - 4) + ")";
            }
            break;
        }
        case AdjointGroup::Sp:
            r.group = "Sp" + std::to_string(2 * n + 2);
            r.rank = std::to_string(n + 1);
            r.x_adj = "P^" + std::to_string(2 * n + 1);
            r.x_i = "P^1";
            r.y_star = kEmpty;
            r.y_0 = "P^" + std::to_string(2 * n - 5);
            break;
        case AdjointGroup::SL:
            r.group = "SL" + std::to_string(n + 2);
            r.rank = std::to_string(n + 1);
            r.x_adj = "P(TP^" + std::to_string(n + 1) + ")";
            r.x_i = "P^" + std::to_string(n - 2) + u + "P^" + std::to_string(n - 2);
            r.y_star = n == 3 ? std::string(kPoint) : "P^" + std::to_string(n - 3);
            r.y_0 = "P(TP^" + std::to_string(n - 2) + ")";
            break;
    }
    return r;
}

std::string to_csv(const AdjointRow& r) {
    return r.n + "," + r.group + "," + r.rank + "," + r.x_adj + "," + r.x_i + "," + r.y_star + "," + r.y_0;
}

AdjointRow adjoint_row_from_grid(std::int64_t m) {
    const GridData so = build_so_adjoint(m);
    const ContactHexagonData h = contact_hexagon(m - 4);
    AdjointRow r;
    r.n = std::to_string(m - 4);
    r.group = so.metadata.at("group");
    r.rank = std::to_string(m / 2);
    r.x_adj = so.metadata.at("variety");
    std::vector<std::string> star, centre;
    for (const auto& c : so.components) {
        const Weight mu = to_weight(c.mu_of("L"));
        if (mu == h.b(0)) star.push_back(c.label);
        if (is_zero(mu)) centre.push_back(c.label);
    }
    r.y_star = disjoint_union(star);
    r.y_0 = disjoint_union(centre);

    const GridData slice = so_adjoint_slice(so, 0);
    const ClassificationOutcome oc = classify_bw3(slice);
    if (oc.kind == Bw3Case::QuadricBundle)
        r.x_i = slice.n == 3 ? "P1xP1xP1" : "P1xQ^" + std::to_string(slice.n - 1);
    return r;
}

}  // namespace gridtorus
