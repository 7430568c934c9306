#include "gridtorus/localization.hpp"

#include <stdexcept>

namespace gridtorus {

namespace {

LaurentPoly one(std::size_t arity = 1) { return LaurentPoly::constant(Rational(1), arity); }

// 1 - t, 1 - t^-1 and 2 - t - t^-1
LaurentPoly u_poly() { return one() - LaurentPoly::term(1); }
LaurentPoly v_poly() { return one() - LaurentPoly::term(-1); }
LaurentPoly w_poly() { return LaurentPoly::constant(Rational(2)) - LaurentPoly::term(1) - LaurentPoly::term(-1); }

void require_n(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("bandwidth-3 identity needs n >= 2");
}

}  // namespace

LaurentRational localization_term(const FixedComponent& c, const std::string& bundle, std::int64_t m) {
    if (c.dim != 0) throw std::logic_error("localization needs isolated fixed points; '" + c.id + "' has dimension " + std::to_string(c.dim));
    if (!c.compass_specified) throw std::logic_error("component '" + c.id + "' has an unspecified compass");
    const QVector& mu = c.mu_of(bundle);
    if (!is_integral(mu)) throw std::logic_error("mu of '" + c.id + "' is not integral");
    Weight w = to_weight(mu);
    const std::size_t arity = w.size();
    LaurentPoly num = LaurentPoly::monomial(m * w);
    LaurentPoly den = one(arity);
    for (const auto& [nu, k] : c.compass.entries()) {
        if (nu.size() != arity) throw std::logic_error("compass rank differs from mu rank on '" + c.id + "'");
        LaurentPoly factor = one(arity) - LaurentPoly::monomial(-nu);
        den *= factor.pow(static_cast<unsigned>(k));
    }
    return LaurentRational(num, den);
}

LaurentRational euler_char(const GridData& g, const std::string& bundle, std::int64_t m) {
    if (m < 0) throw std::invalid_argument("euler_char needs m >= 0");
    LaurentRational total(static_cast<std::size_t>(g.rank));
    for (const auto& c : g.components) total = total + localization_term(c, bundle, m);
    return total;
}

LaurentPoly bw3_identity_lhs(std::int64_t n, std::int64_t a) {
    require_n(n);
    const auto un = static_cast<unsigned>(n);
    LaurentPoly inner = v_poly().pow(un - 2) + u_poly().pow(un - 2);
    return u_poly().pow(un) + v_poly().pow(un) + Rational(a) * (w_poly() * inner);
}

LaurentPoly bw3_identity_rhs(std::int64_t n) {
    require_n(n);
    return w_poly().pow(static_cast<unsigned>(n));
}

bool verify_bw3_identity(std::int64_t n, std::int64_t a) { return bw3_identity_lhs(n, a) == bw3_identity_rhs(n); }

std::optional<std::int64_t> solve_bw3_a(std::int64_t n) {
    require_n(n);
    // lhs is affine in a: P + a Q
    const LaurentPoly p = bw3_identity_lhs(n, 0);
    const LaurentPoly q = bw3_identity_lhs(n, 1) - p;
    const LaurentPoly diff = bw3_identity_rhs(n) - p;
    if (q.is_zero()) return std::nullopt;
    const auto& [e, qc] = *q.terms().begin();
    Rational a = diff.coefficient(e) / qc;
    if (!a.is_integer() || a.sign() < 0) return std::nullopt;
    if (diff != a * q) return std::nullopt;
    return a.to_int64();
}

LaurentPoly chi_fano4(const Rational& c1_4, const Rational& c1_2c2) {
    LaurentPoly p = LaurentPoly::term(4, c1_4 / Rational(24));
    p += LaurentPoly::term(3, c1_4 / Rational(12));
    p += LaurentPoly::term(2, (c1_2c2 + c1_4) / Rational(24));
    p += LaurentPoly::term(1, c1_2c2 / Rational(24));
    p += LaurentPoly::constant(Rational(1));
    return p;
}

Rational chi_fano4_at_one(const Rational& c1_4, const Rational& c1_2c2) {
    return Rational(1) + c1_4 / Rational(6) + c1_2c2 / Rational(12);
}

bool bogomolov_gate(const Rational& c1_4, const Rational& c1_2c2, std::int64_t tangent_rank) {
    if (tangent_rank < 1) throw std::invalid_argument("tangent rank must be positive");
    return c1_2c2 >= Rational(tangent_rank - 1, 2 * tangent_rank) * c1_4;
}

Fano5Record chi_fano5(const Rational& c1_5, const Rational& c1_3c2, std::optional<std::pair<Rational, Rational>> a,
                      std::optional<std::pair<Rational, Rational>> b) {
    if (c1_5.is_zero()) throw std::invalid_argument("chi_fano5: zero anticanonical degree");
    const Rational& d = c1_5;
    Fano5Record r;
    r.chi1 = Rational(3) + (c1_3c2 + d) / Rational(24);
    r.chi_half = Rational(2) + c1_3c2 / Rational(96) + d / Rational(384);
    if (a) {
        const auto& [a1, a2] = *a;
        bool product = d * a1 * a2 == Rational(240);
        bool second = c1_3c2 == d / Rational(5) * (Rational(3) * a1 + Rational(3) * a2 + Rational(1));
        r.factorization_check = product && second;
        LaurentPoly t = LaurentPoly::term(1);
        LaurentPoly t2 = LaurentPoly::term(2);
        LaurentPoly half = LaurentPoly::constant(Rational(1, 2));
        r.polynomial = (d / Rational(120)) * ((t + half) * (t2 + t + LaurentPoly::constant(a1)) *
                                              (t2 + t + LaurentPoly::constant(a2)));
    }
    if (b) {
        const auto& [b1, b2] = *b;
        bool product = d * b2 * (b2 - b1 + Rational(1)) == Rational(240);
        bool second = c1_3c2 == d / Rational(5) * (Rational(6) * b2 - Rational(3) * b1 * b1 + Rational(3) * b1 + Rational(1));
        r.alternate_check = product && second;
    }
    return r;
}

LaurentPoly serre_reflect(const LaurentPoly& p) {
    if (p.arity() != 1) throw std::invalid_argument("serre_reflect needs one variable");
    LaurentPoly s = LaurentPoly::constant(Rational(-1)) - LaurentPoly::term(1);
    LaurentPoly out(1);
    for (const auto& [e, c] : p.terms()) {
        if (e[0] < 0) throw std::invalid_argument("serre_reflect needs a polynomial");
        out += c * s.pow(static_cast<unsigned>(e[0]));
    }
    return out;
}

}  // namespace gridtorus
