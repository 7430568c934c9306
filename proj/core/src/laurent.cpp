#include "gridtorus/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gridtorus {

namespace {

Exponent add_exp(const Exponent& a, const Exponent& b) {
    Exponent out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Exponent componentwise_min(const LaurentPoly& p) {
    Exponent m = p.terms().begin()->first;
    for (const auto& [e, c] : p.terms())
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

Exponent negate(Exponent e) {
    for (auto& x : e) x = -x;
    return e;
}

bool dominates(const Exponent& a, const Exponent& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < b[i]) return false;
    return true;
}

Exponent sub_exp(const Exponent& a, const Exponent& b) {
    Exponent out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

std::string monomial_str(const Exponent& e) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) os << '*';
        first = false;
        if (e.size() == 1)
            os << 't';
        else
            os << 'x' << (i + 1);
        if (e[i] != 1) os << '^' << e[i];
    }
    return os.str();
}

// Dense coefficients of a one-variable polynomial, index = degree.
using Dense = std::vector<Rational>;

Dense to_dense(const LaurentPoly& p) {
    if (p.is_zero()) return {};
    if (p.low_degree() < 0) throw std::logic_error("to_dense: negative exponent");
    Dense d(static_cast<std::size_t>(p.high_degree()) + 1);
    for (const auto& [e, c] : p.terms()) d[static_cast<std::size_t>(e[0])] = c;
    return d;
}

LaurentPoly from_dense(const Dense& d) {
    LaurentPoly p(1);
    for (std::size_t i = 0; i < d.size(); ++i)
        if (!d[i].is_zero()) p += LaurentPoly::term(static_cast<std::int64_t>(i), d[i]);
    return p;
}

void trim(Dense& d) {
    while (!d.empty() && d.back().is_zero()) d.pop_back();
}

// Remainder of a by b (b nonzero), optionally collecting the quotient.
Dense dense_divmod(Dense a, const Dense& b, Dense* q) {
    trim(a);
    if (q) q->assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    const Rational& lead = b.back();
    while (a.size() >= b.size()) {
        Rational f = a.back() / lead;
        std::size_t shift = a.size() - b.size();
        if (q) (*q)[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    if (q) trim(*q);
    return a;
}

}  // namespace

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(std::size_t arity) : arity_(arity) {
    if (arity == 0) throw std::invalid_argument("Laurent polynomial needs at least one variable");
}

LaurentPoly LaurentPoly::constant(const Rational& c, std::size_t arity) {
    LaurentPoly p(arity);
    p.add_term(Exponent(arity, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, const Rational& c) {
    LaurentPoly p(e.size());
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::variable(std::size_t i, std::size_t arity) {
    if (i >= arity) throw std::invalid_argument("variable index out of range");
    Exponent e(arity, 0);
    e[i] = 1;
    return monomial(e);
}

LaurentPoly LaurentPoly::term(std::int64_t e, const Rational& c) { return monomial(Exponent{e}, c); }

void LaurentPoly::add_term(const Exponent& e, const Rational& c) {
    if (e.size() != arity_) throw std::invalid_argument("exponent arity mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void LaurentPoly::require_arity(const LaurentPoly& o) const {
    if (o.arity_ != arity_) throw std::invalid_argument("Laurent polynomial arity mismatch");
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    for (auto x : terms_.begin()->first)
        if (x != 0) return false;
    return true;
}

Rational LaurentPoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::int64_t LaurentPoly::low_degree() const {
    if (arity_ != 1) throw std::logic_error("low_degree needs one variable");
    if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
    return terms_.begin()->first[0];
}

std::int64_t LaurentPoly::high_degree() const {
    if (arity_ != 1) throw std::logic_error("high_degree needs one variable");
    if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
    return terms_.rbegin()->first[0];
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    require_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    require_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    require_arity(o);
    LaurentPoly out(arity_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) out.add_term(add_exp(e1, e2), c1 * c2);
    *this = std::move(out);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_) x *= c;
    return *this;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly result = constant(Rational(1), arity_);
    LaurentPoly base = *this;
    while (k) {
        if (k & 1U) result *= base;
        k >>= 1U;
        if (k) base *= base;
    }
    return result;
}

LaurentPoly LaurentPoly::shifted(const Exponent& e) const {
    if (e.size() != arity_) throw std::invalid_argument("shift arity mismatch");
    LaurentPoly out(arity_);
    for (const auto& [x, c] : terms_) out.terms_.emplace(add_exp(x, e), c);
    return out;
}

LaurentPoly LaurentPoly::substitute(const Projection& p) const {
    if (p.source_rank() != arity_) throw std::invalid_argument("substitution arity mismatch");
    LaurentPoly out(p.target_rank());
    for (const auto& [e, c] : terms_) out.add_term(p.apply(e), c);
    return out;
}

LaurentPoly LaurentPoly::compose_power(std::int64_t k) const {
    return substitute(Projection(std::vector<std::vector<std::int64_t>>{{k}}));
}

Rational LaurentPoly::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != arity_) throw std::invalid_argument("evaluation point arity mismatch");
    Rational total;
    for (const auto& [e, c] : terms_) {
        Rational v = c;
        for (std::size_t i = 0; i < arity_; ++i) {
            std::int64_t k = e[i];
            if (k == 0) continue;
            Rational base = point[i];
            if (k < 0) {
                base = base.inverse();
                k = -k;
            }
            Rational pw(1);
            for (std::int64_t j = 0; j < k; ++j) pw *= base;
            v *= pw;
        }
        total += v;
    }
    return total;
}

Rational LaurentPoly::coefficient_sum() const {
    Rational total;
    for (const auto& [e, c] : terms_) total += c;
    return total;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono = monomial_str(e);
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << '-';
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (mono.empty()) {
            os << mag.str();
        } else {
            if (mag != Rational(1)) os << mag.str() << '*';
            os << mono;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- division

bool poly_divides(const LaurentPoly& divisor, const LaurentPoly& dividend, LaurentPoly* quotient) {
    if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
    if (divisor.arity() != dividend.arity()) throw std::invalid_argument("arity mismatch");
    const std::size_t n = divisor.arity();
    if (dividend.is_zero()) {
        if (quotient) *quotient = LaurentPoly(n);
        return true;
    }
    // Strip monomial content; what is left is coprime to every variable.
    Exponent dmin = componentwise_min(divisor);
    Exponent nmin = componentwise_min(dividend);
    LaurentPoly d = divisor.shifted(negate(dmin));
    LaurentPoly r = dividend.shifted(negate(nmin));
    LaurentPoly q(n);
    const auto& [dlead_e, dlead_c] = *d.terms().rbegin();
    while (!r.is_zero()) {
        const auto& [rlead_e, rlead_c] = *r.terms().rbegin();
        if (!dominates(rlead_e, dlead_e)) return false;
        LaurentPoly t = LaurentPoly::monomial(sub_exp(rlead_e, dlead_e), rlead_c / dlead_c);
        q += t;
        r -= t * d;
    }
    if (quotient) *quotient = q.shifted(sub_exp(nmin, dmin));
    return true;
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    Dense x = to_dense(a);
    Dense y = to_dense(b);
    trim(x);
    trim(y);
    while (!y.empty()) {
        Dense r = dense_divmod(x, y, nullptr);
        x = std::move(y);
        y = std::move(r);
    }
    if (x.empty()) return LaurentPoly(1);
    Rational lead = x.back();
    for (auto& c : x) c /= lead;
    return from_dense(x);
}

// ---------------------------------------------------------------- LaurentRational

LaurentRational::LaurentRational(std::size_t arity)
    : num_(arity), den_(LaurentPoly::constant(Rational(1), arity)) {}

LaurentRational::LaurentRational(LaurentPoly num)
    : num_(std::move(num)), den_(LaurentPoly::constant(Rational(1), num_.arity())) {}

LaurentRational::LaurentRational(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.arity() != den_.arity()) throw std::invalid_argument("numerator/denominator arity mismatch");
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
}

void LaurentRational::normalize() {
    const std::size_t n = num_.arity();
    if (num_.is_zero()) {
        den_ = LaurentPoly::constant(Rational(1), n);
        return;
    }
    if (n == 1) {
        std::int64_t ln = num_.low_degree();
        std::int64_t ld = den_.low_degree();
        LaurentPoly a = num_.shifted({-ln});
        LaurentPoly b = den_.shifted({-ld});
        LaurentPoly g = poly_gcd(a, b);
        if (!g.is_constant()) {
            Dense qa, qb;
            dense_divmod(to_dense(a), to_dense(g), &qa);
            dense_divmod(to_dense(b), to_dense(g), &qb);
            a = from_dense(qa);
            b = from_dense(qb);
        }
        Rational c0 = b.coefficient(std::int64_t{0});
        a *= c0.inverse();
        b *= c0.inverse();
        num_ = a.shifted({ln - ld});
        den_ = std::move(b);
        return;
    }
    // Several variables: monomial/scalar convention, then try exact division.
    const auto& [lex_min, coeff] = *den_.terms().begin();
    Exponent shift = negate(lex_min);
    Rational scale = coeff.inverse();
    num_ = num_.shifted(shift) * scale;
    den_ = den_.shifted(shift) * scale;
    LaurentPoly q(n);
    if (poly_divides(den_, num_, &q)) {
        num_ = std::move(q);
        den_ = LaurentPoly::constant(Rational(1), n);
    }
}

bool LaurentRational::is_laurent_polynomial() const {
    return den_ == LaurentPoly::constant(Rational(1), den_.arity());
}

LaurentPoly LaurentRational::to_laurent_poly() const {
    if (!is_laurent_polynomial())
        throw std::domain_error("rational function " + str() + " is not a Laurent polynomial");
    return num_;
}

LaurentRational LaurentRational::operator-() const {
    LaurentRational out = *this;
    out.num_ = -out.num_;
    return out;
}

LaurentRational operator+(const LaurentRational& a, const LaurentRational& b) {
    if (a.den_ == b.den_) return LaurentRational(a.num_ + b.num_, a.den_);
    return LaurentRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

LaurentRational operator-(const LaurentRational& a, const LaurentRational& b) { return a + (-b); }

LaurentRational operator*(const LaurentRational& a, const LaurentRational& b) {
    return LaurentRational(a.num_ * b.num_, a.den_ * b.den_);
}

LaurentRational operator/(const LaurentRational& a, const LaurentRational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    return LaurentRational(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const LaurentRational& a, const LaurentRational& b) {
    if (a.arity() != b.arity()) return false;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

Rational LaurentRational::evaluate(const std::vector<Rational>& point) const {
    Rational d = den_.evaluate(point);
    if (d.is_zero()) throw std::domain_error("rational function " + str() + " has a pole at the evaluation point");
    return num_.evaluate(point) / d;
}

LaurentRational LaurentRational::substitute(const Projection& p) const {
    LaurentPoly d = den_.substitute(p);
    if (d.is_zero()) throw std::domain_error("substitution sends the denominator to zero");
    return LaurentRational(num_.substitute(p), d);
}

std::string LaurentRational::str() const {
    if (is_laurent_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

LaurentRational lr_add(const LaurentRational& a, const LaurentRational& b) { return a + b; }
LaurentRational lr_mul(const LaurentRational& a, const LaurentRational& b) { return a * b; }
LaurentRational lr_normalize(const LaurentRational& a) {
    return LaurentRational(a.numerator(), a.denominator());
}

}  // namespace gridtorus
