#pragma once
// Laurent polynomials and rational functions with rational coefficients.
//
// One-variable rational functions are reduced by a polynomial gcd and
// stored with a denominator whose lowest term is the constant 1. In more
// variables no gcd is taken: the denominator is shifted so that its
// lexicographically smallest exponent is zero with coefficient 1, and an
// exact division is attempted so Laurent polynomials are always detected.

#include "gridtorus/lattice.hpp"
#include "gridtorus/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace gridtorus {

using Exponent = std::vector<std::int64_t>;

class LaurentPoly {
public:
    explicit LaurentPoly(std::size_t arity = 1);

    static LaurentPoly constant(const Rational& c, std::size_t arity = 1);
    static LaurentPoly monomial(const Exponent& e, const Rational& c = Rational(1));
    static LaurentPoly variable(std::size_t i, std::size_t arity = 1);
    /// c * t^e in one variable.
    static LaurentPoly term(std::int64_t e, const Rational& c = Rational(1));

    std::size_t arity() const noexcept { return arity_; }
    const std::map<Exponent, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    Rational coefficient(const Exponent& e) const;
    /// One-variable shorthand.
    Rational coefficient(std::int64_t e) const { return coefficient(Exponent{e}); }

    /// Lowest / highest exponent in one variable; throws on zero or arity != 1.
    std::int64_t low_degree() const;
    std::int64_t high_degree() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& c);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

    LaurentPoly pow(unsigned k) const;
    /// Multiplies by the monomial with exponent e.
    LaurentPoly shifted(const Exponent& e) const;
    /// Replaces every exponent e by p(e); arity becomes p.target_rank().
    LaurentPoly substitute(const Projection& p) const;
    /// One-variable substitution t -> t^k (k may be negative).
    LaurentPoly compose_power(std::int64_t k) const;
    /// Throws std::domain_error when a negative power meets a zero value.
    Rational evaluate(const std::vector<Rational>& point) const;
    Rational evaluate(const Rational& t) const { return evaluate(std::vector<Rational>{t}); }
    /// Value with every variable set to 1.
    Rational coefficient_sum() const;

    /// Human-readable form in t (one variable) or x1..xr.
    std::string str() const;

private:
    void require_arity(const LaurentPoly& o) const;
    void add_term(const Exponent& e, const Rational& c);

    std::size_t arity_;
    std::map<Exponent, Rational> terms_;
};

class LaurentRational {
public:
    explicit LaurentRational(std::size_t arity = 1);
    LaurentRational(LaurentPoly num);  // NOLINT: a polynomial is a rational function
    /// Throws std::domain_error when den is zero.
    LaurentRational(LaurentPoly num, LaurentPoly den);

    std::size_t arity() const noexcept { return num_.arity(); }
    const LaurentPoly& numerator() const noexcept { return num_; }
    const LaurentPoly& denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_laurent_polynomial() const;
    /// Throws std::domain_error when a denominator remains.
    LaurentPoly to_laurent_poly() const;

    LaurentRational operator-() const;
    friend LaurentRational operator+(const LaurentRational& a, const LaurentRational& b);
    friend LaurentRational operator-(const LaurentRational& a, const LaurentRational& b);
    friend LaurentRational operator*(const LaurentRational& a, const LaurentRational& b);
    friend LaurentRational operator/(const LaurentRational& a, const LaurentRational& b);
    friend bool operator==(const LaurentRational& a, const LaurentRational& b);

    /// Exact value; throws std::domain_error at a pole.
    Rational evaluate(const std::vector<Rational>& point) const;
    Rational evaluate(const Rational& t) const { return evaluate(std::vector<Rational>{t}); }
    LaurentRational substitute(const Projection& p) const;

    std::string str() const;

private:
    void normalize();

    LaurentPoly num_;
    LaurentPoly den_;
};

LaurentRational lr_add(const LaurentRational& a, const LaurentRational& b);
LaurentRational lr_mul(const LaurentRational& a, const LaurentRational& b);
LaurentRational lr_normalize(const LaurentRational& a);

/// True when divisor divides dividend in the Laurent ring; the quotient is
/// written to *quotient when it is non-null.
bool poly_divides(const LaurentPoly& divisor, const LaurentPoly& dividend, LaurentPoly* quotient);
/// Monic gcd of two one-variable polynomials (nonnegative exponents).
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace gridtorus
