#pragma once
// Equivariant Euler characteristics for grids with isolated fixed points,
// the bandwidth-3 Laurent identity, and Hilbert polynomials of Fano 4- and
// 5-folds written in Chern numbers.

#include "gridtorus/grid.hpp"
#include "gridtorus/laurent.hpp"

#include <optional>
#include <utility>

namespace gridtorus {

/// x^{m mu(Y)} * prod over compass entries nu of (1 - x^{-nu})^{-1}.
LaurentRational localization_term(const FixedComponent& c, const std::string& bundle, std::int64_t m);

/// Sum of localization terms over all components. Works in any torus rank
/// (one variable per coordinate). Throws std::logic_error when a component
/// is positive dimensional, has an unspecified compass or non-integral mu.
LaurentRational euler_char(const GridData& g, const std::string& bundle, std::int64_t m);

/// Left and right hand sides of
/// (1-t)^n + (1-t^-1)^n + a(2-t-t^-1)((1-t^-1)^{n-2} + (1-t)^{n-2}) = (2-t-t^-1)^n.
LaurentPoly bw3_identity_lhs(std::int64_t n, std::int64_t a);
LaurentPoly bw3_identity_rhs(std::int64_t n);
bool verify_bw3_identity(std::int64_t n, std::int64_t a);
/// The nonnegative integer a making the identity hold, if any.
std::optional<std::int64_t> solve_bw3_a(std::int64_t n);

/// chi(t) for a Fano 4-fold in terms of c1^4 and c1^2 c2.
LaurentPoly chi_fano4(const Rational& c1_4, const Rational& c1_2c2);
Rational chi_fano4_at_one(const Rational& c1_4, const Rational& c1_2c2);
/// c1^2 c2 >= (r-1)/(2r) c1^4 with r the rank of the tangent bundle.
bool bogomolov_gate(const Rational& c1_4, const Rational& c1_2c2, std::int64_t tangent_rank = 4);

struct Fano5Record {
    Rational chi1;
    Rational chi_half;
    /// d a1 a2 = 240 and c1^3c2 = (d/5)(3a1+3a2+1); empty without (a1, a2).
    std::optional<bool> factorization_check;
    /// d b2 (b2-b1+1) = 240 and c1^3c2 = (d/5)(6b2-3b1^2+3b1+1); empty without (b1, b2).
    std::optional<bool> alternate_check;
    /// (d/120)(t+1/2)(t^2+t+a1)(t^2+t+a2) when (a1, a2) is given.
    std::optional<LaurentPoly> polynomial;
};

/// Throws std::invalid_argument when c1^5 is zero.
Fano5Record chi_fano5(const Rational& c1_5, const Rational& c1_3c2,
                      std::optional<std::pair<Rational, Rational>> a = std::nullopt,
                      std::optional<std::pair<Rational, Rational>> b = std::nullopt);

/// p(-1-t) as a polynomial in t.
LaurentPoly serre_reflect(const LaurentPoly& p);

}  // namespace gridtorus
