#pragma once
// Bandwidth-3 orbit intersection numbers, nef-value bounds and the
// classification filter for equalized bandwidth-3 actions with isolated
// source and sink.

#include "gridtorus/grid.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gridtorus {

struct OrbitRow {
    EdgeTag tag;
    Rational deg_L;
    Rational deg_minusK;
    Rational tau_bound;
    friend bool operator==(const OrbitRow&, const OrbitRow&) = default;
};

/// Rows A, B, C, E. d_star is the inner dimension for A and B, (d1, d2) the
/// endpoint dimensions of a C orbit. Throws unless 0 <= dims <= n-2, n >= 3.
std::vector<OrbitRow> orbit_table(std::int64_t n, std::int64_t d_star, std::int64_t d1, std::int64_t d2);

/// The row for a single tagged edge of a bandwidth-3 grid; dims are read
/// from the endpoints.
OrbitRow orbit_row(const GridData& g, const OrbitEdge& e);

/// Largest -K.C / L.C over the tagged edges. Throws on untagged edges.
Rational tau_lower_bound(const GridData& g);

enum class TauVerdict { Allowed, Forbidden, Exceptional };
std::string to_string(TauVerdict v);

/// Label examples: "P^4,O(2)", "P^3,O(3)", "Q^3,O(2)".
TauVerdict tau_integrality(std::int64_t n, const Rational& tau, const std::string& label = "");

enum class SurfaceCase { P1xP1_O12, Hirzebruch_F2 };
std::string to_string(SurfaceCase s);
/// Throws std::invalid_argument when the grid is not four points at
/// levels 0..3 or its edge pattern fits neither surface.
SurfaceCase surface_bw3(const GridData& g);

enum class Bw3Case { Scroll, QuadricBundle, FanoRhoOne, Inconsistent };
std::string to_string(Bw3Case c);

struct ClassificationOutcome {
    Bw3Case kind = Bw3Case::Inconsistent;
    std::string detail;
    std::vector<std::string> certificates;
    /// Nef value predicted by the case, when known.
    std::optional<Rational> tau;
};

/// Uses the bundle "L". Precondition failures come back as Inconsistent.
ClassificationOutcome classify_bw3(const GridData& g);

}  // namespace gridtorus
