#pragma once
// Lattice polytopes given by point sets, with exact vertex detection.
//
// A point is a vertex iff it is not a convex combination of the other
// points. That is decided by a phase-one simplex run over the rationals
// (Bland's rule, so it terminates), which works in any rank.

#include "gridtorus/lattice.hpp"

#include <vector>

namespace gridtorus {

class LatticePolytope {
public:
    /// Deduplicates; throws std::invalid_argument on empty input or mixed ranks.
    explicit LatticePolytope(std::vector<Weight> points);

    const std::vector<Weight>& points() const noexcept { return points_; }
    std::size_t rank() const noexcept { return points_.front().size(); }

    /// Extreme points, sorted lexicographically.
    std::vector<Weight> vertices() const;
    bool contains(const QVector& q) const;
    LatticePolytope project(const Projection& p) const;

private:
    std::vector<Weight> points_;
};

std::vector<Weight> vertices(const LatticePolytope& poly);

/// Vertex set equal to its own reflection through the vertex centroid.
bool is_centrally_symmetric(const LatticePolytope& poly);

/// Exact test: q lies in the convex hull of pts.
bool in_convex_hull(const QVector& q, const std::vector<Weight>& pts);

/// Feasibility of {x >= 0 : A x = b} over the rationals.
bool lp_feasible(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b);

}  // namespace gridtorus
