#pragma once
// Grid generators for the standard examples. Every generator uses the
// bundle name "L" for the polarization.

#include "gridtorus/grid.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gridtorus {

/// Q^1 -> "P^1", Q^2 -> "P1xP1", otherwise "Q^k". Throws for k < 1 since
/// Q^0 is two points.
std::string quadric_label(std::int64_t k);

/// C*-action on P^{d-1} with weight a_i on a block of d_i coordinates.
/// Components P^{d_i-1} at mu = -a_i; an edge runs from smaller to larger a
/// with delta = |a_i - a_j|. Weights must be distinct, in any order.
GridData build_projective_space(const std::vector<std::pair<std::int64_t, std::int64_t>>& weights);

enum class ScrollSplit {
    /// P(O^{n-1} + O(3)) style: (1^{n-1}, 3)
    OnesThree,
    /// (1^{n-2}, 2, 2)
    TwoTwo,
};
/// Parses "1,1,1,1,3" or "1,1,2,2" for the given n.
ScrollSplit parse_scroll_split(std::int64_t n, const std::string& text);
std::string to_string(ScrollSplit s, std::int64_t n);

GridData build_scroll(std::int64_t n, ScrollSplit split = ScrollSplit::OnesThree);
/// n >= 4; use build_p1cubed for n = 3.
GridData build_quadric_bundle(std::int64_t n);
GridData build_p1cubed();
/// The rank-3 torus on P1xP1xP1; the diagonal downgrade gives build_p1cubed().
GridData build_cube_full_torus();
GridData build_sp6();
/// P1xP1 with O(1,2) under the bandwidth-3 C*-action.
GridData build_p1xp1_o12();

/// Q^n under its maximal torus of rank floor((n+2)/2); n >= 3.
GridData build_quadric_full_torus(std::int64_t n);
/// Downgrade along the first coordinate: {pt, Q^{n-2}, pt}.
GridData quadric_downgrade_axis(const GridData& full);
/// Downgrade along (1,...,1): two copies of P^{floor(n/2)}.
GridData quadric_downgrade_diagonal(const GridData& full);

/// Bandwidth-3 equalized grid with isolated source and sink and `a` isolated
/// points on each inner level. No edges.
GridData build_bw3_isolated(std::int64_t n, std::int64_t a);
/// Same frame with inner components of the given dims. Level-1 components get
/// compass (+1, (-1)^{n-d-1}) and level-2 ones ((+1)^{n-d-1}, -1).
GridData build_bw3_grid(std::int64_t n, const std::vector<std::int64_t>& level1, const std::vector<std::int64_t>& level2);

}  // namespace gridtorus
