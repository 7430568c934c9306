#pragma once
// Classical root systems and projections of adjoint weights.

#include "gridtorus/lattice.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gridtorus {

enum class RootType { A, B, C, D };
std::string to_string(RootType t);
/// Accepts "A".."D" (case-insensitive); anything else throws std::invalid_argument.
RootType parse_root_type(const std::string& text);

struct RootSystem {
    RootType type;
    std::int64_t rank;
    /// Sorted, without repetition.
    std::vector<Weight> roots;
};

/// A_r lives in Z^{r+1} (e_i - e_j); B, C, D in Z^r. Needs rank >= 1, and
/// rank >= 2 for D.
RootSystem root_system(RootType type, std::int64_t rank);

/// Weights of the adjoint representation pushed through p: every root once
/// plus the zero weight with multiplicity equal to the rank.
std::map<Weight, std::int64_t> project_adjoint(const RootSystem& rs, const Projection& p);

/// Restriction of the maximal torus of SL_4 (coordinates of Z^4) and of
/// SO_6 (Z^3) to the maximal torus of the SL_3 whose roots are the hexagon
/// vertices alpha_i.
Projection sl3_restriction_a3();
Projection sl3_restriction_d3();

}  // namespace gridtorus
