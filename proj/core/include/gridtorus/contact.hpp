#pragma once
// Rank-2 torus data for adjoint varieties of SO_m restricted to SL_3: the
// hexagon of long roots alpha_0..alpha_5 and short weights beta_0..beta_5,
// the contact compasses at the fixed points, and the summary table.

#include "gridtorus/grid.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gridtorus {

/// Coordinates in Z^2 with beta_0 = (0,1), beta_1 = (1,0) and
/// alpha_i = beta_i + beta_{i+1}.
struct ContactHexagonData {
    std::array<Weight, 6> alpha;
    std::array<Weight, 6> beta;
    /// Contact half-dimension: dim X = 2n + 1.
    std::int64_t n = 0;
    /// beta index -> dims of the components sitting at that weight.
    std::map<int, std::vector<std::int64_t>> inner_dims;

    const Weight& a(std::int64_t i) const;
    const Weight& b(std::int64_t i) const;
};

int mod6(std::int64_t i);

/// Hexagon for SO_{n+4}, with inner_dims filled in.
ContactHexagonData contact_hexagon(std::int64_t n);

/// Compass at y_{alpha_{i-1}}, written with edge directions (2n+1 entries).
Compass compass_alpha(const ContactHexagonData& h, std::int64_t i);
/// Compass at a dim-d component over beta_i (2n+1-d entries).
Compass compass_inner(const ContactHexagonData& h, std::int64_t i, std::int64_t d);
std::pair<Compass, Compass> contact_compasses(const ContactHexagonData& h, std::int64_t i, std::int64_t d);

/// The 1x2 projection pi_i with pi_i(beta_i) = 1 and pi_i(beta_{i+2}) = 0.
Projection slice_projection(const ContactHexagonData& h, std::int64_t i);
/// Generator of ker(p) for a 1x2 projection p = (a, b): (b, -a)/gcd.
Weight kernel_generator(const Projection& p);
/// Entries of c killed by p, each written as a multiple of kernel_generator(p).
/// Throws std::invalid_argument unless p is 1x2.
Compass restrict_compass(const Compass& c, const Projection& p);

/// Rank-2 grid on G(1, Q^{m-2}), m >= 6. Compasses are stored in the tangent
/// convention of GridData (the negated contact compasses). No edges.
GridData build_so_adjoint(std::int64_t m);
/// The rank-1 slice through alpha_{i-1}, Y_{beta_i}, Y_{beta_{i+1}},
/// alpha_{i+1}, with L-weights 0, 1, 2, 3.
GridData so_adjoint_slice(const GridData& so, std::int64_t i);

enum class AdjointGroup { SO, Sp, SL };

struct AdjointRow {
    std::string n;
    std::string group;
    std::string rank;
    std::string x_adj;
    std::string x_i;
    std::string y_star;
    std::string y_0;
    friend bool operator==(const AdjointRow&, const AdjointRow&) = default;
};

inline constexpr const char* kAdjointTableHeader = "n,G,rk,X_adj,X_i,Y_*,Y_0";

/// Row of the summary table for the given group family and n. SO needs
/// n >= 3, Sp and SL need n >= 3. Throws std::out_of_range otherwise.
AdjointRow adjoint_table_row(AdjointGroup g, std::int64_t n);
std::string to_csv(const AdjointRow& r);

/// Reads Y_* and Y_0 (and X_i when the slice classifies) off build_so_adjoint(m).
AdjointRow adjoint_row_from_grid(std::int64_t m);
/// Joins labels with the disjoint-union sign, points first; "pt" prints as a bullet.
std::string disjoint_union(std::vector<std::string> labels);

}  // namespace gridtorus
