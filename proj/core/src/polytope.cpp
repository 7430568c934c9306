#include "gridtorus/polytope.hpp"

#include <algorithm>
#include <stdexcept>

namespace gridtorus {

bool lp_feasible(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b) {
    const std::size_t m = a.size();
    if (b.size() != m) throw std::invalid_argument("lp_feasible: row count mismatch");
    if (m == 0) return true;
    const std::size_t k = a.front().size();
    const std::size_t cols = k + m + 1;  // structural, artificial, rhs
    const std::size_t rhs = k + m;

    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols));
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i].size() != k) throw std::invalid_argument("lp_feasible: ragged matrix");
        const bool flip = b[i] < Rational(0);
        for (std::size_t j = 0; j < k; ++j) t[i][j] = flip ? -a[i][j] : a[i][j];
        t[i][k + i] = 1;
        t[i][rhs] = flip ? -b[i] : b[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = k + i;

    // Reduced costs for minimizing the sum of artificials.
    std::vector<Rational> obj(cols);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < k; ++j) obj[j] -= t[i][j];
        obj[rhs] -= t[i][rhs];
    }

    for (;;) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < rhs; ++j)
            if (obj[j] < Rational(0)) {
                enter = j;
                break;
            }
        if (enter == cols) break;

        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= Rational(0)) continue;
            Rational ratio = t[i][rhs] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) break;  // cannot happen: phase one is bounded below

        Rational piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter].is_zero()) continue;
            Rational f = t[i][enter];
            for (std::size_t j = 0; j < cols; ++j)
                if (!t[leave][j].is_zero()) t[i][j] -= f * t[leave][j];
        }
        if (!obj[enter].is_zero()) {
            Rational f = obj[enter];
            for (std::size_t j = 0; j < cols; ++j)
                if (!t[leave][j].is_zero()) obj[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    return obj[rhs].is_zero();
}

bool in_convex_hull(const QVector& q, const std::vector<Weight>& pts) {
    if (pts.empty()) return false;
    const std::size_t r = q.size();
    std::vector<std::vector<Rational>> a(r + 1, std::vector<Rational>(pts.size()));
    std::vector<Rational> b(r + 1);
    for (std::size_t j = 0; j < pts.size(); ++j) {
        if (pts[j].size() != r) throw std::invalid_argument("in_convex_hull: rank mismatch");
        for (std::size_t i = 0; i < r; ++i) a[i][j] = pts[j][i];
        a[r][j] = 1;
    }
    for (std::size_t i = 0; i < r; ++i) b[i] = q[i];
    b[r] = 1;
    return lp_feasible(a, b);
}

LatticePolytope::LatticePolytope(std::vector<Weight> points) : points_(std::move(points)) {
    if (points_.empty()) throw std::invalid_argument("polytope needs at least one point");
    for (const auto& p : points_)
        if (p.size() != points_.front().size()) throw std::invalid_argument("polytope points of mixed rank");
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

std::vector<Weight> LatticePolytope::vertices() const {
    std::vector<Weight> out;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        std::vector<Weight> others;
        others.reserve(points_.size() - 1);
        for (std::size_t j = 0; j < points_.size(); ++j)
            if (j != i) others.push_back(points_[j]);
        if (!in_convex_hull(to_qvector(points_[i]), others)) out.push_back(points_[i]);
    }
    return out;
}

bool LatticePolytope::contains(const QVector& q) const { return in_convex_hull(q, points_); }

LatticePolytope LatticePolytope::project(const Projection& p) const {
    std::vector<Weight> img;
    img.reserve(points_.size());
    for (const auto& w : points_) img.push_back(p.apply(w));
    return LatticePolytope(std::move(img));
}

std::vector<Weight> vertices(const LatticePolytope& poly) { return poly.vertices(); }

bool is_centrally_symmetric(const LatticePolytope& poly) {
    auto verts = poly.vertices();
    const std::size_t r = poly.rank();
    // Work with v * count - sum so the centroid sits at the origin without fractions.
    Weight sum(r, 0);
    for (const auto& v : verts) sum = sum + v;
    const auto count = static_cast<std::int64_t>(verts.size());
    std::vector<Weight> shifted;
    shifted.reserve(verts.size());
    for (const auto& v : verts) shifted.push_back(count * v - sum);
    std::vector<Weight> negated;
    negated.reserve(shifted.size());
    for (const auto& v : shifted) negated.push_back(-v);
    std::sort(shifted.begin(), shifted.end());
    std::sort(negated.begin(), negated.end());
    return shifted == negated;
}

}  // namespace gridtorus
