#pragma once
// Character lattices Z^r, rational vectors, and lattice homomorphisms.

#include "gridtorus/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gridtorus {

using Weight = std::vector<std::int64_t>;
using QVector = std::vector<Rational>;

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator-(const Weight& a);
Weight operator*(std::int64_t k, const Weight& a);
bool is_zero(const Weight& w);
Weight unit_weight(std::size_t rank, std::size_t i);

QVector to_qvector(const Weight& w);
QVector operator+(const QVector& a, const QVector& b);
QVector operator-(const QVector& a, const QVector& b);
QVector operator*(const Rational& k, const QVector& a);
bool is_integral(const QVector& v);
/// Throws std::domain_error when some coordinate is not an integer.
Weight to_weight(const QVector& v);

/// "(1,-2)" style rendering; rank-1 vectors render as the bare number.
std::string format_weight(const Weight& w);
std::string format_qvector(const QVector& v);

/// Integer matrix of shape target x source acting on column vectors.
class Projection {
public:
    Projection(std::size_t target, std::size_t source);
    explicit Projection(std::vector<std::vector<std::int64_t>> rows);

    static Projection identity(std::size_t rank);
    /// Projection onto the i-th coordinate (a 1 x r matrix).
    static Projection coordinate(std::size_t rank, std::size_t i);
    /// The 1 x r matrix of ones, summing coordinates.
    static Projection diagonal(std::size_t rank);

    std::size_t target_rank() const noexcept { return rows_.size(); }
    std::size_t source_rank() const noexcept { return source_; }
    const std::vector<std::vector<std::int64_t>>& rows() const noexcept { return rows_; }
    std::int64_t at(std::size_t i, std::size_t j) const { return rows_.at(i).at(j); }

    /// True when every row has coprime entries (not all zero).
    bool rows_primitive() const;

    Weight apply(const Weight& w) const;
    QVector apply(const QVector& v) const;
    /// this o other
    Projection compose(const Projection& other) const;

private:
    std::vector<std::vector<std::int64_t>> rows_;
    std::size_t source_ = 0;
};

Weight project(const Weight& w, const Projection& p);

}  // namespace gridtorus
