#include "gridtorus/lattice.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gridtorus {

namespace {

void require_same_rank(std::size_t a, std::size_t b) {
    if (a != b)
        throw std::invalid_argument("rank mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

Weight operator+(const Weight& a, const Weight& b) {
    require_same_rank(a.size(), b.size());
    Weight out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Weight operator-(const Weight& a, const Weight& b) {
    require_same_rank(a.size(), b.size());
    Weight out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Weight operator-(const Weight& a) {
    Weight out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
    return out;
}

Weight operator*(std::int64_t k, const Weight& a) {
    Weight out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = k * a[i];
    return out;
}

bool is_zero(const Weight& w) {
    for (auto x : w)
        if (x != 0) return false;
    return true;
}

Weight unit_weight(std::size_t rank, std::size_t i) {
    if (i >= rank) throw std::invalid_argument("unit weight index out of range");
    Weight w(rank, 0);
    w[i] = 1;
    return w;
}

QVector to_qvector(const Weight& w) {
    QVector out;
    out.reserve(w.size());
    for (auto x : w) out.emplace_back(x);
    return out;
}

QVector operator+(const QVector& a, const QVector& b) {
    require_same_rank(a.size(), b.size());
    QVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

QVector operator-(const QVector& a, const QVector& b) {
    require_same_rank(a.size(), b.size());
    QVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

QVector operator*(const Rational& k, const QVector& a) {
    QVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = k * a[i];
    return out;
}

bool is_integral(const QVector& v) {
    for (const auto& x : v)
        if (!x.is_integer()) return false;
    return true;
}

Weight to_weight(const QVector& v) {
    Weight out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x.to_int64());
    return out;
}

std::string format_weight(const Weight& w) {
    if (w.size() == 1) return std::to_string(w[0]);
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << ')';
    return os.str();
}

std::string format_qvector(const QVector& v) {
    if (v.size() == 1) return v[0].str();
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].str();
    os << ')';
    return os.str();
}

Projection::Projection(std::size_t target, std::size_t source)
    : rows_(target, std::vector<std::int64_t>(source, 0)), source_(source) {
    if (source == 0) throw std::invalid_argument("projection with zero source rank");
}

Projection::Projection(std::vector<std::vector<std::int64_t>> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw std::invalid_argument("projection with no rows");
    source_ = rows_.front().size();
    if (source_ == 0) throw std::invalid_argument("projection with zero source rank");
    for (const auto& r : rows_) require_same_rank(r.size(), source_);
}

Projection Projection::identity(std::size_t rank) {
    Projection p(rank, rank);
    for (std::size_t i = 0; i < rank; ++i) p.rows_[i][i] = 1;
    return p;
}

Projection Projection::coordinate(std::size_t rank, std::size_t i) {
    if (i >= rank) throw std::invalid_argument("coordinate index out of range");
    Projection p(1, rank);
    p.rows_[0][i] = 1;
    return p;
}

Projection Projection::diagonal(std::size_t rank) {
    Projection p(1, rank);
    for (auto& x : p.rows_[0]) x = 1;
    return p;
}

bool Projection::rows_primitive() const {
    for (const auto& r : rows_) {
        std::int64_t g = 0;
        for (auto x : r) g = std::gcd(g, x);
        if (g != 1) return false;
    }
    return true;
}

Weight Projection::apply(const Weight& w) const {
    require_same_rank(w.size(), source_);
    Weight out(rows_.size(), 0);
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < source_; ++j) out[i] += rows_[i][j] * w[j];
    return out;
}

QVector Projection::apply(const QVector& v) const {
    require_same_rank(v.size(), source_);
    QVector out(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < source_; ++j)
            if (rows_[i][j] != 0) out[i] += Rational(rows_[i][j]) * v[j];
    return out;
}

Projection Projection::compose(const Projection& other) const {
    require_same_rank(source_, other.target_rank());
    Projection out(rows_.size(), other.source_rank());
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t k = 0; k < other.source_rank(); ++k) {
            std::int64_t s = 0;
            for (std::size_t j = 0; j < source_; ++j) s += rows_[i][j] * other.rows_[j][k];
            out.rows_[i][k] = s;
        }
    return out;
}

Weight project(const Weight& w, const Projection& p) { return p.apply(w); }

}  // namespace gridtorus
