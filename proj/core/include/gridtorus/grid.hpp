#pragma once
/**
 * @file grid.hpp
 * @brief Fixed-point components, compasses and orbit graphs of a torus action.
 *
 * Compass convention: entries are the torus weights on the normal bundle of
 * a fixed component. For a C*-action the source therefore has only positive
 * entries and the sink only negative ones, and an edge points from the end
 * with larger L-weight (where lim t->0 lands) to the smaller one.
 */

#include "gridtorus/lattice.hpp"
#include "gridtorus/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace gridtorus {

enum class EdgeTag { A, B, C, E };

std::string to_string(EdgeTag tag);
/// Throws std::invalid_argument for anything outside {A,B,C,E}.
EdgeTag parse_edge_tag(std::string_view text);

/// Multiset of nonzero weights, kept sorted with merged multiplicities.
class Compass {
public:
    Compass() = default;
    Compass(std::initializer_list<std::pair<Weight, std::int64_t>> entries);

    void add(const Weight& w, std::int64_t mult = 1);
    const std::map<Weight, std::int64_t>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }
    std::int64_t total() const;
    std::int64_t multiplicity(const Weight& w) const;
    Compass negated() const;
    /// "{1^4, -1}" style; weights of rank > 1 print as tuples.
    std::string str() const;

    friend bool operator==(const Compass& a, const Compass& b) { return a.entries_ == b.entries_; }

private:
    std::map<Weight, std::int64_t> entries_;
};

struct SplitPart {
    std::int64_t rank = 1;
    std::string bundle;
    friend bool operator==(const SplitPart&, const SplitPart&) = default;
};

struct FixedComponent {
    std::string id;
    std::string label;
    std::int64_t dim = 0;
    std::map<std::string, QVector> mu;
    Compass compass;
    bool compass_specified = true;
    std::map<Weight, SplitPart> split;
    /// Tangent directions absorbed when this component came out of a downgrade.
    std::int64_t absorbed = 0;

    /// Throws std::out_of_range naming the bundle when it is missing.
    const QVector& mu_of(const std::string& bundle) const;
    friend bool operator==(const FixedComponent&, const FixedComponent&) = default;
};

struct OrbitEdge {
    std::string src;
    std::string dst;
    std::int64_t delta = 1;
    std::set<EdgeTag> tags;
    friend bool operator==(const OrbitEdge&, const OrbitEdge&) = default;
};

struct GridFlags {
    bool equalized = false;
    bool edges_complete = false;
    bool contact = false;
    friend bool operator==(const GridFlags&, const GridFlags&) = default;
};

struct GridData {
    std::int64_t rank = 1;
    std::int64_t n = 0;
    std::vector<FixedComponent> components;
    std::vector<OrbitEdge> edges;
    GridFlags flags;
    std::map<std::string, std::string> metadata;

    const FixedComponent* find(const std::string& id) const;
    /// Throws std::out_of_range for unknown ids.
    const FixedComponent& at(const std::string& id) const;
    FixedComponent& at(const std::string& id);
};

struct Violation {
    std::string code;
    std::string subject;
    std::string message;
    std::string str() const;
};

std::int64_t rk_plus(const FixedComponent& c);
std::int64_t rk_minus(const FixedComponent& c);
/// Grid-checked variants: throw std::logic_error unless rank == 1.
std::int64_t rk_plus(const GridData& g, const FixedComponent& c);
std::int64_t rk_minus(const GridData& g, const FixedComponent& c);

Rational amfm_degree(const GridData& g, const OrbitEdge& e, const std::string& bundle);
Rational bandwidth(const GridData& g, const std::string& bundle);

/// Unique sink: the vertex with no outgoing edge when edges are complete,
/// otherwise the unique component with no positive compass entry.
std::string sink_of(const GridData& g);
std::string source_of(const GridData& g);

GridData normalize_linearization(const GridData& g, const std::string& bundle);

/// Edges u->v with no directed path u~>v of length >= 2.
std::vector<OrbitEdge> minimal_edges(const GridData& g);

enum class NefScope { MinimalEdges, AllEdges };
/// Refuses (std::logic_error) unless edges_complete is set.
bool is_nef(const GridData& g, const std::string& bundle, NefScope scope = NefScope::MinimalEdges);

/// Adds "-K" with mu = rk+ - rk- (equalized rank-1 grids).
GridData mu_canonical(const GridData& g);
/// Adds a bundle sum_i c_i * B_i.
GridData combine_bundles(const GridData& g, const std::string& name,
                         const std::vector<std::pair<std::string, Rational>>& terms);
/// Adds K + tau L, that is -mu_{-K} + tau * mu_L.
GridData mu_adjoint(const GridData& g, const Rational& tau, const std::string& name = "K+tauL");

std::vector<Violation> validate(const GridData& g);

bool is_compass_symmetric(const FixedComponent& c);

/// The inverse C*-action: compasses and mu negated, edges reversed.
GridData reverse_action(const GridData& g);

/// Components whose mu for the bundle equals the given rank-1 value.
std::vector<const FixedComponent*> components_at(const GridData& g, const std::string& bundle,
                                                 const Rational& level);

struct MergeGroup {
    std::vector<std::string> members;
    std::string id;     // empty: derived from members
    std::string label;  // empty: derived
};

enum class MergeMode {
    /// One group per projected weight among components that absorb directions.
    ByWeight,
    /// Every component stays on its own.
    Trivial,
};

GridData downgrade(const GridData& g, const Projection& p, MergeMode mode = MergeMode::ByWeight);
GridData downgrade(const GridData& g, const Projection& p, const std::vector<MergeGroup>& groups);

}  // namespace gridtorus
