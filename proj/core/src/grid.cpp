#include "gridtorus/grid.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace gridtorus {

std::string to_string(EdgeTag tag) {
    switch (tag) {
        case EdgeTag::A: return "A";
        case EdgeTag::B: return "B";
        case EdgeTag::C: return "C";
        case EdgeTag::E: return "E";
    }
    return "?";
}

EdgeTag parse_edge_tag(std::string_view text) {
    if (text == "A") return EdgeTag::A;
    if (text == "B") return EdgeTag::B;
    if (text == "C") return EdgeTag::C;
    if (text == "E") return EdgeTag::E;
    throw std::invalid_argument("unknown edge tag '" + std::string(text) + "'");
}

// ---------------------------------------------------------------- Compass

Compass::Compass(std::initializer_list<std::pair<Weight, std::int64_t>> entries) {
    for (const auto& [w, k] : entries) add(w, k);
}

void Compass::add(const Weight& w, std::int64_t mult) {
    if (mult == 0) return;
    auto& slot = entries_[w];
    slot += mult;
    if (slot == 0) entries_.erase(w);
}

std::int64_t Compass::total() const {
    std::int64_t t = 0;
    for (const auto& [w, k] : entries_) t += k;
    return t;
}

std::int64_t Compass::multiplicity(const Weight& w) const {
    auto it = entries_.find(w);
    return it == entries_.end() ? 0 : it->second;
}

Compass Compass::negated() const {
    Compass out;
    for (const auto& [w, k] : entries_) out.add(-w, k);
    return out;
}

std::string Compass::str() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
        if (!first) os << ", ";
        first = false;
        os << format_weight(it->first);
        if (it->second != 1) os << '^' << it->second;
    }
    os << '}';
    return os.str();
}

// ---------------------------------------------------------------- lookups

const QVector& FixedComponent::mu_of(const std::string& bundle) const {
    auto it = mu.find(bundle);
    if (it == mu.end()) throw std::out_of_range("component '" + id + "' has no mu for bundle '" + bundle + "'");
    return it->second;
}

const FixedComponent* GridData::find(const std::string& id) const {
    for (const auto& c : components)
        if (c.id == id) return &c;
    return nullptr;
}

const FixedComponent& GridData::at(const std::string& id) const {
    if (const auto* c = find(id)) return *c;
    throw std::out_of_range("unknown component id '" + id + "'");
}

FixedComponent& GridData::at(const std::string& id) {
    for (auto& c : components)
        if (c.id == id) return c;
    throw std::out_of_range("unknown component id '" + id + "'");
}

std::string Violation::str() const {
    std::string s = code;
    if (!subject.empty()) s += " [" + subject + "]";
    return s + ": " + message;
}

// ---------------------------------------------------------------- basic operations

namespace {

void require_rank1(const GridData& g, const char* what) {
    if (g.rank != 1) throw std::logic_error(std::string(what) + " needs a rank-1 grid, got rank " + std::to_string(g.rank));
}

const Rational& mu1(const FixedComponent& c, const std::string& bundle) {
    const QVector& v = c.mu_of(bundle);
    if (v.size() != 1) throw std::logic_error("bundle '" + bundle + "' is not rank-1 on '" + c.id + "'");
    return v[0];
}

int weight_sign(const Weight& w) {
    if (w.size() != 1) throw std::logic_error("rk+/rk- are defined for rank-1 compasses only");
    return w[0] > 0 ? 1 : (w[0] < 0 ? -1 : 0);
}

struct Adjacency {
    std::map<std::string, std::size_t> index;
    std::vector<std::vector<std::size_t>> succ;
    std::vector<std::vector<std::size_t>> pred;
};

Adjacency adjacency(const GridData& g) {
    Adjacency a;
    for (std::size_t i = 0; i < g.components.size(); ++i) a.index.emplace(g.components[i].id, i);
    a.succ.assign(g.components.size(), {});
    a.pred.assign(g.components.size(), {});
    for (const auto& e : g.edges) {
        auto s = a.index.find(e.src);
        auto d = a.index.find(e.dst);
        if (s == a.index.end() || d == a.index.end()) continue;
        a.succ[s->second].push_back(d->second);
        a.pred[d->second].push_back(s->second);
    }
    return a;
}

bool has_cycle(const Adjacency& a) {
    std::vector<std::size_t> indeg(a.succ.size(), 0);
    for (const auto& out : a.succ)
        for (auto v : out) ++indeg[v];
    std::queue<std::size_t> q;
    for (std::size_t i = 0; i < indeg.size(); ++i)
        if (indeg[i] == 0) q.push(i);
    std::size_t seen = 0;
    while (!q.empty()) {
        auto u = q.front();
        q.pop();
        ++seen;
        for (auto v : a.succ[u])
            if (--indeg[v] == 0) q.push(v);
    }
    return seen != a.succ.size();
}

// reach[u][v]: a directed path of length >= 1 from u to v.
std::vector<std::vector<bool>> closure(const Adjacency& a) {
    const std::size_t n = a.succ.size();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::size_t> stack(a.succ[s].begin(), a.succ[s].end());
        while (!stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            if (reach[s][u]) continue;
            reach[s][u] = true;
            for (auto v : a.succ[u]) stack.push_back(v);
        }
    }
    return reach;
}

std::string find_unique(const GridData& g, bool want_sink) {
    if (g.components.empty()) throw std::logic_error("grid has no components");
    if (g.components.size() == 1) return g.components.front().id;
    std::vector<std::string> hits;
    if (g.flags.edges_complete && !g.edges.empty()) {
        auto a = adjacency(g);
        for (std::size_t i = 0; i < g.components.size(); ++i) {
            bool free_end = want_sink ? a.succ[i].empty() : a.pred[i].empty();
            if (free_end) hits.push_back(g.components[i].id);
        }
    } else {
        require_rank1(g, want_sink ? "sink detection" : "source detection");
        for (const auto& c : g.components) {
            if (!c.compass_specified) continue;
            if ((want_sink ? rk_plus(c) : rk_minus(c)) == 0) hits.push_back(c.id);
        }
    }
    if (hits.size() != 1) {
        std::string which = want_sink ? "sink" : "source";
        std::string msg = "ambiguous " + which + ": " + std::to_string(hits.size()) + " candidates";
        for (const auto& h : hits) msg += " " + h;
        throw std::logic_error(msg);
    }
    return hits.front();
}

}  // namespace

std::int64_t rk_plus(const FixedComponent& c) {
    std::int64_t r = 0;
    for (const auto& [w, k] : c.compass.entries())
        if (weight_sign(w) > 0) r += k;
    return r;
}

std::int64_t rk_minus(const FixedComponent& c) {
    std::int64_t r = 0;
    for (const auto& [w, k] : c.compass.entries())
        if (weight_sign(w) < 0) r += k;
    return r;
}

std::int64_t rk_plus(const GridData& g, const FixedComponent& c) {
    require_rank1(g, "rk_plus");
    return rk_plus(c);
}

std::int64_t rk_minus(const GridData& g, const FixedComponent& c) {
    require_rank1(g, "rk_minus");
    return rk_minus(c);
}

Rational amfm_degree(const GridData& g, const OrbitEdge& e, const std::string& bundle) {
    require_rank1(g, "amfm_degree");
    if (e.delta < 1) throw std::invalid_argument("edge with nonpositive delta");
    return (mu1(g.at(e.src), bundle) - mu1(g.at(e.dst), bundle)) / Rational(e.delta);
}

Rational bandwidth(const GridData& g, const std::string& bundle) {
    require_rank1(g, "bandwidth");
    if (g.components.empty()) throw std::logic_error("bandwidth of a grid with no components");
    Rational lo = mu1(g.components.front(), bundle);
    Rational hi = lo;
    for (const auto& c : g.components) {
        const Rational& v = mu1(c, bundle);
        if (v < lo) lo = v;
        if (v > hi) hi = v;
    }
    return hi - lo;
}

std::string sink_of(const GridData& g) { return find_unique(g, true); }
std::string source_of(const GridData& g) { return find_unique(g, false); }

GridData normalize_linearization(const GridData& g, const std::string& bundle) {
    require_rank1(g, "normalize_linearization");
    Rational shift = mu1(g.at(sink_of(g)), bundle);
    GridData out = g;
    for (auto& c : out.components) {
        auto it = c.mu.find(bundle);
        if (it == c.mu.end()) throw std::out_of_range("component '" + c.id + "' has no mu for bundle '" + bundle + "'");
        it->second[0] -= shift;
    }
    return out;
}

std::vector<OrbitEdge> minimal_edges(const GridData& g) {
    auto a = adjacency(g);
    if (has_cycle(a)) throw std::logic_error("minimal_edges needs an acyclic orbit graph");
    auto reach = closure(a);
    std::vector<OrbitEdge> out;
    for (const auto& e : g.edges) {
        auto u = a.index.at(e.src);
        auto v = a.index.at(e.dst);
        bool shortcut = false;
        for (auto w : a.succ[u])
            if (w != v && reach[w][v]) {
                shortcut = true;
                break;
            }
        if (!shortcut) out.push_back(e);
    }
    return out;
}

bool is_nef(const GridData& g, const std::string& bundle, NefScope scope) {
    require_rank1(g, "is_nef");
    if (!g.flags.edges_complete)
        throw std::logic_error("is_nef refuses: edge set not flagged complete, the verdict would be unsound");
    const auto edges = scope == NefScope::MinimalEdges ? minimal_edges(g) : g.edges;
    for (const auto& e : edges)
        if (mu1(g.at(e.src), bundle) < mu1(g.at(e.dst), bundle)) return false;
    return true;
}

GridData mu_canonical(const GridData& g) {
    require_rank1(g, "mu_canonical");
    if (!g.flags.equalized) throw std::logic_error("mu_canonical needs an equalized grid");
    GridData out = g;
    for (auto& c : out.components) {
        if (!c.compass_specified) throw std::logic_error("component '" + c.id + "' has an unspecified compass");
        c.mu["-K"] = QVector{Rational(rk_plus(c) - rk_minus(c))};
    }
    return out;
}

GridData combine_bundles(const GridData& g, const std::string& name,
                         const std::vector<std::pair<std::string, Rational>>& terms) {
    if (terms.empty()) throw std::invalid_argument("combine_bundles needs at least one term");
    GridData out = g;
    for (auto& c : out.components) {
        QVector acc(static_cast<std::size_t>(g.rank));
        for (const auto& [b, k] : terms) acc = acc + k * c.mu_of(b);
        c.mu[name] = acc;
    }
    return out;
}

GridData mu_adjoint(const GridData& g, const Rational& tau, const std::string& name) {
    for (const auto& c : g.components) {
        c.mu_of("-K");
        c.mu_of("L");
    }
    return combine_bundles(g, name, {{"-K", Rational(-1)}, {"L", tau}});
}

bool is_compass_symmetric(const FixedComponent& c) { return c.compass == c.compass.negated(); }

GridData reverse_action(const GridData& g) {
    GridData out = g;
    for (auto& c : out.components) {
        c.compass = c.compass.negated();
        for (auto& [b, v] : c.mu) v = Rational(-1) * v;
        std::map<Weight, SplitPart> split;
        for (const auto& [w, part] : c.split) split.emplace(-w, part);
        c.split = std::move(split);
    }
    for (auto& e : out.edges) std::swap(e.src, e.dst);
    return out;
}

std::vector<const FixedComponent*> components_at(const GridData& g, const std::string& bundle,
                                                 const Rational& level) {
    std::vector<const FixedComponent*> out;
    for (const auto& c : g.components)
        if (mu1(c, bundle) == level) out.push_back(&c);
    return out;
}

// ---------------------------------------------------------------- validation

std::vector<Violation> validate(const GridData& g) {
    std::vector<Violation> out;
    auto report = [&](std::string code, std::string subject, std::string message) {
        out.push_back({std::move(code), std::move(subject), std::move(message)});
    };

    if (g.rank < 1) report("rank", "", "torus rank must be positive");
    if (g.n < 0) report("dimension", "", "ambient dimension must be nonnegative");

    std::set<std::string> ids;
    for (const auto& c : g.components) {
        if (!ids.insert(c.id).second) report("duplicate-id", c.id, "component id used twice");
        if (c.dim < 0 || c.dim > g.n)
            report("dim-range", c.id, "dimension " + std::to_string(c.dim) + " outside 0.." + std::to_string(g.n));
        for (const auto& [b, v] : c.mu)
            if (static_cast<std::int64_t>(v.size()) != g.rank)
                report("mu-rank", c.id, "mu for '" + b + "' has length " + std::to_string(v.size()));
        bool compass_ok = true;
        for (const auto& [w, k] : c.compass.entries()) {
            if (static_cast<std::int64_t>(w.size()) != g.rank) {
                report("compass-rank", c.id, "compass weight " + format_weight(w) + " has wrong length");
                compass_ok = false;
                continue;
            }
            if (is_zero(w)) report("compass-zero", c.id, "zero weight in compass");
            if (k < 1) report("compass-mult", c.id, "multiplicity " + std::to_string(k) + " below 1");
            if (g.rank == 1 && g.flags.equalized && w[0] != 1 && w[0] != -1)
                report("equalized", c.id, "compass entry " + format_weight(w) + " in an equalized grid");
        }
        if (c.compass_specified && c.compass.total() != g.n - c.dim)
            report("codimension", c.id,
                   "compass has " + std::to_string(c.compass.total()) + " entries, codimension is " +
                       std::to_string(g.n - c.dim));
        if (!c.split.empty() && g.rank == 1 && compass_ok) {
            std::int64_t pos = 0, neg = 0;
            for (const auto& [w, part] : c.split) {
                if (w.size() != 1 || c.compass.multiplicity(w) == 0) {
                    report("split-weight", c.id, "split weight " + format_weight(w) + " not in compass");
                    continue;
                }
                if (part.rank < 1) report("split-rank", c.id, "split part of nonpositive rank");
                (w[0] > 0 ? pos : neg) += part.rank;
            }
            if (pos != rk_plus(c) || neg != rk_minus(c))
                report("split-rank", c.id, "split ranks do not add up to rk+ / rk-");
        }
    }

    bool edges_ok = true;
    for (const auto& e : g.edges) {
        std::string subject = e.src + "->" + e.dst;
        if (!ids.count(e.src) || !ids.count(e.dst)) {
            report("edge-endpoint", subject, "edge references an unknown component");
            edges_ok = false;
        }
        if (e.src == e.dst) report("edge-loop", subject, "loop edge");
        if (e.delta < 1) report("edge-delta", subject, "delta must be at least 1");
        if (g.flags.equalized && e.delta != 1) report("edge-delta", subject, "delta must be 1 in an equalized grid");
    }
    if (!edges_ok) return out;

    auto a = adjacency(g);
    if (has_cycle(a)) {
        report("cycle", "", "orbit graph has a directed cycle");
        return out;
    }

    if (g.rank == 1 && g.flags.edges_complete && !g.components.empty()) {
        std::vector<std::string> sources, sinks;
        for (std::size_t i = 0; i < g.components.size(); ++i) {
            if (a.pred[i].empty()) sources.push_back(g.components[i].id);
            if (a.succ[i].empty()) sinks.push_back(g.components[i].id);
        }
        if (sources.size() != 1) report("source", "", std::to_string(sources.size()) + " components without incoming edges");
        if (sinks.size() != 1) report("sink", "", std::to_string(sinks.size()) + " components without outgoing edges");
    }

    // Components whose only successor (predecessor) is one and the same point.
    if (g.flags.edges_complete) {
        for (int pass = 0; pass < 2; ++pass) {
            const auto& nbrs = pass == 0 ? a.succ : a.pred;
            std::map<std::size_t, std::vector<std::size_t>> by_point;
            for (std::size_t i = 0; i < nbrs.size(); ++i) {
                std::set<std::size_t> distinct(nbrs[i].begin(), nbrs[i].end());
                if (distinct.size() != 1) continue;
                auto y = *distinct.begin();
                if (g.components[y].dim == 0) by_point[y].push_back(i);
            }
            for (const auto& [y, group] : by_point)
                for (std::size_t x = 0; x < group.size(); ++x)
                    for (std::size_t z = x + 1; z < group.size(); ++z) {
                        const auto& c1 = g.components[group[x]];
                        const auto& c2 = g.components[group[z]];
                        if (c1.dim + c2.dim > g.n - 2)
                            report("intersection-dimension", c1.id + "," + c2.id,
                                   std::string(pass == 0 ? "both only flow to " : "both only come from ") +
                                       g.components[y].id + " but dims " + std::to_string(c1.dim) + "+" +
                                       std::to_string(c2.dim) + " exceed n-2 = " + std::to_string(g.n - 2));
                    }
        }
    }
    return out;
}

// ---------------------------------------------------------------- downgrade

namespace {

struct Projected {
    std::map<std::string, QVector> mu;
    Compass nonzero;
    std::int64_t zeros = 0;
};

Projected project_component(const FixedComponent& c, const Projection& p) {
    Projected out;
    for (const auto& [b, v] : c.mu) out.mu[b] = p.apply(v);
    for (const auto& [w, k] : c.compass.entries()) {
        Weight img = p.apply(w);
        if (is_zero(img))
            out.zeros += k;
        else
            out.nonzero.add(img, k);
    }
    return out;
}

}  // namespace

GridData downgrade(const GridData& g, const Projection& p, MergeMode mode) {
    if (p.source_rank() != static_cast<std::size_t>(g.rank))
        throw std::invalid_argument("projection source rank does not match the grid rank");
    std::vector<MergeGroup> groups;
    if (mode == MergeMode::Trivial) {
        for (const auto& c : g.components) groups.push_back({{c.id}, c.id, c.label});
        return downgrade(g, p, groups);
    }
    std::map<std::map<std::string, QVector>, std::size_t> slot;
    for (const auto& c : g.components) {
        Projected pc = project_component(c, p);
        if (pc.zeros == 0 || !c.compass_specified) {
            groups.push_back({{c.id}, c.id, c.label});
            continue;
        }
        auto [it, inserted] = slot.emplace(pc.mu, groups.size());
        if (inserted)
            groups.push_back({{c.id}, "", ""});
        else
            groups[it->second].members.push_back(c.id);
    }
    for (auto& grp : groups)
        if (grp.members.size() == 1 && grp.id.empty()) {
            grp.id = grp.members.front();
        }
    return downgrade(g, p, groups);
}

GridData downgrade(const GridData& g, const Projection& p, const std::vector<MergeGroup>& groups) {
    if (p.source_rank() != static_cast<std::size_t>(g.rank))
        throw std::invalid_argument("projection source rank does not match the grid rank");

    std::map<std::string, int> seen;
    for (const auto& grp : groups) {
        if (grp.members.empty()) throw std::invalid_argument("empty merge group");
        for (const auto& m : grp.members) {
            g.at(m);
            if (++seen[m] > 1) throw std::invalid_argument("component '" + m + "' appears in two merge groups");
        }
    }
    for (const auto& c : g.components)
        if (!seen.count(c.id)) throw std::invalid_argument("component '" + c.id + "' is not in any merge group");

    const bool identity = p.target_rank() == p.source_rank() && p.rows() == Projection::identity(p.source_rank()).rows();

    GridData out;
    out.rank = static_cast<std::int64_t>(p.target_rank());
    out.n = g.n;
    out.flags.contact = g.flags.contact;
    out.metadata = g.metadata;

    bool equalized = out.rank == 1;
    for (const auto& grp : groups) {
        const FixedComponent& first = g.at(grp.members.front());
        Projected ref = project_component(first, p);
        FixedComponent nc;
        nc.compass_specified = true;
        for (const auto& m : grp.members) nc.compass_specified = nc.compass_specified && g.at(m).compass_specified;
        for (const auto& m : grp.members) {
            const FixedComponent& c = g.at(m);
            Projected pc = project_component(c, p);
            if (pc.mu != ref.mu)
                throw std::invalid_argument("merge group mixes distinct projected mu ('" + first.id + "' vs '" + c.id + "')");
            if (!nc.compass_specified) continue;
            if (grp.members.size() > 1 && pc.zeros == 0)
                throw std::invalid_argument("component '" + c.id + "' absorbs no tangent direction and cannot be merged");
            if (pc.nonzero != ref.nonzero || c.dim + pc.zeros != first.dim + ref.zeros)
                throw std::invalid_argument("inconsistent merge: '" + first.id + "' and '" + c.id +
                                            "' disagree on projected compass or dimension");
        }
        nc.id = grp.id.empty() ? (grp.members.size() == 1 ? first.id : "merged(" + first.id + ")") : grp.id;
        nc.mu = ref.mu;
        if (nc.compass_specified) {
            nc.compass = ref.nonzero;
            nc.absorbed = first.absorbed + ref.zeros;
            nc.dim = first.dim + ref.zeros;
        } else {
            nc.dim = first.dim;
            nc.absorbed = first.absorbed;
        }
        if (grp.label.empty())
            nc.label = (grp.members.size() == 1 && ref.zeros == 0) ? first.label : "fixed(dim=" + std::to_string(nc.dim) + ")";
        else
            nc.label = grp.label;
        if (grp.members.size() == 1 && ref.zeros == 0) {
            for (const auto& [w, part] : first.split) {
                Weight img = p.apply(w);
                auto [it, inserted] = nc.split.emplace(img, part);
                if (!inserted) {
                    it->second.rank += part.rank;
                    it->second.bundle += "+" + part.bundle;
                }
            }
        }
        if (equalized)
            for (const auto& [w, k] : nc.compass.entries())
                if (w[0] != 1 && w[0] != -1) equalized = false;
        out.components.push_back(std::move(nc));
    }
    out.flags.equalized = equalized;
    if (identity) {
        out.edges = g.edges;
        out.flags.edges_complete = g.flags.edges_complete;
        out.flags.equalized = g.flags.equalized;
    }
    return out;
}

}  // namespace gridtorus
