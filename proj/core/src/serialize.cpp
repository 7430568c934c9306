#include "gridtorus/serialize.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <sstream>

namespace gridtorus {

namespace {

using ojson = nlohmann::ordered_json;
using json = nlohmann::json;

ojson rational_json(const Rational& r) {
    if (r.is_integer() && r.num() <= std::numeric_limits<std::int64_t>::max() &&
        r.num() >= std::numeric_limits<std::int64_t>::min())
        return ojson(r.to_int64());
    return ojson(r.str());
}

ojson weight_json(const Weight& w) {
    ojson a = ojson::array();
    for (auto x : w) a.push_back(x);
    return a;
}

std::vector<OrbitEdge> sorted_edges(const GridData& g) {
    auto edges = g.edges;
    std::sort(edges.begin(), edges.end(), [](const OrbitEdge& a, const OrbitEdge& b) {
        return std::tie(a.src, a.dst, a.delta, a.tags) < std::tie(b.src, b.dst, b.delta, b.tags);
    });
    return edges;
}

// ---- parsing helpers

const json& field(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) throw SchemaError(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(path + "." + key, "missing field");
    return *it;
}

std::int64_t get_int(const json& v, const std::string& path) {
    if (!v.is_number_integer()) throw SchemaError(path, "expected an integer");
    return v.get<std::int64_t>();
}

bool get_bool(const json& v, const std::string& path) {
    if (!v.is_boolean()) throw SchemaError(path, "expected a boolean");
    return v.get<bool>();
}

std::string get_string(const json& v, const std::string& path) {
    if (!v.is_string()) throw SchemaError(path, "expected a string");
    return v.get<std::string>();
}

Rational get_rational(const json& v, const std::string& path) {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_string()) {
        try {
            return Rational::parse(v.get<std::string>());
        } catch (const std::exception& e) {
            throw SchemaError(path, std::string("bad rational: ") + e.what());
        }
    }
    throw SchemaError(path, "expected an integer or a \"p/q\" string");
}

Weight get_weight(const json& v, const std::string& path) {
    if (!v.is_array()) throw SchemaError(path, "expected an array of integers");
    Weight w;
    for (std::size_t i = 0; i < v.size(); ++i) w.push_back(get_int(v[i], path + "[" + std::to_string(i) + "]"));
    return w;
}

}  // namespace

std::string to_json(const GridData& g) {
    ojson root;
    root["schema"] = kGridSchema;
    root["rank"] = g.rank;
    root["n"] = g.n;
    root["flags"] = ojson{{"equalized", g.flags.equalized},
                          {"edges_complete", g.flags.edges_complete},
                          {"contact", g.flags.contact}};
    ojson meta = ojson::object();
    for (const auto& [k, v] : g.metadata) meta[k] = v;
    root["metadata"] = meta;

    std::vector<const FixedComponent*> comps;
    for (const auto& c : g.components) comps.push_back(&c);
    std::sort(comps.begin(), comps.end(), [](auto* a, auto* b) { return a->id < b->id; });

    ojson carr = ojson::array();
    for (const auto* c : comps) {
        ojson o;
        o["id"] = c->id;
        o["label"] = c->label;
        o["dim"] = c->dim;
        ojson mu = ojson::object();
        for (const auto& [b, v] : c->mu) {
            ojson a = ojson::array();
            for (const auto& x : v) a.push_back(rational_json(x));
            mu[b] = a;
        }
        o["mu"] = mu;
        if (c->compass_specified) {
            ojson entries = ojson::array();
            for (const auto& [w, k] : c->compass.entries()) entries.push_back(ojson{{"weight", weight_json(w)}, {"mult", k}});
            o["compass"] = entries;
        } else {
            o["compass"] = "unspecified";
        }
        if (!c->split.empty()) {
            ojson split = ojson::array();
            for (const auto& [w, part] : c->split)
                split.push_back(ojson{{"weight", weight_json(w)}, {"rank", part.rank}, {"bundle", part.bundle}});
            o["split"] = split;
        }
        if (c->absorbed != 0) o["absorbed"] = c->absorbed;
        carr.push_back(o);
    }
    root["components"] = carr;

    ojson earr = ojson::array();
    for (const auto& e : sorted_edges(g)) {
        ojson tags = ojson::array();
        for (auto t : e.tags) tags.push_back(to_string(t));
        earr.push_back(ojson{{"src", e.src}, {"dst", e.dst}, {"delta", e.delta}, {"tags", tags}});
    }
    root["edges"] = earr;
    return root.dump(2) + "\n";
}

GridData from_json(std::string_view text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError("$", std::string("malformed JSON: ") + e.what());
    }
    const std::string top = "$";
    if (!root.is_object()) throw SchemaError(top, "expected an object");
    std::string schema = get_string(field(root, "schema", top), "$.schema");
    if (schema != kGridSchema) throw SchemaError("$.schema", "unsupported schema '" + schema + "'");

    GridData g;
    g.rank = get_int(field(root, "rank", top), "$.rank");
    g.n = get_int(field(root, "n", top), "$.n");
    const json& flags = field(root, "flags", top);
    g.flags.equalized = get_bool(field(flags, "equalized", "$.flags"), "$.flags.equalized");
    g.flags.edges_complete = get_bool(field(flags, "edges_complete", "$.flags"), "$.flags.edges_complete");
    g.flags.contact = get_bool(field(flags, "contact", "$.flags"), "$.flags.contact");
    if (auto it = root.find("metadata"); it != root.end()) {
        if (!it->is_object()) throw SchemaError("$.metadata", "expected an object");
        for (const auto& [k, v] : it->items()) g.metadata[k] = get_string(v, "$.metadata." + k);
    }

    const json& comps = field(root, "components", top);
    if (!comps.is_array()) throw SchemaError("$.components", "expected an array");
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const std::string path = "$.components[" + std::to_string(i) + "]";
        const json& o = comps[i];
        FixedComponent c;
        c.id = get_string(field(o, "id", path), path + ".id");
        c.label = get_string(field(o, "label", path), path + ".label");
        c.dim = get_int(field(o, "dim", path), path + ".dim");
        const json& mu = field(o, "mu", path);
        if (!mu.is_object()) throw SchemaError(path + ".mu", "expected an object");
        for (const auto& [b, arr] : mu.items()) {
            const std::string mpath = path + ".mu." + b;
            if (!arr.is_array()) throw SchemaError(mpath, "expected an array");
            QVector v;
            for (std::size_t k = 0; k < arr.size(); ++k)
                v.push_back(get_rational(arr[k], mpath + "[" + std::to_string(k) + "]"));
            c.mu[b] = v;
        }
        const json& compass = field(o, "compass", path);
        if (compass.is_string() && compass.get<std::string>() == "unspecified") {
            c.compass_specified = false;
        } else {
            if (!compass.is_array()) throw SchemaError(path + ".compass", "expected an array or \"unspecified\"");
            for (std::size_t k = 0; k < compass.size(); ++k) {
                const std::string cpath = path + ".compass[" + std::to_string(k) + "]";
                Weight w = get_weight(field(compass[k], "weight", cpath), cpath + ".weight");
                std::int64_t mult = get_int(field(compass[k], "mult", cpath), cpath + ".mult");
                if (mult < 1) throw SchemaError(cpath + ".mult", "multiplicity must be at least 1");
                if (c.compass.multiplicity(w) != 0) throw SchemaError(cpath + ".weight", "weight listed twice");
                c.compass.add(w, mult);
            }
        }
        if (auto it = o.find("split"); it != o.end()) {
            if (!it->is_array()) throw SchemaError(path + ".split", "expected an array");
            for (std::size_t k = 0; k < it->size(); ++k) {
                const std::string spath = path + ".split[" + std::to_string(k) + "]";
                const json& s = (*it)[k];
                Weight w = get_weight(field(s, "weight", spath), spath + ".weight");
                SplitPart part{get_int(field(s, "rank", spath), spath + ".rank"),
                               get_string(field(s, "bundle", spath), spath + ".bundle")};
                if (!c.split.emplace(w, part).second) throw SchemaError(spath + ".weight", "weight listed twice");
            }
        }
        if (auto it = o.find("absorbed"); it != o.end()) c.absorbed = get_int(*it, path + ".absorbed");
        g.components.push_back(std::move(c));
    }

    const json& edges = field(root, "edges", top);
    if (!edges.is_array()) throw SchemaError("$.edges", "expected an array");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string path = "$.edges[" + std::to_string(i) + "]";
        const json& o = edges[i];
        OrbitEdge e;
        e.src = get_string(field(o, "src", path), path + ".src");
        e.dst = get_string(field(o, "dst", path), path + ".dst");
        e.delta = get_int(field(o, "delta", path), path + ".delta");
        if (auto it = o.find("tags"); it != o.end()) {
            if (!it->is_array()) throw SchemaError(path + ".tags", "expected an array");
            for (std::size_t k = 0; k < it->size(); ++k) {
                const std::string tpath = path + ".tags[" + std::to_string(k) + "]";
                try {
                    e.tags.insert(parse_edge_tag(get_string((*it)[k], tpath)));
                } catch (const std::invalid_argument& ex) {
                    throw SchemaError(tpath, ex.what());
                }
            }
        }
        g.edges.push_back(std::move(e));
    }
    return g;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

const char* tag_color(const std::set<EdgeTag>& tags) {
    if (tags.size() != 1) return "black";
    switch (*tags.begin()) {
        case EdgeTag::A: return "darkgreen";
        case EdgeTag::B: return "blue";
        case EdgeTag::C: return "red";
        case EdgeTag::E: return "brown";
    }
    return "black";
}

}  // namespace

std::string to_dot(const GridData& g, const std::string& bundle) {
    std::vector<const FixedComponent*> nodes;
    for (const auto& c : g.components) nodes.push_back(&c);
    std::sort(nodes.begin(), nodes.end(), [&](auto* a, auto* b) {
        const QVector& ma = a->mu_of(bundle);
        const QVector& mb = b->mu_of(bundle);
        if (ma != mb) return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
        return std::tie(a->label, a->id) < std::tie(b->label, b->id);
    });

    std::ostringstream os;
    os << "digraph orbit_graph {\n";
    os << "  rankdir=RL;\n";
    os << "  node [shape=circle, fontsize=10];\n";
    std::size_t level = 0;
    for (std::size_t i = 0; i < nodes.size();) {
        std::size_t j = i;
        const QVector& mu = nodes[i]->mu_of(bundle);
        os << "  subgraph level_" << level++ << " {\n";
        os << "    rank=same;\n";
        while (j < nodes.size() && nodes[j]->mu_of(bundle) == mu) {
            const auto* c = nodes[j];
            os << "    \"" << dot_escape(c->id) << "\" [label=\"" << dot_escape(c->label) << "\\n" << bundle << "="
               << format_qvector(mu) << "\"";
            if (c->dim > 0) os << ", penwidth=" << (1 + c->dim);
            os << "];\n";
            ++j;
        }
        os << "  }\n";
        i = j;
    }
    for (const auto& e : sorted_edges(g)) {
        std::string tags;
        for (auto t : e.tags) tags += to_string(t);
        os << "  \"" << dot_escape(e.src) << "\" -> \"" << dot_escape(e.dst) << "\" [color=" << tag_color(e.tags);
        if (!tags.empty()) os << ", label=\"" << tags;
        if (e.delta != 1) os << (tags.empty() ? ", label=\"" : " ") << "d=" << e.delta;
        if (!tags.empty() || e.delta != 1) os << "\"";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace gridtorus
