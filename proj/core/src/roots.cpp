#include "gridtorus/roots.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace gridtorus {

std::string to_string(RootType t) {
    switch (t) {
        case RootType::A: return "A";
        case RootType::B: return "B";
        case RootType::C: return "C";
        case RootType::D: return "D";
    }
    return "?";
}

RootType parse_root_type(const std::string& text) {
    if (text.size() == 1) {
        switch (std::toupper(static_cast<unsigned char>(text[0]))) {
            case 'A': return RootType::A;
            case 'B': return RootType::B;
            case 'C': return RootType::C;
            case 'D': return RootType::D;
        }
    }
    throw std::invalid_argument("unsupported root system type '" + text + "'");
}

RootSystem root_system(RootType type, std::int64_t rank) {
    if (rank < 1 || (type == RootType::D && rank < 2))
        throw std::invalid_argument("rank " + std::to_string(rank) + " is too small for type " + to_string(type));
    const auto r = static_cast<std::size_t>(rank);
    std::set<Weight> roots;
    if (type == RootType::A) {
        for (std::size_t i = 0; i <= r; ++i)
            for (std::size_t j = 0; j <= r; ++j)
                if (i != j) roots.insert(unit_weight(r + 1, i) - unit_weight(r + 1, j));
    } else {
        for (std::size_t i = 0; i < r; ++i) {
            const Weight ei = unit_weight(r, i);
            if (type == RootType::B) {
                roots.insert(ei);
                roots.insert(-ei);
            }
            if (type == RootType::C) {
                roots.insert(2 * ei);
                roots.insert(-2 * ei);
            }
            for (std::size_t j = i + 1; j < r; ++j) {
                const Weight ej = unit_weight(r, j);
                for (std::int64_t s : {1, -1})
                    for (std::int64_t t : {1, -1}) roots.insert(s * ei + t * ej);
            }
        }
    }
    return RootSystem{type, rank, std::vector<Weight>(roots.begin(), roots.end())};
}

std::map<Weight, std::int64_t> project_adjoint(const RootSystem& rs, const Projection& p) {
    const std::size_t ambient = rs.type == RootType::A ? static_cast<std::size_t>(rs.rank) + 1 : static_cast<std::size_t>(rs.rank);
    if (p.source_rank() != ambient)
        throw std::invalid_argument("projection source rank " + std::to_string(p.source_rank()) + " does not match the root lattice");
    std::map<Weight, std::int64_t> out;
    for (const auto& root : rs.roots) ++out[p.apply(root)];
    out[Weight(p.target_rank(), 0)] += rs.rank;
    return out;
}

Projection sl3_restriction_a3() { return Projection(std::vector<std::vector<std::int64_t>>{{0, 1, -1, 0}, {1, -1, 0, 0}}); }

Projection sl3_restriction_d3() { return Projection(std::vector<std::vector<std::int64_t>>{{0, 1, -1}, {1, -1, 0}}); }

}  // namespace gridtorus
