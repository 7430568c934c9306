#pragma once
// Canonical JSON ("grid-torus/1") and Graphviz DOT renderings of GridData.

#include "gridtorus/grid.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace gridtorus {

inline constexpr const char* kGridSchema = "grid-torus/1";

/// Malformed or schema-violating JSON; path names the offending field.
class SchemaError : public std::runtime_error {
public:
    SchemaError(std::string path, const std::string& message)
        : std::runtime_error(path + ": " + message), path_(std::move(path)) {}
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

/// Components sorted by id, edges by (src, dst, delta, tags), two-space indent.
std::string to_json(const GridData& g);
GridData from_json(std::string_view text);

/// Orbit graph with one rank per mu-level of the bundle; stable under
/// component reordering (nodes sorted by mu, label, id).
std::string to_dot(const GridData& g, const std::string& bundle = "L");

}  // namespace gridtorus
