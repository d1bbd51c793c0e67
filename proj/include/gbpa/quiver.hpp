#ifndef GBPA_QUIVER_HPP
#define GBPA_QUIVER_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gbpa/errors.hpp"
#include "gbpa/field.hpp"

namespace gbpa {

struct Arrow {
    std::string name;
    std::size_t source;
    std::size_t target;
    bool operator==(const Arrow&) const = default;
};

// Finite directed multigraph with named vertices and arrows.
class Quiver {
public:
    Quiver() = default;

    std::size_t add_vertex(const std::string& name);
    std::size_t add_arrow(const std::string& name, const std::string& src, const std::string& dst);
    std::size_t add_arrow_by_index(const std::string& name, std::size_t src, std::size_t dst);

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t arrow_count() const { return arrows_.size(); }
    const std::string& vertex_name(std::size_t i) const { return vertices_[i]; }
    const Arrow& arrow(std::size_t a) const { return arrows_[a]; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    std::size_t vertex_index(const std::string& name) const;
    std::size_t arrow_index(const std::string& name) const;
    bool has_vertex(const std::string& name) const;
    bool has_arrow(const std::string& name) const;

    bool operator==(const Quiver&) const = default;

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
};

// Either the trivial path at `source` (no arrows) or a composable arrow
// sequence; `source` always names the starting vertex.
struct Path {
    std::size_t source = 0;
    std::vector<std::size_t> arrows;

    static Path trivial(std::size_t vertex) { return Path{vertex, {}}; }

    std::size_t length() const { return arrows.size(); }
    std::size_t target(const Quiver& q) const;
    bool operator==(const Path&) const = default;
    bool operator<(const Path& rhs) const {
        return std::pair(arrows.size(), std::pair(arrows, source)) <
               std::pair(rhs.arrows.size(), std::pair(rhs.arrows, rhs.source));
    }
};

// Validates composability against the quiver; throws InvalidRelationError.
Path make_path(const Quiver& q, std::size_t source, std::vector<std::size_t> arrows);

std::string path_to_string(const Quiver& q, const Path& p);

// A k-combination of parallel paths of length >= 2 (a relation generator).
struct RelationCombo {
    std::vector<std::pair<Scalar, Path>> terms;
};

// Throws InvalidRelationError unless terms are parallel, pairwise distinct,
// nonzero-coefficient and all of length >= 2.
void validate_relation(const Quiver& q, const RelationCombo& rel);

bool is_acyclic(const Quiver& q);

// All paths from -> to of length <= max_len, ordered by length then
// lexicographically by arrow declaration order. Includes the trivial path
// when from == to.
std::vector<Path> enumerate_paths(const Quiver& q, std::size_t from, std::size_t to,
                                  std::size_t max_len);

// All paths of length <= max_len between any vertex pair, same ordering
// (trivial paths first in vertex order).
std::vector<Path> enumerate_all_paths(const Quiver& q, std::size_t max_len);

struct OppositeQuiver {
    Quiver quiver;
    std::vector<RelationCombo> relations;
};

OppositeQuiver opposite(const Quiver& q, const std::vector<RelationCombo>& rels);

Path reverse_path(const Path& p, const Quiver& q);

} // namespace gbpa

#endif
