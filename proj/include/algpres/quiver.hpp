#pragma once

#include "algpres/splitting.hpp"

#include <string>
#include <vector>

namespace algpres {

struct Arrow {
    std::size_t id = 0;
    std::size_t source = 0;
    std::size_t target = 0;
    std::string label;
};

class Quiver {
public:
    Quiver() = default;
    explicit Quiver(std::vector<std::string> vertices) : vertices_(std::move(vertices)) {}

    std::size_t add_vertex(std::string label);
    /// Appends an arrow with the next free id; returns that id.
    std::size_t add_arrow(std::size_t source, std::size_t target, std::string label);

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t arrow_count() const { return arrows_.size(); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(std::size_t id) const { return arrows_.at(id); }
    /// Ids of the arrows leaving v, increasing.
    std::vector<std::size_t> arrows_from(std::size_t v) const;
    /// Number of arrows i -> j.
    std::size_t arrows_between(std::size_t i, std::size_t j) const;

    bool operator==(const Quiver& other) const;

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
};

struct QuiverPath {
    std::size_t start = 0;
    std::vector<std::size_t> arrows;

    std::size_t length() const { return arrows.size(); }
    std::size_t end(const Quiver& q) const { return arrows.empty() ? start : q.arrow(arrows.back()).target; }
    bool operator==(const QuiverPath& other) const = default;
};

/// Paths of length 0..max_len ordered by (length, start vertex, arrow ids).
std::vector<QuiverPath> enumerate_paths(const Quiver& q, std::size_t max_len);

/// Graphviz text. Vertices are named v1, v2, ... and carry their labels.
std::string to_dot(const Quiver& q);

struct AlgebraQuiver {
    Quiver quiver;
    std::vector<std::vector<std::size_t>> ranks;   ///< ranks[i][j] = arrows i -> j
    std::vector<Vec> witnesses;                     ///< per arrow, an element of r generating its piece
    std::vector<std::string> notes;
};

/// Vertices are the components of A/r; there are rank(e_i (r/r^2) e_j)
/// arrows i -> j. Throws SplittingInvalid when the splitting fails a check.
AlgebraQuiver quiver_of_algebra(const SplittingData& split, std::uint64_t seed = 0);

} // namespace algpres
