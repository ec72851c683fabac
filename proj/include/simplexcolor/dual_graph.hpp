#pragma once

#include "simplexcolor/complex.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace simplexcolor {

struct DualEdge {
    std::size_t neighbor;
    Facet facet;

    bool operator==(const DualEdge&) const = default;
};

/// Facet-adjacency graph of a complex: one node per simplex, one edge per
/// glued facet. Adjacency lists are sorted by neighbor index.
class DualGraph {
public:
    DualGraph(std::size_t dimension, std::vector<std::vector<DualEdge>> adjacency);

    std::size_t dimension() const noexcept { return dimension_; }
    std::size_t node_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    std::size_t degree(std::size_t node) const { return adjacency_.at(node).size(); }
    const std::vector<DualEdge>& neighbors(std::size_t node) const { return adjacency_.at(node); }
    bool adjacent(std::size_t a, std::size_t b) const;

private:
    std::size_t dimension_;
    std::vector<std::vector<DualEdge>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// Throws InvalidComplexError if some facet belongs to more than two
/// simplices or two simplices are identical.
DualGraph build_dual(const Complex& c);

struct GraphStats {
    std::size_t max_degree = 0;
    std::size_t component_count = 0;
    /// floor((r-1)/r * (max_degree+2)) with r = d+2 when 4 <= r <= max_degree+1;
    /// otherwise the greedy bound max_degree + 1.
    std::size_t chromatic_upper_bound = 0;
    bool clique_bound_applies = false;
};

GraphStats stats(const DualGraph& g, std::size_t d);

/// The clique-exclusion bound floor((r-1)(delta+2)/r), evaluated in integers.
std::size_t clique_exclusion_bound(std::size_t r, std::size_t max_degree);

/// First r-clique in lexicographic order of sorted node lists, if any.
/// Requires r >= 2. Degree is at most d+1, so each seed node only has a
/// handful of candidate extensions.
std::optional<std::vector<std::size_t>> find_clique(const DualGraph& g, std::size_t r);

/// Every r-clique, each as a sorted node list, in lexicographic order.
std::vector<std::vector<std::size_t>> find_all_cliques(const DualGraph& g, std::size_t r);

/// Result of checking a K_{d+1} of the dual against the unique admissible
/// configuration: d+2 vertices in total, and the extra apex on the same side
/// of the base as the shared corner.
struct CliqueReport {
    std::vector<std::size_t> clique_nodes;
    std::vector<VertexId> distinct_vertex_ids;
    bool vertex_count_ok = false;
    bool halfspace_condition_ok = false;

    /// The relabeling used for the halfspace test (only set when the vertex
    /// count is right): `root` is the vertex shared by every simplex of the
    /// clique, `apex` the vertex missing from the first simplex, and `base`
    /// the other d ids, which span the reference hyperplane.
    std::optional<VertexId> root;
    std::optional<VertexId> apex;
    std::vector<VertexId> base;
    int root_side = 0;
    int apex_side = 0;
};

/// Throws InputError unless `clique` lists d+1 pairwise glued simplices.
CliqueReport analyze_kd1_configuration(const Complex& c, std::span<const std::size_t> clique);

}  // namespace simplexcolor
