#pragma once

#include "simplexcolor/complex.hpp"
#include "simplexcolor/dual_graph.hpp"

#include <cstddef>
#include <vector>

namespace simplexcolor {

struct OracleResult {
    std::size_t chromatic_number = 0;
    Coloring optimal_coloring;
    /// A clique of size lower_bound; when it equals chromatic_number it is
    /// the certificate that fewer colors cannot work.
    std::vector<std::size_t> largest_clique;
};

inline constexpr std::size_t default_node_limit = 40;

/// Exact chromatic number by branch and bound: a maximum clique gives the
/// lower bound, DSATUR the upper bound, and exhaustive DSATUR backtracking
/// settles every k in between. Throws LimitExceededError above node_limit.
OracleResult exact_chromatic(const DualGraph& g, std::size_t node_limit = default_node_limit);

}  // namespace simplexcolor
