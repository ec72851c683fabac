#include "simplexcolor/chromatic.hpp"

#include "simplexcolor/error.hpp"

#include <algorithm>

namespace simplexcolor {
namespace {

class Dsatur {
public:
    explicit Dsatur(const DualGraph& g) : g_(g), colors_(g.node_count(), -1) {}

    // Greedy DSATUR; returns the number of colors used.
    int greedy()
    {
        std::fill(colors_.begin(), colors_.end(), -1);
        int used = 0;
        for (std::size_t step = 0; step < g_.node_count(); ++step) {
            const std::size_t v = pick();
            int k = 0;
            while (blocked(v, k)) ++k;
            colors_[v] = k;
            used = std::max(used, k + 1);
        }
        return used;
    }

    // Exhaustive search for a proper coloring with at most k colors.
    bool colorable(int k)
    {
        std::fill(colors_.begin(), colors_.end(), -1);
        return search(k, 0, 0);
    }

    const std::vector<int>& colors() const { return colors_; }

private:
    bool blocked(std::size_t v, int k) const
    {
        for (const auto& e : g_.neighbors(v))
            if (colors_[e.neighbor] == k) return true;
        return false;
    }

    std::size_t saturation(std::size_t v) const
    {
        std::vector<int> seen;
        for (const auto& e : g_.neighbors(v)) {
            const int k = colors_[e.neighbor];
            if (k >= 0 && std::find(seen.begin(), seen.end(), k) == seen.end()) seen.push_back(k);
        }
        return seen.size();
    }

    // Uncolored node with the largest saturation, then degree, then lowest index.
    std::size_t pick() const
    {
        std::size_t best = g_.node_count();
        std::size_t best_sat = 0, best_deg = 0;
        for (std::size_t v = 0; v < g_.node_count(); ++v) {
            if (colors_[v] >= 0) continue;
            const std::size_t sat = saturation(v), deg = g_.degree(v);
            if (best == g_.node_count() || sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool search(int k, std::size_t colored, int used)
    {
        if (colored == g_.node_count()) return true;
        const std::size_t v = pick();
        // Colors above `used` are interchangeable; trying one of them is enough.
        const int limit = std::min(k, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (blocked(v, c)) continue;
            colors_[v] = c;
            if (search(k, colored + 1, std::max(used, c + 1))) return true;
        }
        colors_[v] = -1;
        return false;
    }

    const DualGraph& g_;
    std::vector<int> colors_;
};

}  // namespace

OracleResult exact_chromatic(const DualGraph& g, std::size_t node_limit)
{
    if (g.node_count() > node_limit)
        throw LimitExceededError("exact chromatic number refused: " + std::to_string(g.node_count()) +
                                 " nodes exceeds the limit of " + std::to_string(node_limit));
    OracleResult result;
    if (g.node_count() == 0) return result;

    result.largest_clique = {0};
    for (std::size_t r = 2;; ++r) {
        auto clique = find_clique(g, r);
        if (!clique) break;
        result.largest_clique = std::move(*clique);
    }
    const int lower = static_cast<int>(result.largest_clique.size());

    Dsatur dsatur(g);
    const int upper = dsatur.greedy();
    result.chromatic_number = static_cast<std::size_t>(upper);
    result.optimal_coloring.colors = dsatur.colors();

    for (int k = lower; k < upper; ++k) {
        if (dsatur.colorable(k)) {
            result.chromatic_number = static_cast<std::size_t>(k);
            result.optimal_coloring.colors = dsatur.colors();
            break;
        }
    }
    return result;
}

}  // namespace simplexcolor
