#include "simplexcolor/dual_graph.hpp"

#include "simplexcolor/error.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace simplexcolor {

DualGraph::DualGraph(std::size_t dimension, std::vector<std::vector<DualEdge>> adjacency)
    : dimension_(dimension), adjacency_(std::move(adjacency))
{
    std::size_t half_edges = 0;
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end(),
                  [](const DualEdge& a, const DualEdge& b) { return a.neighbor < b.neighbor; });
        half_edges += list.size();
    }
    edge_count_ = half_edges / 2;
}

bool DualGraph::adjacent(std::size_t a, std::size_t b) const
{
    const auto& list = adjacency_.at(a);
    auto it = std::lower_bound(list.begin(), list.end(), b,
                               [](const DualEdge& e, std::size_t n) { return e.neighbor < n; });
    return it != list.end() && it->neighbor == b;
}

DualGraph build_dual(const Complex& c)
{
    std::unordered_map<Facet, std::vector<std::size_t>, FacetHash> owners;
    owners.reserve(c.size() * (c.dimension() + 1));
    for (std::size_t i = 0; i < c.size(); ++i)
        for (auto& f : facets_of(c.simplex(i))) owners[std::move(f)].push_back(i);

    std::vector<std::vector<DualEdge>> adjacency(c.size());
    for (auto& [f, who] : owners) {
        if (who.size() == 1) continue;
        if (who.size() > 2)
            throw InvalidComplexError("facet shared by " + std::to_string(who.size()) +
                                      " simplices (simplex " + std::to_string(who.front()) + ")");
        adjacency[who[0]].push_back({who[1], f});
        adjacency[who[1]].push_back({who[0], f});
    }
    DualGraph g(c.dimension(), std::move(adjacency));
    // Two distinct simplices share at most one facet; more means they are equal.
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        const auto& list = g.neighbors(i);
        for (std::size_t k = 1; k < list.size(); ++k)
            if (list[k].neighbor == list[k - 1].neighbor)
                throw InvalidComplexError("simplices " + std::to_string(i) + " and " +
                                          std::to_string(list[k].neighbor) + " are identical");
    }
    return g;
}

std::size_t clique_exclusion_bound(std::size_t r, std::size_t max_degree)
{
    return (r - 1) * (max_degree + 2) / r;
}

GraphStats stats(const DualGraph& g, std::size_t d)
{
    GraphStats s;
    for (std::size_t v = 0; v < g.node_count(); ++v) s.max_degree = std::max(s.max_degree, g.degree(v));

    std::vector<bool> seen(g.node_count(), false);
    std::vector<std::size_t> stack;
    for (std::size_t v = 0; v < g.node_count(); ++v) {
        if (seen[v]) continue;
        ++s.component_count;
        seen[v] = true;
        stack.push_back(v);
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (const auto& e : g.neighbors(u)) {
                if (!seen[e.neighbor]) {
                    seen[e.neighbor] = true;
                    stack.push_back(e.neighbor);
                }
            }
        }
    }

    const std::size_t r = d + 2;
    s.clique_bound_applies = r >= 4 && r <= s.max_degree + 1;
    if (g.node_count() == 0) s.chromatic_upper_bound = 0;
    else if (s.clique_bound_applies) s.chromatic_upper_bound = clique_exclusion_bound(r, s.max_degree);
    else s.chromatic_upper_bound = s.max_degree + 1;
    return s;
}

namespace {

// Extends `clique` using candidates (all adjacent to every clique member and
// larger than its last element). Calls `emit` for each completed clique;
// stops early when emit returns true.
template <class Emit>
bool extend(const DualGraph& g, std::size_t r, std::vector<std::size_t>& clique,
            const std::vector<std::size_t>& candidates, Emit&& emit)
{
    if (clique.size() == r) return emit(clique);
    if (clique.size() + candidates.size() < r) return false;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        const std::size_t v = candidates[k];
        std::vector<std::size_t> next;
        for (std::size_t m = k + 1; m < candidates.size(); ++m)
            if (g.adjacent(v, candidates[m])) next.push_back(candidates[m]);
        clique.push_back(v);
        const bool done = extend(g, r, clique, next, emit);
        clique.pop_back();
        if (done) return true;
    }
    return false;
}

template <class Emit>
void enumerate_cliques(const DualGraph& g, std::size_t r, Emit&& emit)
{
    if (r < 2) throw InputError("clique size must be at least 2");
    for (std::size_t v = 0; v < g.node_count(); ++v) {
        // An r-clique through v needs r - 1 neighbors.
        if (g.degree(v) + 1 < r) continue;
        std::vector<std::size_t> candidates;
        for (const auto& e : g.neighbors(v))
            if (e.neighbor > v) candidates.push_back(e.neighbor);
        std::vector<std::size_t> clique{v};
        if (extend(g, r, clique, candidates, emit)) return;
    }
}

}  // namespace

std::optional<std::vector<std::size_t>> find_clique(const DualGraph& g, std::size_t r)
{
    std::optional<std::vector<std::size_t>> found;
    enumerate_cliques(g, r, [&](const std::vector<std::size_t>& clique) {
        found = clique;
        return true;
    });
    return found;
}

std::vector<std::vector<std::size_t>> find_all_cliques(const DualGraph& g, std::size_t r)
{
    std::vector<std::vector<std::size_t>> all;
    enumerate_cliques(g, r, [&](const std::vector<std::size_t>& clique) {
        all.push_back(clique);
        return false;
    });
    return all;
}

CliqueReport analyze_kd1_configuration(const Complex& c, std::span<const std::size_t> clique)
{
    const std::size_t d = c.dimension();
    if (clique.size() != d + 1)
        throw InputError("expected " + std::to_string(d + 1) + " simplices, got " +
                         std::to_string(clique.size()));
    for (std::size_t i : clique)
        if (i >= c.size()) throw InputError("simplex index " + std::to_string(i) + " out of range");

    auto shared = [&](std::size_t a, std::size_t b) {
        std::size_t n = 0;
        for (VertexId id : c.simplex(a)) n += c.simplex(b).contains(id) ? 1 : 0;
        return n;
    };
    for (std::size_t x = 0; x < clique.size(); ++x)
        for (std::size_t y = x + 1; y < clique.size(); ++y)
            if (shared(clique[x], clique[y]) != d)
                throw InputError("simplices " + std::to_string(clique[x]) + " and " +
                                 std::to_string(clique[y]) + " do not share a facet");

    CliqueReport report;
    report.clique_nodes.assign(clique.begin(), clique.end());
    std::set<VertexId> ids;
    for (std::size_t i : clique) ids.insert(c.simplex(i).begin(), c.simplex(i).end());
    report.distinct_vertex_ids.assign(ids.begin(), ids.end());
    report.vertex_count_ok = ids.size() == d + 2;
    if (!report.vertex_count_ok) return report;

    // The clique uses d+1 of the d+2 possible (d+1)-subsets. The vertex in all
    // of them is the root; the missing subset is everything but the root.
    VertexId root = 0;
    for (VertexId id : ids) {
        bool everywhere = true;
        for (std::size_t i : clique) everywhere = everywhere && c.simplex(i).contains(id);
        if (everywhere) root = id;
    }
    const Simplex& first = c.simplex(clique.front());
    VertexId apex = 0;
    for (VertexId id : ids)
        if (!first.contains(id)) apex = id;

    report.root = root;
    report.apex = apex;
    std::vector<const Point*> base_points;
    for (VertexId id : ids) {
        if (id == root || id == apex) continue;
        report.base.push_back(id);
        base_points.push_back(&c.vertex(id));
    }
    const auto plane = hyperplane_through(base_points);
    if (!plane) return report;  // degenerate base: the configuration is not geometric
    report.root_side = side_of(*plane, c.vertex(root));
    report.apex_side = side_of(*plane, c.vertex(apex));
    report.halfspace_condition_ok = report.root_side != 0 && report.root_side == report.apex_side;
    return report;
}

}  // namespace simplexcolor
