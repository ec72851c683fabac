#include "simplexcolor/coloring.hpp"

#include "simplexcolor/error.hpp"

#include <algorithm>
#include <map>

namespace simplexcolor {

std::string to_string(PeelMethod method)
{
    return method == PeelMethod::combinatorial ? "combinatorial" : "geometric";
}

PeelMethod parse_peel_method(const std::string& text)
{
    if (text == "combinatorial") return PeelMethod::combinatorial;
    if (text == "geometric") return PeelMethod::geometric;
    throw InputError("unknown peel method '" + text + "'");
}

ResidualComplex::ResidualComplex(const Complex& c)
    : complex_(c), dual_(build_dual(c)), live_(c.size(), true), live_degree_(c.size()),
      live_count_(c.size())
{
    const std::size_t full = c.dimension() + 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
        live_degree_[i] = dual_.degree(i);
        if (live_degree_[i] < full) exposed_.insert(i);
    }
}

std::size_t ResidualComplex::multiplicity(const Facet& f) const
{
    std::size_t count = 0;
    for (std::size_t i = 0; i < complex_.size(); ++i) {
        if (!live_[i]) continue;
        const Simplex& s = complex_.simplex(i);
        if (std::includes(s.begin(), s.end(), f.begin(), f.end())) ++count;
    }
    return count;
}

bool ResidualComplex::exposed(std::size_t simplex, const Facet& f) const
{
    for (const auto& e : dual_.neighbors(simplex))
        if (e.facet == f) return !live_[e.neighbor];
    return true;
}

void ResidualComplex::remove(std::size_t simplex)
{
    if (!live_.at(simplex)) throw InputError("simplex " + std::to_string(simplex) + " already removed");
    live_[simplex] = false;
    --live_count_;
    exposed_.erase(simplex);
    for (const auto& e : dual_.neighbors(simplex)) {
        if (!live_[e.neighbor]) continue;
        --live_degree_[e.neighbor];
        exposed_.insert(e.neighbor);
    }
}

ExposedSimplex find_exposed_combinatorial(const ResidualComplex& residual)
{
    if (residual.empty()) throw InputError("residual complex is empty");
    if (residual.exposed_simplices().empty())
        throw UnrealizableComplexError("no simplex has an exposed facet; " +
                                           std::to_string(residual.size()) +
                                           " simplices remain, all facets glued",
                                       residual.size());
    const std::size_t s = *residual.exposed_simplices().begin();
    for (auto& f : facets_of(residual.complex().simplex(s)))
        if (residual.exposed(s, f)) return {s, std::move(f)};
    throw GeometryInvariantError("exposed-simplex index out of sync");
}

namespace {

bool contains_all(const Simplex& s, const std::vector<VertexId>& ids)
{
    return std::all_of(ids.begin(), ids.end(), [&](VertexId id) { return s.contains(id); });
}

// All distinct size-`size` supersets of `face` that are faces of simplices in
// `group`, sorted lexicographically.
std::vector<std::vector<VertexId>> larger_faces(const Complex& c, const std::vector<std::size_t>& group,
                                                const std::vector<VertexId>& face, std::size_t size)
{
    std::set<std::vector<VertexId>> out;
    const std::size_t extra = size - face.size();
    for (std::size_t i : group) {
        std::vector<VertexId> others;
        for (VertexId id : c.simplex(i))
            if (std::find(face.begin(), face.end(), id) == face.end()) others.push_back(id);
        if (others.size() < extra) continue;
        std::vector<bool> pick(others.size(), false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(extra), true);
        do {
            std::vector<VertexId> f(face);
            for (std::size_t k = 0; k < others.size(); ++k)
                if (pick[k]) f.push_back(others[k]);
            std::sort(f.begin(), f.end());
            out.insert(std::move(f));
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return {out.begin(), out.end()};
}

class HullOf {
public:
    HullOf(const Complex& c, const std::vector<std::size_t>& group) : complex_(c)
    {
        std::set<VertexId> ids;
        for (std::size_t i : group) ids.insert(c.simplex(i).begin(), c.simplex(i).end());
        for (VertexId id : ids) cloud_.push_back(&c.vertex(id));
    }

    bool on_boundary(const std::vector<VertexId>& face) const
    {
        std::vector<const Point*> pts;
        for (VertexId id : face) pts.push_back(&complex_.vertex(id));
        return supporting_hyperplane(std::span<const Point* const>(pts),
                                     std::span<const Point* const>(cloud_))
            .has_value();
    }

private:
    const Complex& complex_;
    std::vector<const Point*> cloud_;
};

// Side of the facet's affine hull on which p lies, up to a sign fixed by the
// facet alone.
int facet_side(const Complex& c, const Facet& f, VertexId p)
{
    std::vector<const Point*> pts;
    for (VertexId id : f) pts.push_back(&c.vertex(id));
    pts.push_back(&c.vertex(p));
    return orientation(std::span<const Point* const>(pts), c.dimension());
}

// Orientation of (chain face in discovery order, rest of the facet ascending,
// apex). In the plane a negative value marks the counterclockwise-most
// triangle around the hull vertex.
int chain_orientation(const Complex& c, const std::vector<VertexId>& chain, const Facet& f, VertexId apex)
{
    std::vector<const Point*> pts;
    for (VertexId id : chain) pts.push_back(&c.vertex(id));
    for (VertexId id : f)
        if (std::find(chain.begin(), chain.end(), id) == chain.end()) pts.push_back(&c.vertex(id));
    pts.push_back(&c.vertex(apex));
    return orientation(std::span<const Point* const>(pts), c.dimension());
}

}  // namespace

GeometricExposure find_exposed_geometric(const ResidualComplex& residual)
{
    if (residual.empty()) throw InputError("residual complex is empty");
    const Complex& c = residual.complex();
    const std::size_t d = c.dimension();

    std::set<VertexId> used;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (residual.live(i)) used.insert(c.simplex(i).begin(), c.simplex(i).end());
    std::vector<VertexId> used_ids(used.begin(), used.end());
    std::vector<const Point*> used_points;
    for (VertexId id : used_ids) used_points.push_back(&c.vertex(id));
    const VertexId v = used_ids[extreme_point(std::span<const Point* const>(used_points))];

    GeometricExposure result{0, Facet{}, HullTrace{}};
    HullTrace& trace = result.trace;
    trace.hull_vertex = v;

    std::vector<std::size_t> group;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (residual.live(i) && c.simplex(i).contains(v)) group.push_back(i);
    std::vector<VertexId> face{v};  // discovery order
    trace.subset_sizes.push_back(group.size());
    trace.faces.push_back(face);

    for (;;) {
        const HullOf hull(c, group);

        // Facets through the current face that lie on the hull of the group.
        struct Candidate {
            std::size_t simplex;
            Facet facet;
            int turn;
        };
        std::map<Facet, std::vector<int>> apex_sides;
        for (std::size_t i : group)
            for (auto& f : facets_of(c.simplex(i)))
                apex_sides[f].push_back(facet_side(c, f, opposite_vertex(c.simplex(i), f)));

        std::vector<Candidate> candidates;
        for (std::size_t i : group) {
            for (auto& f : facets_of(c.simplex(i))) {
                if (!std::all_of(face.begin(), face.end(), [&](VertexId id) { return f.contains(id); }))
                    continue;
                // Two apexes strictly on opposite sides rule out a supporting
                // hyperplane without solving for one.
                const auto& sides = apex_sides[f];
                const bool straddled = std::find(sides.begin(), sides.end(), 1) != sides.end() &&
                                       std::find(sides.begin(), sides.end(), -1) != sides.end();
                if (straddled || !hull.on_boundary(f.ids())) continue;
                const int turn = chain_orientation(c, face, f, opposite_vertex(c.simplex(i), f));
                candidates.push_back({i, std::move(f), turn});
            }
        }
        if (!candidates.empty()) {
            auto best = std::find_if(candidates.begin(), candidates.end(),
                                     [](const Candidate& k) { return k.turn < 0; });
            if (best == candidates.end()) best = candidates.begin();
            if (!residual.exposed(best->simplex, best->facet))
                throw GeometryInvariantError("facet on the hull of the vertex star is glued; "
                                             "the complex is not a valid geometric complex");
            result.simplex = best->simplex;
            result.facet = std::move(best->facet);
            return result;
        }

        // Otherwise move to the largest face through `face` on the hull.
        std::vector<VertexId> next;
        for (std::size_t size = d - 1; size > face.size() && next.empty(); --size) {
            std::vector<VertexId> sorted_face(face);
            std::sort(sorted_face.begin(), sorted_face.end());
            for (auto& f : larger_faces(c, group, sorted_face, size)) {
                if (hull.on_boundary(f)) {
                    next = std::move(f);
                    break;
                }
            }
        }
        if (next.empty())
            throw GeometryInvariantError("no face through the current face lies on the hull");

        std::vector<std::size_t> narrowed;
        for (std::size_t i : group)
            if (contains_all(c.simplex(i), next)) narrowed.push_back(i);
        if (narrowed.size() >= group.size())
            throw GeometryInvariantError("nested hull chain failed to shrink (" +
                                         std::to_string(group.size()) + " -> " +
                                         std::to_string(narrowed.size()) + ")");

        for (VertexId id : next)
            if (std::find(face.begin(), face.end(), id) == face.end()) face.push_back(id);
        group = std::move(narrowed);
        trace.subset_sizes.push_back(group.size());
        trace.faces.push_back(face);
    }
}

PeelCertificate peel(const Complex& c, PeelMethod method)
{
    ResidualComplex residual(c);
    PeelCertificate cert;
    cert.method = method;
    cert.steps.reserve(c.size());
    while (!residual.empty()) {
        if (method == PeelMethod::combinatorial) {
            auto found = find_exposed_combinatorial(residual);
            cert.steps.push_back({found.simplex, std::move(found.facet)});
        } else {
            if (residual.exposed_simplices().empty())
                throw UnrealizableComplexError("no simplex has an exposed facet; " +
                                                   std::to_string(residual.size()) +
                                                   " simplices remain, all facets glued",
                                               residual.size());
            auto found = find_exposed_geometric(residual);
            cert.steps.push_back({found.simplex, std::move(found.facet)});
        }
        residual.remove(cert.steps.back().simplex);
    }
    return cert;
}

Coloring color(const Complex& c, const PeelCertificate& cert) { return color(build_dual(c), cert); }

Coloring color(const DualGraph& g, const PeelCertificate& cert)
{
    const std::size_t n = g.node_count();
    if (cert.steps.size() != n)
        throw InputError("certificate has " + std::to_string(cert.steps.size()) + " steps for " +
                         std::to_string(n) + " simplices");
    std::vector<bool> listed(n, false);
    for (const auto& step : cert.steps) {
        if (step.simplex >= n || listed[step.simplex])
            throw InputError("certificate lists simplex " + std::to_string(step.simplex) +
                             " out of range or twice");
        listed[step.simplex] = true;
    }

    const int palette = static_cast<int>(g.dimension()) + 1;
    Coloring col;
    col.colors.assign(n, -1);
    std::vector<bool> taken(static_cast<std::size_t>(palette));
    for (auto it = cert.steps.rbegin(); it != cert.steps.rend(); ++it) {
        std::fill(taken.begin(), taken.end(), false);
        for (const auto& e : g.neighbors(it->simplex)) {
            const int k = col.colors[e.neighbor];
            if (k >= 0) taken[static_cast<std::size_t>(k)] = true;
        }
        int chosen = 0;
        while (chosen < palette && taken[static_cast<std::size_t>(chosen)]) ++chosen;
        if (chosen == palette)
            throw InputError("certificate step for simplex " + std::to_string(it->simplex) +
                             " has all neighbors colored; its witness facet is not exposed");
        col.colors[it->simplex] = chosen;
    }
    return col;
}

VerifyResult verify_coloring(const Complex& c, const Coloring& col) { return verify_coloring(build_dual(c), col); }

VerifyResult verify_coloring(const DualGraph& g, const Coloring& col)
{
    if (col.colors.size() != g.node_count())
        throw InputError("coloring has " + std::to_string(col.colors.size()) + " entries for " +
                         std::to_string(g.node_count()) + " simplices");
    VerifyResult result;
    const int top = static_cast<int>(g.dimension());
    for (std::size_t i = 0; i < col.colors.size(); ++i) {
        const int k = col.colors[i];
        if (k < 0 || k > top)
            result.violations.push_back({ColoringViolation::Kind::color_out_of_range, i, i, Facet{},
                                         "simplex " + std::to_string(i) + " has color " +
                                             std::to_string(k) + " outside 0.." + std::to_string(top)});
    }
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        for (const auto& e : g.neighbors(i)) {
            if (e.neighbor <= i || col.colors[i] != col.colors[e.neighbor]) continue;
            std::string facet_text;
            for (VertexId id : e.facet) facet_text += (facet_text.empty() ? "" : ",") + std::to_string(id);
            result.violations.push_back({ColoringViolation::Kind::same_color, i, e.neighbor, e.facet,
                                         "simplices " + std::to_string(i) + " and " +
                                             std::to_string(e.neighbor) + " share facet {" +
                                             facet_text + "} and both have color " +
                                             std::to_string(col.colors[i])});
        }
    }
    result.ok = result.violations.empty();
    return result;
}

std::size_t colors_used(const Coloring& col)
{
    std::set<int> distinct(col.colors.begin(), col.colors.end());
    return distinct.size();
}

}  // namespace simplexcolor
