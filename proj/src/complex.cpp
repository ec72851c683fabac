#include "simplexcolor/complex.hpp"

#include "simplexcolor/error.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace simplexcolor {

template <class Tag>
VertexSet<Tag>::VertexSet(std::vector<VertexId> ids) : ids_(std::move(ids))
{
    std::sort(ids_.begin(), ids_.end());
    if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
        throw InputError("repeated vertex id in simplex");
}

template <class Tag>
bool VertexSet<Tag>::contains(VertexId id) const
{
    return std::binary_search(ids_.begin(), ids_.end(), id);
}

template class VertexSet<SimplexTag>;
template class VertexSet<FacetTag>;

std::vector<Facet> facets_of(const Simplex& s)
{
    std::vector<Facet> out;
    out.reserve(s.size());
    for (std::size_t drop = s.size(); drop-- > 0;) {
        std::vector<VertexId> ids;
        ids.reserve(s.size() - 1);
        for (std::size_t i = 0; i < s.size(); ++i)
            if (i != drop) ids.push_back(s[i]);
        out.emplace_back(std::move(ids));
    }
    return out;
}

VertexId opposite_vertex(const Simplex& s, const Facet& f)
{
    for (VertexId id : s)
        if (!f.contains(id)) return id;
    throw InputError("facet is not a facet of the simplex");
}

std::size_t FacetHash::operator()(const Facet& f) const noexcept
{
    std::size_t h = 1469598103934665603ull;
    for (VertexId id : f) {
        h ^= id;
        h *= 1099511628211ull;
    }
    return h;
}

Complex::Complex(std::size_t dimension, std::vector<Point> vertices, std::vector<Simplex> simplices)
    : dimension_(dimension), vertices_(std::move(vertices)), simplices_(std::move(simplices))
{
    if (dimension_ < 1) throw InputError("dimension must be at least 1");
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i].size() != dimension_)
            throw InputError("vertex " + std::to_string(i) + " has " +
                             std::to_string(vertices_[i].size()) + " coordinates, expected " +
                             std::to_string(dimension_));
    }
    for (std::size_t i = 0; i < simplices_.size(); ++i) {
        const Simplex& s = simplices_[i];
        if (s.size() != dimension_ + 1)
            throw InputError("simplex " + std::to_string(i) + " has " + std::to_string(s.size()) +
                             " vertices, expected " + std::to_string(dimension_ + 1));
        for (VertexId id : s)
            if (id >= vertices_.size())
                throw InputError("simplex " + std::to_string(i) + " refers to missing vertex " +
                                 std::to_string(id));
    }
}

std::vector<const Point*> Complex::corners(std::size_t i) const
{
    std::vector<const Point*> out;
    out.reserve(dimension_ + 1);
    for (VertexId id : simplices_.at(i)) out.push_back(&vertices_[id]);
    return out;
}

std::string to_string(ViolationKind kind)
{
    switch (kind) {
    case ViolationKind::degenerate_simplex: return "degenerate-simplex";
    case ViolationKind::overglued_facet: return "overglued-facet";
    case ViolationKind::duplicate_simplex: return "duplicate-simplex";
    case ViolationKind::coincident_vertices: return "coincident-vertices";
    case ViolationKind::interior_overlap: return "interior-overlap";
    }
    return "unknown";
}

std::string to_string(ValidationLevel level)
{
    return level == ValidationLevel::combinatorial ? "combinatorial" : "geometric-strict";
}

namespace {

std::string ids_text(const std::vector<VertexId>& ids)
{
    std::string out = "{";
    for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? "," : "") + std::to_string(ids[i]);
    return out + "}";
}

struct Box {
    std::vector<Rational> lo, hi;
};

Box bounding_box(const Complex& c, std::size_t i)
{
    Box b{c.vertex(c.simplex(i)[0]), c.vertex(c.simplex(i)[0])};
    for (VertexId id : c.simplex(i)) {
        const Point& p = c.vertex(id);
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (p[k] < b.lo[k]) b.lo[k] = p[k];
            if (p[k] > b.hi[k]) b.hi[k] = p[k];
        }
    }
    return b;
}

std::size_t shared_count(const Simplex& a, const Simplex& b)
{
    std::size_t n = 0;
    for (VertexId id : a) n += b.contains(id) ? 1 : 0;
    return n;
}

bool overlapping(const Complex& c, std::size_t i, std::size_t j)
{
    const Simplex& a = c.simplex(i);
    const Simplex& b = c.simplex(j);
    const std::size_t shared = shared_count(a, b);
    if (shared == a.size()) return true;
    if (shared == a.size() - 1) {
        // Glued along a facet: interiors are disjoint iff the apexes lie
        // strictly on opposite sides of the shared facet.
        std::vector<VertexId> common;
        VertexId apex_a = 0, apex_b = 0;
        for (VertexId id : a) {
            if (b.contains(id)) common.push_back(id);
            else apex_a = id;
        }
        for (VertexId id : b)
            if (!a.contains(id)) apex_b = id;
        std::vector<const Point*> pa, pb;
        for (VertexId id : common) pa.push_back(&c.vertex(id));
        pb = pa;
        pa.push_back(&c.vertex(apex_a));
        pb.push_back(&c.vertex(apex_b));
        return orientation(std::span<const Point* const>(pa), c.dimension()) ==
               orientation(std::span<const Point* const>(pb), c.dimension());
    }
    const auto ca = c.corners(i);
    const auto cb = c.corners(j);
    return interiors_intersect(ca, cb);
}

void check_overlaps(const Complex& c, const std::vector<bool>& degenerate, ValidationReport& report)
{
    std::vector<std::size_t> order;
    std::vector<Box> boxes(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (degenerate[i]) continue;
        boxes[i] = bounding_box(c, i);
        order.push_back(i);
    }
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return boxes[x].lo[0] < boxes[y].lo[0] || (boxes[x].lo[0] == boxes[y].lo[0] && x < y);
    });
    for (std::size_t oi = 0; oi < order.size(); ++oi) {
        const std::size_t i = order[oi];
        for (std::size_t oj = oi + 1; oj < order.size(); ++oj) {
            const std::size_t j = order[oj];
            if (boxes[j].lo[0] >= boxes[i].hi[0]) break;
            bool boxes_meet = true;
            for (std::size_t k = 1; k < c.dimension() && boxes_meet; ++k)
                boxes_meet = boxes[j].lo[k] < boxes[i].hi[k] && boxes[i].lo[k] < boxes[j].hi[k];
            if (!boxes_meet || !overlapping(c, i, j)) continue;
            report.violations.push_back({ViolationKind::interior_overlap,
                                         {std::min(i, j), std::max(i, j)},
                                         {},
                                         "simplices " + std::to_string(std::min(i, j)) + " and " +
                                             std::to_string(std::max(i, j)) +
                                             " have intersecting interiors"});
        }
    }
}

}  // namespace

ValidationReport validate(const Complex& c, ValidationLevel level)
{
    ValidationReport report;
    report.level = level;
    const std::size_t d = c.dimension();

    std::vector<bool> degenerate(c.size(), false);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto pts = c.corners(i);
        if (orientation(std::span<const Point* const>(pts), d) == 0) {
            degenerate[i] = true;
            report.violations.push_back({ViolationKind::degenerate_simplex,
                                         {i},
                                         c.simplex(i).ids(),
                                         "simplex " + std::to_string(i) + " is degenerate"});
        }
    }

    std::unordered_map<Facet, std::vector<std::size_t>, FacetHash> owners;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (auto& f : facets_of(c.simplex(i))) owners[std::move(f)].push_back(i);
    std::vector<std::pair<Facet, std::vector<std::size_t>>> overglued;
    for (auto& [f, who] : owners)
        if (who.size() > 2) overglued.emplace_back(f, who);
    std::sort(overglued.begin(), overglued.end());
    for (auto& [f, who] : overglued)
        report.violations.push_back({ViolationKind::overglued_facet, who, f.ids(),
                                     "facet " + ids_text(f.ids()) + " is shared by " +
                                         std::to_string(who.size()) + " simplices"});

    std::vector<std::size_t> by_simplex(c.size());
    std::iota(by_simplex.begin(), by_simplex.end(), 0);
    std::stable_sort(by_simplex.begin(), by_simplex.end(), [&](std::size_t a, std::size_t b) {
        return c.simplex(a) < c.simplex(b);
    });
    for (std::size_t k = 1; k < by_simplex.size(); ++k) {
        const std::size_t a = by_simplex[k - 1], b = by_simplex[k];
        if (c.simplex(a) == c.simplex(b))
            report.violations.push_back({ViolationKind::duplicate_simplex,
                                         {a, b},
                                         c.simplex(a).ids(),
                                         "simplices " + std::to_string(a) + " and " +
                                             std::to_string(b) + " are identical"});
    }

    std::vector<VertexId> by_coords(c.vertices().size());
    std::iota(by_coords.begin(), by_coords.end(), 0);
    std::stable_sort(by_coords.begin(), by_coords.end(), [&](VertexId a, VertexId b) {
        return c.vertex(a) < c.vertex(b);
    });
    for (std::size_t k = 1; k < by_coords.size(); ++k) {
        const VertexId a = by_coords[k - 1], b = by_coords[k];
        if (c.vertex(a) == c.vertex(b))
            report.violations.push_back({ViolationKind::coincident_vertices,
                                         {},
                                         {a, b},
                                         "vertices " + std::to_string(a) + " and " +
                                             std::to_string(b) + " share coordinates"});
    }

    if (level == ValidationLevel::geometric_strict && d <= 3) {
        report.overlap_checked = true;
        check_overlaps(c, degenerate, report);
    }
    return report;
}

std::map<Facet, std::size_t> facet_multiplicity(const Complex& c)
{
    std::map<Facet, std::size_t> counts;
    for (const auto& s : c.simplices())
        for (auto& f : facets_of(s)) ++counts[std::move(f)];
    return counts;
}

}  // namespace simplexcolor
