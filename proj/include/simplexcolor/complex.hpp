#pragma once

#include "simplexcolor/geometry.hpp"
#include "simplexcolor/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace simplexcolor {

using VertexId = std::uint32_t;

/// Sorted tuple of distinct vertex ids. Simplex and Facet differ only in the
/// number of ids (d + 1 versus d) and are kept as distinct types.
template <class Tag>
class VertexSet {
public:
    VertexSet() = default;

    /// Sorts the ids. Throws InputError on duplicates.
    explicit VertexSet(std::vector<VertexId> ids);

    const std::vector<VertexId>& ids() const noexcept { return ids_; }
    std::size_t size() const noexcept { return ids_.size(); }
    VertexId operator[](std::size_t i) const { return ids_[i]; }
    auto begin() const noexcept { return ids_.begin(); }
    auto end() const noexcept { return ids_.end(); }
    bool contains(VertexId id) const;

    auto operator<=>(const VertexSet&) const = default;

private:
    std::vector<VertexId> ids_;
};

struct SimplexTag {};
struct FacetTag {};
using Simplex = VertexSet<SimplexTag>;
using Facet = VertexSet<FacetTag>;

/// Facets of a simplex in lexicographic order (drop the largest id first).
std::vector<Facet> facets_of(const Simplex& s);

/// The id of s that is not in f. f must be a facet of s.
VertexId opposite_vertex(const Simplex& s, const Facet& f);

struct FacetHash {
    std::size_t operator()(const Facet& f) const noexcept;
};

/// A finite pure d-simplex complex: a vertex table and a list of d-simplices
/// referring to it by index. Structural shape (ids in range, d + 1 ids per
/// simplex, d coordinates per vertex) is enforced on construction; geometric
/// and gluing invariants are checked by validate().
class Complex {
public:
    Complex(std::size_t dimension, std::vector<Point> vertices, std::vector<Simplex> simplices);

    std::size_t dimension() const noexcept { return dimension_; }
    const std::vector<Point>& vertices() const noexcept { return vertices_; }
    const std::vector<Simplex>& simplices() const noexcept { return simplices_; }
    const Point& vertex(VertexId id) const { return vertices_.at(id); }
    const Simplex& simplex(std::size_t i) const { return simplices_.at(i); }
    std::size_t size() const noexcept { return simplices_.size(); }

    /// Pointers to the d + 1 corner points of simplex i.
    std::vector<const Point*> corners(std::size_t i) const;

    bool operator==(const Complex&) const = default;

private:
    std::size_t dimension_;
    std::vector<Point> vertices_;
    std::vector<Simplex> simplices_;
};

/// Simplex index to color in {0, ..., d}.
struct Coloring {
    std::vector<int> colors;

    bool operator==(const Coloring&) const = default;
};

enum class ValidationLevel { combinatorial, geometric_strict };

enum class ViolationKind {
    degenerate_simplex,     // orientation 0
    overglued_facet,        // facet shared by more than two simplices
    duplicate_simplex,
    coincident_vertices,    // distinct ids with equal coordinates
    interior_overlap,       // geometric-strict only
};

struct Violation {
    ViolationKind kind;
    std::vector<std::size_t> simplices;
    std::vector<VertexId> vertices;
    std::string message;
};

struct ValidationReport {
    ValidationLevel level = ValidationLevel::combinatorial;
    std::vector<Violation> violations;
    /// False when geometric-strict was requested but the overlap test was
    /// skipped because d > 3.
    bool overlap_checked = false;

    bool ok() const noexcept { return violations.empty(); }
};

std::string to_string(ViolationKind kind);
std::string to_string(ValidationLevel level);

/// Checks every Complex invariant and lists each violation. Never throws on
/// bad geometry; the report is the result.
ValidationReport validate(const Complex& c, ValidationLevel level);

/// Number of simplices containing each facet. Valid complexes only produce 1
/// (exposed) or 2 (glued).
std::map<Facet, std::size_t> facet_multiplicity(const Complex& c);

}  // namespace simplexcolor
