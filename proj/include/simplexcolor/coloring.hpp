#pragma once

#include "simplexcolor/complex.hpp"
#include "simplexcolor/dual_graph.hpp"

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace simplexcolor {

enum class PeelMethod { combinatorial, geometric };

std::string to_string(PeelMethod method);
PeelMethod parse_peel_method(const std::string& text);

struct PeelStep {
    std::size_t simplex;
    Facet facet;  // exposed in the residual complex at this step

    bool operator==(const PeelStep&) const = default;
};

struct PeelCertificate {
    PeelMethod method = PeelMethod::combinatorial;
    std::vector<PeelStep> steps;

    bool operator==(const PeelCertificate&) const = default;
};

/// A complex with some simplices removed. Keeps, per live simplex, the number
/// of live dual neighbors so exposed simplices can be found without rescanning.
class ResidualComplex {
public:
    explicit ResidualComplex(const Complex& c);

    const Complex& complex() const noexcept { return complex_; }
    const DualGraph& dual() const noexcept { return dual_; }
    std::size_t size() const noexcept { return live_count_; }
    bool empty() const noexcept { return live_count_ == 0; }
    bool live(std::size_t simplex) const { return live_.at(simplex); }

    /// Live simplices with at least one exposed facet, in index order.
    const std::set<std::size_t>& exposed_simplices() const noexcept { return exposed_; }

    /// Number of live simplices containing f.
    std::size_t multiplicity(const Facet& f) const;

    /// Facet of a live simplex is exposed iff its dual neighbor across that
    /// facet is gone (or never existed).
    bool exposed(std::size_t simplex, const Facet& f) const;

    void remove(std::size_t simplex);

private:
    const Complex& complex_;
    DualGraph dual_;
    std::vector<bool> live_;
    std::vector<std::size_t> live_degree_;
    std::set<std::size_t> exposed_;
    std::size_t live_count_;
};

struct ExposedSimplex {
    std::size_t simplex;
    Facet facet;
};

/// Lowest-index live simplex with an exposed facet, and its lexicographically
/// smallest exposed facet. Throws UnrealizableComplexError when every facet
/// is glued, InputError on an empty residual.
ExposedSimplex find_exposed_combinatorial(const ResidualComplex& residual);

/// Nested convex hull search for an exposed simplex.
struct HullTrace {
    VertexId hull_vertex = 0;
    /// |S_v|, then the size of each restricted subset; strictly decreasing.
    std::vector<std::size_t> subset_sizes;
    /// The face every simplex of the corresponding subset contains: {v},
    /// then successively larger faces lying on the current hull.
    std::vector<std::vector<VertexId>> faces;
};

struct GeometricExposure {
    std::size_t simplex;
    Facet facet;
    HullTrace trace;
};

/// Picks the lexicographically smallest live vertex v (a hull vertex), takes
/// the simplices around it, and looks for a facet through v on their hull.
/// Failing that, it moves to the largest face through v on the hull, keeps
/// only the simplices containing that face, and repeats on their hull. The
/// subsets shrink strictly, so the search ends at a facet on the current
/// hull that contains the current face; such a facet cannot be glued.
///
/// Throws GeometryInvariantError if the chain stalls or the facet it finds is
/// glued, which only happens for complexes that are not geometrically valid.
GeometricExposure find_exposed_geometric(const ResidualComplex& residual);

/// Repeatedly removes an exposed simplex until nothing is left.
PeelCertificate peel(const Complex& c, PeelMethod method);

/// Colors in reverse peel order with the smallest color unused by already
/// colored neighbors. At most d neighbors are colored when a simplex is
/// reached, so d+1 colors always suffice.
Coloring color(const Complex& c, const PeelCertificate& cert);
Coloring color(const DualGraph& g, const PeelCertificate& cert);

struct ColoringViolation {
    enum class Kind { color_out_of_range, same_color };
    Kind kind;
    std::size_t first;
    std::size_t second;  // equals first for color_out_of_range
    Facet facet;         // the shared facet for same_color
    std::string message;
};

struct VerifyResult {
    bool ok = true;
    std::vector<ColoringViolation> violations;
};

VerifyResult verify_coloring(const Complex& c, const Coloring& col);
VerifyResult verify_coloring(const DualGraph& g, const Coloring& col);

/// Number of distinct colors used.
std::size_t colors_used(const Coloring& col);

}  // namespace simplexcolor
