#pragma once

#include "simplexcolor/complex.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace simplexcolor {

enum class GeneratorKind { fan, closed_fan, tri_tiling, delaunay2d, freudenthal, path, boundary_abstract };

std::string to_string(GeneratorKind kind);
GeneratorKind parse_generator_kind(const std::string& text);
std::vector<GeneratorKind> all_generator_kinds();

/// `size` means, per kind:
///   fan               number of simplices around the shared interior vertex, 1..d+1
///   closed-fan        number of triangles around the interior vertex, >= 3 (d = 2)
///   tri-tiling        rows of the triangular lattice window (size^2 triangles, d = 2)
///   delaunay2d        number of random points, >= 3 (d = 2)
///   freudenthal       cells per axis m (m^d * d! simplices)
///   path              number of simplices in the chain
///   boundary-abstract ignored; always the d+2 facets of a (d+1)-simplex
/// Only delaunay2d consumes the seed.
struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::fan;
    std::size_t dimension = 2;
    std::size_t size = 1;
    std::uint64_t seed = 0;
};

/// Throws InputError for an unsupported (kind, dimension) pair or an
/// out-of-range size.
Complex generate(const GeneratorSpec& spec);

/// Upper bound on the number of simplices a single spec may produce.
inline constexpr std::size_t max_generated_simplices = 2'000'000;

}  // namespace simplexcolor
