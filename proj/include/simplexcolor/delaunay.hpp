#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace simplexcolor::delaunay {

struct GridPoint {
    std::int64_t x;
    std::int64_t y;
};

/// Largest absolute coordinate for which the integer predicates stay exact.
inline constexpr std::int64_t max_coordinate = std::int64_t{1} << 24;

/// Sign of the orientation of (a, b, c); positive for counterclockwise.
int orient(const GridPoint& a, const GridPoint& b, const GridPoint& c);

/// Positive iff d lies strictly inside the circle through the
/// counterclockwise triangle (a, b, c).
int incircle(const GridPoint& a, const GridPoint& b, const GridPoint& c, const GridPoint& d);

/// Delaunay triangulation of distinct points with |coordinates| <=
/// max_coordinate, by incremental insertion with ghost triangles for the
/// hull. Triangles are counterclockwise index triples. Cocircular ties are
/// broken by insertion order. Throws InputError when the points are all
/// collinear, repeated, or out of range.
std::vector<std::array<std::uint32_t, 3>> triangulate(const std::vector<GridPoint>& points);

}  // namespace simplexcolor::delaunay
