#pragma once

#include "simplexcolor/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace simplexcolor {

/// { x : normal . x = offset }. The normal is never zero.
struct Hyperplane {
    std::vector<Rational> normal;
    Rational offset;

    bool operator==(const Hyperplane&) const = default;
};

/// Sign of det[p1 - p0, ..., pd - p0]; 0 iff the points are affinely dependent.
/// Requires exactly dim + 1 points of dimension dim.
int orientation(std::span<const Point> points, std::size_t dim);
int orientation(std::span<const Point* const> points, std::size_t dim);

/// Sign of normal . p - offset.
int side_of(const Hyperplane& h, const Point& p);

/// Hyperplane through d affinely independent points of R^d, or nothing if
/// they are dependent.
std::optional<Hyperplane> hyperplane_through(std::span<const Point* const> points);

/// Returns a hyperplane that contains every face vertex and has the whole
/// cloud on its closed non-positive side (side_of <= 0), or nothing when no
/// such hyperplane exists. Existence is equivalent to the face lying on the
/// boundary of conv(cloud). A cloud that is not full-dimensional has empty
/// interior, so every face is on its boundary.
///
/// Solved as an exact cone feasibility problem: restrict normals to the
/// orthogonal complement of the face, then look for a nonzero normal with
/// (u - face[0]) . n <= 0 for every cloud point u.
std::optional<Hyperplane> supporting_hyperplane(std::span<const Point> face,
                                                std::span<const Point> cloud);
std::optional<Hyperplane> supporting_hyperplane(std::span<const Point* const> face,
                                                std::span<const Point* const> cloud);

/// Index of the lexicographically smallest point, which is always a vertex of
/// the convex hull.
std::size_t extreme_point(std::span<const Point> cloud);
std::size_t extreme_point(std::span<const Point* const> cloud);

/// True iff the interiors of two full-dimensional simplices (given by their
/// d + 1 vertices each) intersect. Decided by searching for a weakly
/// separating hyperplane.
bool interiors_intersect(std::span<const Point* const> a, std::span<const Point* const> b);

}  // namespace simplexcolor
