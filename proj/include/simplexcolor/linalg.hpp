#pragma once

// Small dense exact linear algebra over Rational. Sizes here are tiny
// (ambient dimension d, clouds of at most a few hundred points), so plain
// row-reduction is the right tool.

#include "simplexcolor/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace simplexcolor::linalg {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;  // row-major; every row has the same length

/// Sign of the determinant of a square matrix.
int determinant_sign(Matrix m);

/// Rank of a matrix with `cols` columns.
std::size_t rank(Matrix m, std::size_t cols);

/// Basis of { x : m x = 0 } for a matrix with `cols` columns. Basis vectors
/// are scaled to primitive integer vectors.
Matrix nullspace(Matrix m, std::size_t cols);

/// Finds y != 0 with rows[i] . y <= 0 for every row, or nothing if the cone
/// { y : rows y <= 0 } is {0}. Exact phase-one simplex with Bland's rule.
std::optional<Vector> nonzero_in_cone(const Matrix& rows, std::size_t dim);

/// Scales v by a positive rational so that it becomes a primitive integer vector.
void make_primitive(Vector& v);

Rational dot(const Vector& a, const Vector& b);

}  // namespace simplexcolor::linalg
