#pragma once

// Exact dense linear algebra over Q and F_p.

#include <optional>
#include <vector>

#include "cremona/scalar.hpp"

namespace cremona {

using Vector = std::vector<Scalar>;
using Matrix = std::vector<Vector>;

/// Basis of {x : A x = 0}. Over Q the elimination is fraction-free on an
/// integer copy of A; over F_p it is plain Gauss-Jordan. Pivots are taken in
/// column order, so the basis is deterministic: one vector per free column,
/// with a 1 in that column and 0 in the other free columns.
std::vector<Vector> nullspace(const Matrix& a, std::size_t ncols, const Field& field);

/// Unique solution of a square system, or nullopt if the matrix is singular.
std::optional<Vector> solve(Matrix a, Vector b);

Scalar determinant(Matrix a);

}  // namespace cremona
