#pragma once

#include <optional>

#include "matval/rational.hpp"

namespace matval {

/// Rank of a rational matrix (rows x cols), by Gaussian elimination.
int matrix_rank(const QMatrix& m);

/// Solves sum_k y_k * basis[k] = target for y (basis rows need not be square).
/// Returns nullopt when the system is inconsistent; the basis rows must be
/// linearly independent so the solution, if any, is unique.
std::optional<QVector> solve_in_span(const QMatrix& basis_rows, const QVector& target);

/// Basis (as rows) of the integer kernel {x in Z^cols : M x = 0}.
/// The result is a lattice basis of the saturated kernel.
ZMatrix integer_kernel(const ZMatrix& m, int cols);

/// Determinant of a square integer matrix (Bareiss, fraction-free).
Integer integer_det(ZMatrix m);

}  // namespace matval
