#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "orbitforge/qmat.hpp"
#include "orbitforge/subspace.hpp"

namespace orbitforge {

/// Unique reduced row-echelon form, same shape as the input (zero rows last).
/// Forward elimination is fraction-free (Bareiss) on row-wise integer
/// scalings; only the final normalization divides.
QMat rref(const QMat& m);
/// Pivot columns of rref(m).
std::vector<std::size_t> pivot_columns(const QMat& m);
std::size_t rank(const QMat& m);
Rat determinant(const QMat& m);
std::optional<QMat> inverse(const QMat& m);
/// Throws PreconditionError when m is singular.
QMat inverse_or_throw(const QMat& m);

/// {v : m v = 0}, as a Subspace of Q^{cols}.
Subspace kernel_basis(const QMat& m);
/// Some solution of m x = rhs, or nullopt when the system is inconsistent.
std::optional<QVec> solve_linear(const QMat& m, const QVec& rhs);

}  // namespace orbitforge
