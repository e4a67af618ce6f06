#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "orbitforge/qmat.hpp"
#include "orbitforge/subspace.hpp"

namespace orbitforge {

/// gl_n and GL_n, with gl_n identified with Q^{n^2} by row-major flattening.
struct GroupContext {
  std::size_t n = 1;

  explicit GroupContext(std::size_t size);
  std::size_t dim() const { return n * n; }
  /// Index of the matrix unit E_ij in the flattening.
  std::size_t index(std::size_t i, std::size_t j) const { return i * n + j; }
  QVec flatten(const QMat& a) const;
  QMat unflatten(const QVec& v) const;
  Subspace full() const { return Subspace::full(dim()); }
  /// Elements of a Subspace as matrices.
  std::vector<QMat> matrices(const Subspace& s) const;
  Subspace span(const std::vector<QMat>& mats) const;
};

QMat bracket(const QMat& a, const QMat& b);
/// Matrix of x -> [a, x] on the flattened gl_n.
QMat ad_matrix(const QMat& a);
/// Matrix of x -> g x g^{-1} on the flattened gl_n.
QMat conjugation_matrix(const QMat& g);

bool is_nilpotent(const QMat& x);
bool is_unipotent(const QMat& u);
QMat nilpotent_exp(const QMat& x);
QMat nilpotent_log(const QMat& u);

/// {A in ambient : A g = g A}.
Subspace centralizer(const QMat& g, const Subspace& ambient);
std::size_t centralizer_dim(const QMat& g, const Subspace& ambient);

/// Image of a subspace under a linear map given by its matrix.
Subspace image(const QMat& map, const Subspace& s);
/// True iff [a, b] lies in target for all a in left, b in right.
bool bracket_closed(const Subspace& left, const Subspace& right, const Subspace& target,
                    const GroupContext& ctx);
/// {A in gl_n : [A, s] is contained in s}.
Subspace normalizer(const Subspace& s, const GroupContext& ctx);

}  // namespace orbitforge
