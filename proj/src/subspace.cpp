#include "orbitforge/subspace.hpp"

#include "orbitforge/error.hpp"
#include "orbitforge/linalg.hpp"

namespace orbitforge {

Subspace Subspace::span(const QMat& rows) {
  Subspace s;
  s.ambient_ = rows.cols();
  QMat r = rref(rows);
  std::size_t k = 0;
  while (k < r.rows()) {
    bool nonzero = false;
    for (std::size_t j = 0; j < r.cols(); ++j)
      if (r(k, j) != 0) {
        nonzero = true;
        s.pivots_.push_back(j);
        break;
      }
    if (!nonzero) break;
    ++k;
  }
  s.basis_ = r.submatrix(0, 0, k, r.cols());
  return s;
}

Subspace Subspace::span(const std::vector<QVec>& vectors, std::size_t ambient) {
  return span(QMat::from_rows(vectors, ambient));
}

Subspace Subspace::full(std::size_t ambient) { return span(QMat::identity(ambient)); }

QVec Subspace::pivot_coordinates(const QVec& v) const {
  QVec c(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

std::optional<QVec> Subspace::coordinates(const QVec& v) const {
  require(v.size() == ambient_, "vector length equals ambient dimension");
  QVec c = pivot_coordinates(v);
  QVec residual = v;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (basis_(i, j) != 0) residual[j] -= c[i] * basis_(i, j);
  }
  if (!orbitforge::is_zero(residual)) return std::nullopt;
  return c;
}

bool Subspace::contains(const QVec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  require(other.ambient_ == ambient_, "subspaces share the ambient dimension");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.vector(i))) return false;
  return true;
}

Subspace Subspace::annihilator() const {
  if (dim() == 0) return full(ambient_);
  return kernel_basis(basis_);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require(a.ambient_dim() == b.ambient_dim(), "subspace sum: ambient dimensions agree");
  return Subspace::span(a.basis().vstack(b.basis()));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  require(a.ambient_dim() == b.ambient_dim(), "subspace intersection: ambient dimensions agree");
  const std::size_t d = a.ambient_dim();
  if (a.is_zero() || b.is_zero()) return Subspace(d);
  Subspace ann = subspace_sum(a.annihilator(), b.annihilator());
  if (ann.is_zero()) return Subspace::full(d);
  return kernel_basis(ann.basis());
}

}  // namespace orbitforge
