#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "orbitforge/qmat.hpp"

namespace orbitforge {

/// Linear subspace of Q^d, stored by the nonzero rows of its RREF basis.
/// The representation is canonical, so equality is entrywise equality.
class Subspace {
 public:
  Subspace() = default;
  /// Zero subspace of Q^ambient.
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace span(const QMat& rows);
  static Subspace span(const std::vector<QVec>& vectors, std::size_t ambient);
  static Subspace full(std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  const QMat& basis() const { return basis_; }
  QVec vector(std::size_t i) const { return basis_.row(i); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const QVec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the stored basis (its entries at the pivot columns),
  /// or nullopt when v is not in the subspace.
  std::optional<QVec> coordinates(const QVec& v) const;
  /// Coordinates of v without a membership check.
  QVec pivot_coordinates(const QVec& v) const;
  /// {w : <w, v> = 0 for all v in this subspace}.
  Subspace annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  QMat basis_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
/// Throws PreconditionError on an ambient dimension mismatch.
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

}  // namespace orbitforge
