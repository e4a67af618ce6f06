#pragma once

#include <cstddef>
#include <vector>

#include "orbitforge/mpoly.hpp"
#include "orbitforge/qmat.hpp"

namespace orbitforge {

/// Dense matrix of polynomials in a common set of variables.
class PolyMat {
 public:
  PolyMat() = default;
  PolyMat(std::size_t rows, std::size_t cols, std::size_t num_vars)
      : rows_(rows), cols_(cols), nvars_(num_vars), data_(rows * cols, MPoly(num_vars)) {}
  /// Constant polynomial matrix.
  static PolyMat from_qmat(const QMat& m, std::size_t num_vars);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t num_vars() const { return nvars_; }
  MPoly& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const MPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  QMat evaluate(const QVec& point) const;
  PolyMat select_rows(const std::vector<std::size_t>& idx) const;
  PolyMat transpose() const;
  bool is_zero() const;

  friend bool operator==(const PolyMat& a, const PolyMat& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t nvars_ = 0;
  std::vector<MPoly> data_;
};

PolyMat operator*(const PolyMat& a, const PolyMat& b);
PolyMat operator+(const PolyMat& a, const PolyMat& b);
PolyMat operator-(const PolyMat& a, const PolyMat& b);
PolyMat operator*(const Rat& s, const PolyMat& a);

/// Exact determinant: cofactor expansion up to 4x4, fraction-free
/// elimination with exact polynomial division above.
MPoly poly_det(const PolyMat& m);

}  // namespace orbitforge
