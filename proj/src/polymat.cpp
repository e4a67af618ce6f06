#include "orbitforge/polymat.hpp"

#include <algorithm>
#include <utility>

#include "orbitforge/error.hpp"

namespace orbitforge {

PolyMat PolyMat::from_qmat(const QMat& m, std::size_t num_vars) {
  PolyMat p(m.rows(), m.cols(), num_vars);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) p(i, j) = MPoly::constant(num_vars, m(i, j));
  return p;
}

QMat PolyMat::evaluate(const QVec& point) const {
  QMat out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j).evaluate(point);
  return out;
}

PolyMat PolyMat::select_rows(const std::vector<std::size_t>& idx) const {
  PolyMat out(idx.size(), cols_, nvars_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(idx[i], j);
  return out;
}

PolyMat PolyMat::transpose() const {
  PolyMat out(cols_, rows_, nvars_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool PolyMat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const MPoly& p) { return p.is_zero(); });
}

PolyMat operator*(const PolyMat& a, const PolyMat& b) {
  require(a.cols() == b.rows(), "polynomial matrix product inner dimensions agree");
  require(a.num_vars() == b.num_vars(), "polynomial matrices share the variable count");
  PolyMat c(a.rows(), b.cols(), a.num_vars());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

PolyMat operator+(const PolyMat& a, const PolyMat& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "polynomial matrix shapes agree");
  PolyMat c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

PolyMat operator-(const PolyMat& a, const PolyMat& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "polynomial matrix shapes agree");
  PolyMat c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

PolyMat operator*(const Rat& s, const PolyMat& a) {
  PolyMat c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
  return c;
}

namespace {

MPoly cofactor_det(const PolyMat& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t nv = m.num_vars();
  if (cols.empty()) return MPoly::constant(nv, Rat(1));
  MPoly total(nv);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const MPoly& e = m(row, cols[k]);
    if (e.is_zero()) continue;
    std::size_t c = cols[k];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
    MPoly minor = cofactor_det(m, cols, row + 1);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
    if (minor.is_zero()) continue;
    if (k % 2 == 0)
      total += e * minor;
    else
      total -= e * minor;
  }
  return total;
}

MPoly bareiss_det(PolyMat a) {
  const std::size_t n = a.rows();
  const std::size_t nv = a.num_vars();
  MPoly prev = MPoly::constant(nv, Rat(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      // Prefer the pivot with the fewest terms to keep the growth small.
      std::size_t best = n;
      for (std::size_t p = k + 1; p < n; ++p)
        if (!a(p, k).is_zero() && (best == n || a(p, k).term_count() < a(best, k).term_count()))
          best = p;
      if (best == n) return MPoly(nv);
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(best, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MPoly t = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        auto q = divide_exact(t, prev);
        ensure(q.has_value(), "fraction-free determinant step divides exactly");
        a(i, j) = std::move(*q);
      }
      a(i, k) = MPoly(nv);
    }
    prev = a(k, k);
  }
  MPoly d = a(n - 1, n - 1);
  return negate ? -d : d;
}

}  // namespace

MPoly poly_det(const PolyMat& m) {
  require(m.rows() == m.cols(), "determinant of a square polynomial matrix");
  const std::size_t n = m.rows();
  if (n == 0) return MPoly::constant(m.num_vars(), Rat(1));
  if (n <= 4) {
    std::vector<std::size_t> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = j;
    return cofactor_det(m, cols, 0);
  }
  return bareiss_det(m);
}

}  // namespace orbitforge
