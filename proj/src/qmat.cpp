#include "orbitforge/qmat.hpp"

#include <algorithm>
#include <ostream>

#include "orbitforge/error.hpp"

namespace orbitforge {

QMat::QMat(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  require(data_.size() == rows_ * cols_, "QMat entries length equals rows*cols");
}

QMat::QMat(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require(r.size() == cols_, "QMat rows have equal length");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

QMat QMat::identity(std::size_t n) {
  QMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMat QMat::unit(std::size_t n, std::size_t i, std::size_t j) {
  QMat m(n, n);
  m(i, j) = 1;
  return m;
}

QMat QMat::diagonal(const QVec& diag) {
  QMat m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

QMat QMat::from_rows(const std::vector<QVec>& rows, std::size_t cols) {
  QMat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

QMat QMat::from_columns(const std::vector<QVec>& cols, std::size_t rows) {
  QMat m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

QMat QMat::block_diagonal(const std::vector<QMat>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) {
    require(b.is_square(), "block_diagonal blocks are square");
    n += b.rows();
  }
  QMat m(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return m;
}

QVec QMat::row(std::size_t i) const {
  return QVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

QVec QMat::column(std::size_t j) const {
  QVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void QMat::set_row(std::size_t i, const QVec& v) {
  require(v.size() == cols_, "row length matches column count");
  std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
}

void QMat::set_column(std::size_t j, const QVec& v) {
  require(v.size() == rows_, "column length matches row count");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

QMat QMat::transpose() const {
  QMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMat QMat::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  require(r0 + nr <= rows_ && c0 + nc <= cols_, "submatrix within bounds");
  QMat s(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) s(i, j) = (*this)(r0 + i, c0 + j);
  return s;
}

QMat QMat::select_rows(const std::vector<std::size_t>& idx) const {
  QMat s(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) s.set_row(i, row(idx[i]));
  return s;
}

QMat QMat::vstack(const QMat& below) const {
  if (rows_ == 0) return below;
  if (below.rows_ == 0) return *this;
  require(cols_ == below.cols_, "vstack column counts agree");
  QMat s(rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), s.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(),
            s.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return s;
}

QMat QMat::hstack(const QMat& right) const {
  require(rows_ == right.rows_, "hstack row counts agree");
  QMat s(rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) s(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) s(i, cols_ + j) = right(i, j);
  }
  return s;
}

bool QMat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rat& x) { return x == 0; });
}

Rat QMat::trace() const {
  require(is_square(), "trace of a square matrix");
  Rat t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

QMat& QMat::operator+=(const QMat& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum shapes agree");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

QMat& QMat::operator-=(const QMat& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_, "matrix difference shapes agree");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

QMat& QMat::operator*=(const Rat& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

QMat operator+(QMat a, const QMat& b) { return a += b; }
QMat operator-(QMat a, const QMat& b) { return a -= b; }
QMat operator-(QMat a) { return a *= Rat(-1); }
QMat operator*(QMat a, const Rat& s) { return a *= s; }
QMat operator*(const Rat& s, QMat a) { return a *= s; }

QMat operator*(const QMat& a, const QMat& b) {
  require(a.cols() == b.rows(), "matrix product inner dimensions agree");
  QMat c(a.rows(), b.cols());
  Rat t;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j) == 0) continue;
        t = aik * b(k, j);
        c(i, j) += t;
      }
    }
  return c;
}

QVec operator*(const QMat& a, const QVec& v) {
  require(a.cols() == v.size(), "matrix-vector dimensions agree");
  QVec out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (a(i, k) != 0 && v[k] != 0) out[i] += a(i, k) * v[k];
  return out;
}

QMat power(const QMat& a, unsigned k) {
  require(a.is_square(), "matrix power of a square matrix");
  QMat result = QMat::identity(a.rows());
  QMat base = a;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const QMat& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

QVec operator+(QVec a, const QVec& b) {
  require(a.size() == b.size(), "vector sum lengths agree");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

QVec operator-(QVec a, const QVec& b) {
  require(a.size() == b.size(), "vector difference lengths agree");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

QVec operator*(const Rat& s, QVec v) {
  for (auto& x : v) x *= s;
  return v;
}

Rat dot(const QVec& a, const QVec& b) {
  require(a.size() == b.size(), "dot product lengths agree");
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

}  // namespace orbitforge
