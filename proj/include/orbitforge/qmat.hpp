#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "orbitforge/rat.hpp"

namespace orbitforge {

/// Dense row-major matrix of exact rationals.
class QMat {
 public:
  QMat() = default;
  QMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  QMat(std::size_t rows, std::size_t cols, std::vector<Rat> entries);
  QMat(std::initializer_list<std::initializer_list<Rat>> rows);

  static QMat identity(std::size_t n);
  static QMat zeros(std::size_t rows, std::size_t cols) { return QMat(rows, cols); }
  /// Matrix unit E_ij (0-based) in gl_n.
  static QMat unit(std::size_t n, std::size_t i, std::size_t j);
  static QMat diagonal(const QVec& diag);
  static QMat from_rows(const std::vector<QVec>& rows, std::size_t cols);
  static QMat from_columns(const std::vector<QVec>& cols, std::size_t rows);
  static QMat block_diagonal(const std::vector<QMat>& blocks);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rat> entries() const { return data_; }
  QVec row(std::size_t i) const;
  QVec column(std::size_t j) const;
  void set_row(std::size_t i, const QVec& v);
  void set_column(std::size_t j, const QVec& v);

  QMat transpose() const;
  QMat submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  QMat select_rows(const std::vector<std::size_t>& idx) const;
  QMat vstack(const QMat& below) const;
  QMat hstack(const QMat& right) const;
  bool is_zero() const;
  Rat trace() const;

  QMat& operator+=(const QMat& o);
  QMat& operator-=(const QMat& o);
  QMat& operator*=(const Rat& s);

  friend bool operator==(const QMat& a, const QMat& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

QMat operator+(QMat a, const QMat& b);
QMat operator-(QMat a, const QMat& b);
QMat operator-(QMat a);
QMat operator*(const QMat& a, const QMat& b);
QMat operator*(QMat a, const Rat& s);
QMat operator*(const Rat& s, QMat a);
QVec operator*(const QMat& a, const QVec& v);

QMat power(const QMat& a, unsigned k);
std::ostream& operator<<(std::ostream& os, const QMat& m);

QVec operator+(QVec a, const QVec& b);
QVec operator-(QVec a, const QVec& b);
QVec operator*(const Rat& s, QVec v);
Rat dot(const QVec& a, const QVec& b);

}  // namespace orbitforge
