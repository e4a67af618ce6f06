#include "orbitforge/linalg.hpp"

#include <utility>

#include "orbitforge/error.hpp"

namespace orbitforge {

namespace {

struct Echelon {
  std::vector<std::vector<Int>> rows;  // integer rows, pivot-ordered, then zero rows
  std::vector<std::size_t> pivots;
  int sign = 1;
};

/// Scales every row to a primitive-free integer row, then runs Bareiss
/// elimination. Every division in the inner loop is exact.
Echelon bareiss(const QMat& m, std::vector<Int>* scales = nullptr) {
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  Echelon e;
  e.rows.assign(nr, std::vector<Int>(nc));
  if (scales) scales->assign(nr, Int(1));
  for (std::size_t i = 0; i < nr; ++i) {
    Int l = 1;
    for (std::size_t j = 0; j < nc; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < nc; ++j) e.rows[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    if (scales) (*scales)[i] = l;
  }
  Int prev = 1;
  std::size_t r = 0;
  Int t;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && e.rows[p][c] == 0) ++p;
    if (p == nr) continue;
    if (p != r) {
      std::swap(e.rows[p], e.rows[r]);
      e.sign = -e.sign;
    }
    const Int& piv = e.rows[r][c];
    for (std::size_t i = r + 1; i < nr; ++i) {
      if (e.rows[i][c] == 0) {
        // Column entry already zero: the Bareiss update reduces to scaling.
        for (std::size_t j = c + 1; j < nc; ++j) {
          if (e.rows[i][j] == 0) continue;
          t = piv * e.rows[i][j];
          mpz_divexact(e.rows[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        }
        continue;
      }
      const Int lead = e.rows[i][c];
      for (std::size_t j = c + 1; j < nc; ++j) {
        t = piv * e.rows[i][j] - lead * e.rows[r][j];
        mpz_divexact(e.rows[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      e.rows[i][c] = 0;
    }
    prev = piv;
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

}  // namespace

QMat rref(const QMat& m) {
  Echelon e = bareiss(m);
  const std::size_t nc = m.cols();
  const std::size_t r = e.pivots.size();
  QMat out(m.rows(), nc);
  for (std::size_t i = 0; i < r; ++i) {
    const Int& piv = e.rows[i][e.pivots[i]];
    for (std::size_t j = 0; j < nc; ++j) {
      if (e.rows[i][j] == 0) continue;
      Rat v(e.rows[i][j], piv);
      v.canonicalize();
      out(i, j) = std::move(v);
    }
  }
  Rat f;
  for (std::size_t i = r; i-- > 0;) {
    const std::size_t pc = e.pivots[i];
    for (std::size_t k = 0; k < i; ++k) {
      if (out(k, pc) == 0) continue;
      f = out(k, pc);
      for (std::size_t j = pc; j < nc; ++j)
        if (out(i, j) != 0) out(k, j) -= f * out(i, j);
    }
  }
  return out;
}

std::vector<std::size_t> pivot_columns(const QMat& m) { return bareiss(m).pivots; }

std::size_t rank(const QMat& m) { return bareiss(m).pivots.size(); }

Rat determinant(const QMat& m) {
  require(m.is_square(), "determinant of a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rat(1);
  std::vector<Int> scales;
  Echelon e = bareiss(m, &scales);
  if (e.pivots.size() < n) return Rat(0);
  Int denom = 1;
  for (const auto& s : scales) denom *= s;
  Rat d(e.rows[n - 1][n - 1] * e.sign, denom);
  d.canonicalize();
  return d;
}

std::optional<QMat> inverse(const QMat& m) {
  require(m.is_square(), "inverse of a square matrix");
  const std::size_t n = m.rows();
  QMat aug = m.hstack(QMat::identity(n));
  QMat r = rref(aug);
  for (std::size_t i = 0; i < n; ++i)
    if (r(i, i) != 1) return std::nullopt;
  return r.submatrix(0, n, n, n);
}

QMat inverse_or_throw(const QMat& m) {
  auto inv = inverse(m);
  if (!inv) fail_precondition("matrix is invertible");
  return *inv;
}

Subspace kernel_basis(const QMat& m) {
  const std::size_t nc = m.cols();
  QMat r = rref(m);
  std::vector<std::size_t> piv;
  std::vector<bool> is_pivot(nc, false);
  for (std::size_t i = 0; i < r.rows(); ++i) {
    std::size_t j = 0;
    while (j < nc && r(i, j) == 0) ++j;
    if (j == nc) break;
    piv.push_back(j);
    is_pivot[j] = true;
  }
  std::vector<QVec> vecs;
  for (std::size_t f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    QVec v(nc);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
    vecs.push_back(std::move(v));
  }
  return Subspace::span(vecs, nc);
}

std::optional<QVec> solve_linear(const QMat& m, const QVec& rhs) {
  require(rhs.size() == m.rows(), "rhs length equals row count");
  const std::size_t nc = m.cols();
  QMat aug(m.rows(), nc + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < nc; ++j) aug(i, j) = m(i, j);
    aug(i, nc) = rhs[i];
  }
  QMat r = rref(aug);
  QVec x(nc);
  for (std::size_t i = 0; i < r.rows(); ++i) {
    std::size_t j = 0;
    while (j <= nc && r(i, j) == 0) ++j;
    if (j > nc) break;
    if (j == nc) return std::nullopt;
    x[j] = r(i, nc);
  }
  return x;
}

}  // namespace orbitforge
