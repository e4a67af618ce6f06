#include "orbitforge/lie.hpp"

#include "orbitforge/error.hpp"
#include "orbitforge/linalg.hpp"

namespace orbitforge {

GroupContext::GroupContext(std::size_t size) : n(size) { require(n >= 1, "matrix size n >= 1"); }

QVec GroupContext::flatten(const QMat& a) const {
  require(a.rows() == n && a.cols() == n, "matrix is n x n");
  return QVec(a.entries().begin(), a.entries().end());
}

QMat GroupContext::unflatten(const QVec& v) const {
  require(v.size() == n * n, "flattened vector has n^2 entries");
  return QMat(n, n, v);
}

std::vector<QMat> GroupContext::matrices(const Subspace& s) const {
  std::vector<QMat> out;
  out.reserve(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(unflatten(s.vector(i)));
  return out;
}

Subspace GroupContext::span(const std::vector<QMat>& mats) const {
  std::vector<QVec> rows;
  rows.reserve(mats.size());
  for (const auto& m : mats) rows.push_back(flatten(m));
  return Subspace::span(rows, dim());
}

QMat bracket(const QMat& a, const QMat& b) {
  require(a.is_square() && b.is_square() && a.rows() == b.rows(), "bracket of equal square sizes");
  return a * b - b * a;
}

QMat ad_matrix(const QMat& a) {
  require(a.is_square(), "ad of a square matrix");
  const std::size_t n = a.rows();
  QMat m(n * n, n * n);
  // (a x)_{ij} = sum_k a_ik x_kj ; (x a)_{ij} = sum_k x_ik a_kj
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (a(i, k) != 0) m(i * n + j, k * n + j) += a(i, k);
        if (a(k, j) != 0) m(i * n + j, i * n + k) -= a(k, j);
      }
  return m;
}

QMat conjugation_matrix(const QMat& g) {
  const std::size_t n = g.rows();
  QMat ginv = inverse_or_throw(g);
  QMat m(n * n, n * n);
  // (g x g^-1)_{ij} = sum_{k,l} g_ik x_kl ginv_lj
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (g(i, k) == 0) continue;
        for (std::size_t l = 0; l < n; ++l)
          if (ginv(l, j) != 0) m(i * n + j, k * n + l) += g(i, k) * ginv(l, j);
      }
  return m;
}

bool is_nilpotent(const QMat& x) {
  if (!x.is_square()) return false;
  return power(x, static_cast<unsigned>(x.rows())).is_zero();
}

bool is_unipotent(const QMat& u) {
  return u.is_square() && is_nilpotent(u - QMat::identity(u.rows()));
}

QMat nilpotent_exp(const QMat& x) {
  require(is_nilpotent(x), "exp argument is nilpotent");
  const std::size_t n = x.rows();
  QMat result = QMat::identity(n);
  QMat term = QMat::identity(n);
  for (std::size_t k = 1; k < n + 1; ++k) {
    term = term * x;
    if (term.is_zero()) break;
    term *= rat(1, static_cast<long>(k));
    result += term;
  }
  return result;
}

QMat nilpotent_log(const QMat& u) {
  require(is_unipotent(u), "log argument is unipotent");
  const std::size_t n = u.rows();
  const QMat y = u - QMat::identity(n);
  QMat result(n, n);
  QMat pw = QMat::identity(n);
  for (std::size_t k = 1; k < n + 1; ++k) {
    pw = pw * y;
    if (pw.is_zero()) break;
    const Rat c = rat(k % 2 == 1 ? 1 : -1, static_cast<long>(k));
    result += c * pw;
  }
  return result;
}

Subspace centralizer(const QMat& g, const Subspace& ambient) {
  const std::size_t n = g.rows();
  GroupContext ctx(n);
  require(ambient.ambient_dim() == n * n, "ambient subspace lives in gl_n");
  const std::size_t k = ambient.dim();
  if (k == 0) return Subspace(n * n);
  // Columns: flattened (B_i g - g B_i) for each basis element B_i.
  QMat sys(n * n, k);
  for (std::size_t i = 0; i < k; ++i) {
    QMat b = ctx.unflatten(ambient.vector(i));
    sys.set_column(i, ctx.flatten(b * g - g * b));
  }
  Subspace coeffs = kernel_basis(sys);
  if (coeffs.is_zero()) return Subspace(n * n);
  return Subspace::span(coeffs.basis() * ambient.basis());
}

std::size_t centralizer_dim(const QMat& g, const Subspace& ambient) {
  return centralizer(g, ambient).dim();
}

Subspace image(const QMat& map, const Subspace& s) {
  require(map.cols() == s.ambient_dim(), "map domain matches the subspace ambient");
  if (s.is_zero()) return Subspace(map.rows());
  return Subspace::span((map * s.basis().transpose()).transpose());
}

bool bracket_closed(const Subspace& left, const Subspace& right, const Subspace& target,
                    const GroupContext& ctx) {
  const auto lm = ctx.matrices(left);
  const auto rm = ctx.matrices(right);
  for (const auto& a : lm)
    for (const auto& b : rm)
      if (!target.contains(ctx.flatten(bracket(a, b)))) return false;
  return true;
}

Subspace normalizer(const Subspace& s, const GroupContext& ctx) {
  const std::size_t d = ctx.dim();
  Subspace ann = s.annihilator();
  if (ann.is_zero()) return ctx.full();
  // For each basis element b of s, the constraints ann . vec([A, b]) = 0 are
  // linear in A: vec([A, b]) = -ad(b) vec(A).
  QMat sys(0, d);
  for (const auto& b : ctx.matrices(s)) sys = sys.vstack(ann.basis() * ad_matrix(b));
  if (sys.rows() == 0) return ctx.full();
  return kernel_basis(sys);
}

}  // namespace orbitforge
