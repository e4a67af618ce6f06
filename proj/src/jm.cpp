#include "orbitforge/jm.hpp"

#include "orbitforge/error.hpp"
#include "orbitforge/linalg.hpp"

namespace orbitforge {

bool satisfies_triple_relations(const LieTriple& t) {
  return bracket(t.H, t.X) == Rat(2) * t.X && bracket(t.H, t.Y) == Rat(-2) * t.Y &&
         bracket(t.X, t.Y) == t.H;
}

LieTriple jm_triple(const QMat& x, const std::vector<Subspace>& pieces, Rng* rng) {
  require(is_nilpotent(x), "jm_triple argument is nilpotent");
  const std::size_t n = x.rows();
  JordanBasis jb = jordan_basis(x, pieces, rng);
  QMat h_std(n, n), y_std(n, n), x_std(n, n);
  std::size_t off = 0;
  for (int k : jb.blocks) {
    for (int i = 0; i < k; ++i) {
      const auto r = off + static_cast<std::size_t>(i);
      h_std(r, r) = k - 1 - 2 * i;
      if (i > 0) {
        y_std(r, r - 1) = i * (k - i);
        x_std(r - 1, r) = 1;
      }
    }
    off += static_cast<std::size_t>(k);
  }
  const QMat& t = jb.change;
  const QMat tinv = inverse_or_throw(t);
  LieTriple triple{t * x_std * tinv, t * h_std * tinv, t * y_std * tinv};
  ensure(triple.X == x, "Jordan basis reproduces X");
  ensure(satisfies_triple_relations(triple), "constructed triple satisfies the sl2 relations");
  return triple;
}

Subspace GradedDecomp::level(int k) const {
  auto it = levels.find(k);
  return it == levels.end() ? Subspace(n * n) : it->second;
}

Subspace GradedDecomp::sum_of(const std::function<bool(int)>& pred) const {
  std::vector<QVec> rows;
  for (const auto& [k, s] : levels)
    if (pred(k))
      for (std::size_t i = 0; i < s.dim(); ++i) rows.push_back(s.vector(i));
  return Subspace::span(rows, n * n);
}

Eigenbasis diagonalize(const QMat& h) {
  const std::size_t n = h.rows();
  Eigenbasis eb;
  std::vector<QVec> cols;
  for (const auto& [lambda, mult] : eigenvalues(h)) {
    Subspace e = eigenspace(h, lambda);
    require(e.dim() == static_cast<std::size_t>(mult), "matrix is diagonalizable");
    for (std::size_t i = 0; i < e.dim(); ++i) {
      cols.push_back(e.vector(i));
      eb.values.push_back(lambda);
    }
  }
  eb.change = QMat::from_columns(cols, n);
  return eb;
}

GradedDecomp graded_decomposition(const QMat& h) {
  require(h.is_square(), "grading element is square");
  const std::size_t n = h.rows();
  GroupContext ctx(n);
  Eigenbasis eb = diagonalize(h);
  for (const auto& v : eb.values) require(v.get_den() == 1, "ad H has integer eigenvalues");
  const QMat tinv = inverse_or_throw(eb.change);
  std::map<int, std::vector<QVec>> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rat diff = eb.values[i] - eb.values[j];
      const int k = static_cast<int>(diff.get_num().get_si());
      QMat unit = QMat::from_columns({eb.change.column(i)}, n) *
                  QMat::from_rows({tinv.row(j)}, n);
      rows[k].push_back(ctx.flatten(unit));
    }
  GradedDecomp g;
  g.n = n;
  std::size_t total = 0;
  for (auto& [k, vs] : rows) {
    Subspace s = Subspace::span(vs, n * n);
    for (const auto& m : ctx.matrices(s))
      ensure(bracket(h, m) == Rat(k) * m, "level elements are ad H eigenvectors");
    total += s.dim();
    g.levels.emplace(k, std::move(s));
  }
  ensure(total == n * n, "graded levels span gl_n");
  return g;
}

ParabolicData canonical_parabolic(const LieTriple& t) {
  require(satisfies_triple_relations(t), "triple satisfies the sl2 relations");
  const std::size_t n = t.X.rows();
  GroupContext ctx(n);
  ParabolicData pd;
  pd.H = t.H;
  pd.grading = graded_decomposition(t.H);
  pd.q = pd.grading.sum_of([](int k) { return k >= 0; });
  pd.l = pd.grading.level(0);
  pd.u = pd.grading.sum_of([](int k) { return k >= 2; });
  pd.uprime = pd.grading.sum_of([](int k) { return k > 2; });
  ensure(bracket_closed(pd.q, pd.q, pd.q, ctx), "[q, q] in q");
  ensure(bracket_closed(pd.q, pd.u, pd.u, ctx), "[q, u] in u");
  ensure(bracket_closed(pd.q, pd.uprime, pd.uprime, ctx), "[q, u'] in u'");
  for (const auto& m : ctx.matrices(pd.u)) ensure(is_nilpotent(m), "u consists of nilpotents");
  return pd;
}

ElementParabolic canonical_parabolic_of_element(const QMat& g, Rng* rng) {
  ElementParabolic ep;
  ep.jc = mult_jc(g);
  const QMat x = nilpotent_log(ep.jc.nu);
  std::vector<Subspace> pieces;
  for (const auto& [lambda, mult] : eigenvalues(ep.jc.sigma)) {
    (void)mult;
    pieces.push_back(eigenspace(ep.jc.sigma, lambda));
  }
  ep.triple = jm_triple(x, pieces, rng);
  ensure(ep.triple.H * ep.jc.sigma == ep.jc.sigma * ep.triple.H, "H centralizes sigma");
  ensure(ep.triple.Y * ep.jc.sigma == ep.jc.sigma * ep.triple.Y, "Y centralizes sigma");
  ep.parabolic = canonical_parabolic(ep.triple);
  return ep;
}

}  // namespace orbitforge
