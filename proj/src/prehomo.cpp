#include "orbitforge/prehomo.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "orbitforge/error.hpp"
#include "orbitforge/lie.hpp"
#include "orbitforge/linalg.hpp"
#include "orbitforge/random.hpp"

namespace orbitforge {

namespace {

QMat generator_columns(const std::vector<QMat>& gens) {
  const std::size_t n = gens.front().rows();
  GroupContext ctx(n);
  std::vector<QVec> cols;
  for (const auto& g : gens) cols.push_back(ctx.flatten(g));
  return QMat::from_columns(cols, n * n);
}

/// Row i of the field matrix as a vector of polynomials.
std::vector<MPoly> field_row(const PolyMat& f, std::size_t i) {
  std::vector<MPoly> r;
  for (std::size_t j = 0; j < f.cols(); ++j) r.push_back(f(i, j));
  return r;
}

std::vector<MPoly> field_bracket(const std::vector<MPoly>& a, const std::vector<MPoly>& b) {
  const std::size_t d = a.size();
  std::vector<MPoly> r(d, MPoly(a.empty() ? 0 : a[0].num_vars()));
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t j = 0; j < d; ++j) {
      r[k] += a[j] * partial_derivative(b[k], j);
      r[k] -= b[j] * partial_derivative(a[k], j);
    }
  return r;
}

QVec random_point(std::size_t d, Rng& rng) {
  QVec v(d);
  for (auto& x : v) x = rng.nonzero_integer(20);
  return v;
}

std::vector<std::size_t> random_subset(std::size_t r, std::size_t d, Rng& rng) {
  std::vector<std::size_t> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t i = 0; i < d; ++i) {
    const auto j = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(i),
                                                        static_cast<std::int64_t>(r - 1)));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(d);
  std::sort(idx.begin(), idx.end());
  return idx;
}

/// C(r, d), saturating at cap.
std::size_t binomial_capped(std::size_t r, std::size_t d, std::size_t cap) {
  if (d > r) return 0;
  Int c = 1;
  for (std::size_t i = 0; i < d; ++i) {
    c = c * static_cast<unsigned long>(r - i) / static_cast<unsigned long>(i + 1);
    if (c > cap) return cap + 1;
  }
  return c.get_ui();
}

/// x / (1 - e^-x) = sum_k b_k x^k / k!, with b_1 = +1/2.
std::vector<Rat> bch_coefficients(std::size_t count) {
  std::vector<Rat> b(count);
  for (std::size_t m = 0; m < count; ++m) {
    if (m == 0) {
      b[0] = 1;
      continue;
    }
    // sum_{k<=m} C(m+1, k) B_k = 0
    Rat s;
    Int c = 1;
    for (std::size_t k = 0; k < m; ++k) {
      s += Rat(c) * b[k];
      c = c * static_cast<unsigned long>(m + 1 - k) / static_cast<unsigned long>(k + 1);
    }
    b[m] = -s / Rat(static_cast<long>(m + 1));
  }
  if (count > 1) b[1] = rat(1, 2);
  Rat fact = 1;
  for (std::size_t k = 0; k < count; ++k) {
    if (k) fact *= static_cast<long>(k);
    b[k] /= fact;
  }
  return b;
}

PolyMat poly_bracket(const PolyMat& a, const PolyMat& b) { return a * b - b * a; }

Rat trace_product(const QMat& a, const QMat& b) { return (a * b).trace(); }

}  // namespace

bool bracket_compatible(const AffineActionModel& m) {
  const auto& f = m.vector_fields;
  if (f.rows() != m.generators.size() || f.cols() != m.coord_dim) return false;
  if (m.generators.empty()) return true;
  if (f.num_vars() != m.coord_dim) return false;
  const std::size_t n = m.generators.front().rows();
  for (const auto& g : m.generators)
    if (g.rows() != n || g.cols() != n) return false;
  GroupContext ctx(n);
  const QMat cols = generator_columns(m.generators);
  if (rank(cols) != m.generators.size()) return false;
  const std::size_t r = m.generators.size();
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = a + 1; b < r; ++b) {
      const auto c = solve_linear(cols, ctx.flatten(bracket(m.generators[a], m.generators[b])));
      if (!c) return false;
      auto lhs = field_bracket(field_row(f, a), field_row(f, b));
      for (std::size_t k = 0; k < r; ++k) {
        if ((*c)[k] == 0) continue;
        for (std::size_t j = 0; j < m.coord_dim; ++j) lhs[j] += (*c)[k] * f(k, j);
      }
      for (const auto& p : lhs)
        if (!p.is_zero()) return false;
    }
  return true;
}

void assert_model(const AffineActionModel& m) {
  ensure(bracket_compatible(m), "vector fields are bracket-compatible with the generators");
}

AffineActionModel change_generator_basis(const AffineActionModel& m, const QMat& a) {
  const std::size_t r = m.generators.size();
  require(a.rows() == r && a.cols() == r, "generator change matrix is square of the right size");
  require(determinant(a) != 0, "generator change matrix is invertible");
  AffineActionModel out;
  out.coord_dim = m.coord_dim;
  out.vector_fields = PolyMat(r, m.coord_dim, m.vector_fields.num_vars());
  for (std::size_t i = 0; i < r; ++i) {
    QMat g(m.generators[i].rows(), m.generators[i].cols());
    for (std::size_t j = 0; j < r; ++j) {
      if (a(i, j) == 0) continue;
      g += a(i, j) * m.generators[j];
      for (std::size_t c = 0; c < m.coord_dim; ++c)
        out.vector_fields(i, c) += a(i, j) * m.vector_fields(j, c);
    }
    out.generators.push_back(std::move(g));
  }
  return out;
}

AffineActionModel change_coordinates(const AffineActionModel& m, const QMat& s) {
  const std::size_t d = m.coord_dim;
  require(s.rows() == d && s.cols() == d, "coordinate change is d x d");
  const QMat sinv = inverse_or_throw(s);
  std::vector<MPoly> images;
  for (std::size_t i = 0; i < d; ++i) {
    MPoly img(d);
    for (std::size_t j = 0; j < d; ++j)
      if (s(i, j) != 0) img += s(i, j) * MPoly::variable(d, j);
    images.push_back(std::move(img));
  }
  AffineActionModel out;
  out.coord_dim = d;
  out.generators = m.generators;
  const std::size_t r = m.generators.size();
  out.vector_fields = PolyMat(r, d, d);
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<MPoly> sub;
    for (std::size_t j = 0; j < d; ++j) sub.push_back(m.vector_fields(i, j).substitute(images));
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j)
        if (sinv(k, j) != 0) out.vector_fields(i, k) += sinv(k, j) * sub[j];
  }
  return out;
}

AffineActionModel point_model() { return AffineActionModel{0, {}, PolyMat(0, 0, 0)}; }

AffineActionModel torus_scaling_model() {
  AffineActionModel m;
  m.coord_dim = 1;
  m.generators = {QMat::diagonal({1, 0}), QMat::diagonal({0, 1})};
  m.vector_fields = PolyMat(2, 1, 1);
  m.vector_fields(0, 0) = MPoly::variable(1, 0);
  m.vector_fields(1, 0) = -MPoly::variable(1, 0);
  assert_model(m);
  return m;
}

AffineActionModel translation_model(std::size_t d) {
  AffineActionModel m;
  m.coord_dim = d;
  m.vector_fields = PolyMat(d, d, d);
  for (std::size_t i = 0; i < d; ++i) {
    m.generators.push_back(QMat::unit(d + 1, i, d));
    m.vector_fields(i, i) = MPoly::constant(d, 1);
  }
  assert_model(m);
  return m;
}

AffineActionModel zero_action_model(std::size_t d) {
  return AffineActionModel{d, {}, PolyMat(0, d, d)};
}

AffineActionModel graded_model(const LieTriple& t, int level) {
  const std::size_t n = t.H.rows();
  GroupContext ctx(n);
  const GradedDecomp g = graded_decomposition(t.H);
  const Subspace g0 = g.level(0);
  const Subspace gk = g.level(level);
  const auto basis = ctx.matrices(gk);
  const std::size_t d = gk.dim();
  AffineActionModel m;
  m.coord_dim = d;
  m.generators = ctx.matrices(g0);
  m.vector_fields = PolyMat(m.generators.size(), d, d);
  for (std::size_t z = 0; z < m.generators.size(); ++z)
    for (std::size_t i = 0; i < d; ++i) {
      const QVec c = gk.pivot_coordinates(ctx.flatten(bracket(m.generators[z], basis[i])));
      for (std::size_t j = 0; j < d; ++j)
        if (c[j] != 0) m.vector_fields(z, j) += c[j] * MPoly::variable(d, i);
    }
  assert_model(m);
  return m;
}

AffineActionModel regular_nilpotent_g2_model(std::size_t n) {
  require(n >= 1, "n >= 1");
  LieTriple t{QMat(n, n), QMat(n, n), QMat(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    t.H(i, i) = static_cast<long>(n) - 1 - 2 * static_cast<long>(i);
    if (i > 0) {
      t.X(i - 1, i) = 1;
      t.Y(i, i - 1) = static_cast<long>(i * (n - i));
    }
  }
  ensure(satisfies_triple_relations(t), "standard regular triple");
  return graded_model(t, 2);
}

OpenOrbitResult open_orbit_test(const AffineActionModel& m, std::size_t trials,
                                std::uint64_t seed) {
  if (m.coord_dim == 0) return {true, {}};
  if (m.generators.size() < m.coord_dim) return {false, {}};
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(seed, "open-orbit", t);
    QVec pt = random_point(m.coord_dim, rng);
    if (rank(m.vector_fields.evaluate(pt)) == m.coord_dim) return {true, pt};
  }
  return {false, {}};
}

MPoly singular_gcd(const AffineActionModel& m, std::uint64_t seed, const GcdOptions& opts) {
  const std::size_t d = m.coord_dim;
  if (d == 0) return MPoly::constant(0, 1);
  const OpenOrbitResult oo = open_orbit_test(m, opts.trials, seed);
  require(oo.found, "the vector-field matrix reaches full rank (open orbit found)");
  const std::size_t r = m.generators.size();
  const auto& f = m.vector_fields;

  MPoly g(d);
  auto absorb = [&](const std::vector<std::size_t>& rows) {
    const MPoly minor = poly_det(f.select_rows(rows));
    if (minor.is_zero()) return false;
    const MPoly next = g.is_zero() ? minor.monic() : mpoly_gcd(g, minor);
    const bool changed = !(next == g);
    g = next;
    return changed;
  };

  std::vector<std::size_t> witness = pivot_columns(f.evaluate(oo.witness).transpose());
  ensure(witness.size() == d, "witness rows have full rank");
  absorb(witness);
  if (g.is_constant()) return g;

  if (binomial_capped(r, d, opts.subset_budget) <= opts.subset_budget) {
    std::vector<std::size_t> idx(d);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      absorb(idx);
      if (g.is_constant()) return g;
      std::size_t i = d;
      while (i > 0 && idx[i - 1] == r - d + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    return g;
  }

  Rng rng(seed, "minor-subsets");
  for (std::size_t s = 0; s < opts.sampled_subsets; ++s) {
    absorb(random_subset(r, d, rng));
    if (g.is_constant()) return g;
  }
  // A sampled gcd can only over-report; demand a run of unchanged confirmations.
  std::size_t quiet = 0;
  while (quiet < opts.confirmations) {
    quiet = absorb(random_subset(r, d, rng)) ? 0 : quiet + 1;
    if (g.is_constant()) return g;
  }
  return g;
}

SpecialityReport is_special(const AffineActionModel& m, std::uint64_t seed,
                            const GcdOptions& opts) {
  SpecialityReport rep;
  const OpenOrbitResult oo = open_orbit_test(m, opts.trials, seed);
  rep.open_orbit_found = oo.found;
  rep.witness_point = oo.witness;
  if (!oo.found) {
    rep.singular_gcd = MPoly(m.coord_dim);
    return rep;
  }
  rep.singular_gcd = singular_gcd(m, seed, opts);
  rep.is_special = rep.singular_gcd.is_constant();
  return rep;
}

ConjugationModel build_conjugation_model(const QMat& gamma, const Subspace& p_basis,
                                         const Subspace& n_basis, const Subspace& nc_basis) {
  require(gamma.is_square(), "gamma is square");
  const std::size_t n = gamma.rows();
  GroupContext ctx(n);
  require(p_basis.ambient_dim() == n * n && n_basis.ambient_dim() == n * n &&
              nc_basis.ambient_dim() == n * n,
          "subspaces live in gl_n");
  require(n_basis.contains(nc_basis), "n^C is contained in n");
  require(p_basis.contains(n_basis), "n is contained in p");
  const QMat ginv = inverse_or_throw(gamma);
  const auto pm = ctx.matrices(p_basis);

  ConjugationModel cm;
  // Stabilizer: Z in p with gamma^-1 Z gamma - Z in n.
  const QMat ann = n_basis.annihilator().basis();
  QMat sys(ann.rows(), pm.size());
  for (std::size_t i = 0; i < pm.size(); ++i)
    sys.set_column(i, ann * ctx.flatten(ginv * pm[i] * gamma - pm[i]));
  const Subspace coeffs = kernel_basis(sys);
  std::vector<QVec> stab;
  for (std::size_t k = 0; k < coeffs.dim(); ++k) {
    const QVec c = coeffs.vector(k);
    QVec v(n * n);
    for (std::size_t i = 0; i < pm.size(); ++i)
      if (c[i] != 0) v = v + c[i] * p_basis.vector(i);
    stab.push_back(std::move(v));
  }
  cm.stabilizer = Subspace::span(stab, n * n);

  Subspace acc = nc_basis;
  for (std::size_t i = 0; i < n_basis.dim(); ++i) {
    const QVec v = n_basis.vector(i);
    if (acc.contains(v)) continue;
    cm.complement.push_back(v);
    acc = subspace_sum(acc, Subspace::span({v}, n * n));
  }
  const std::size_t d = cm.complement.size();
  ensure(d + nc_basis.dim() == n_basis.dim(), "complement of n^C has the right dimension");

  // coords: v = sum y_a c_a + (element of n^C)  ->  y.
  std::vector<QVec> stacked = cm.complement;
  for (std::size_t i = 0; i < nc_basis.dim(); ++i) stacked.push_back(nc_basis.vector(i));
  cm.coords = QMat(d, n * n);
  if (!stacked.empty()) {
    const QMat s = QMat::from_rows(stacked, n * n);
    const auto piv = pivot_columns(s);
    QMat sj(s.rows(), piv.size());
    for (std::size_t r = 0; r < s.rows(); ++r)
      for (std::size_t t = 0; t < piv.size(); ++t) sj(r, t) = s(r, piv[t]);
    const QMat sinv = inverse_or_throw(sj);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t t = 0; t < piv.size(); ++t) cm.coords(a, piv[t]) = sinv(t, a);
  }

  PolyMat xi(n, n, d);
  for (std::size_t a = 0; a < d; ++a) {
    const QMat c = ctx.unflatten(cm.complement[a]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (c(i, j) != 0) xi(i, j) += c(i, j) * MPoly::variable(d, a);
  }
  const auto coeff = bch_coefficients(2 * n * n + 2);

  const auto gens = ctx.matrices(cm.stabilizer);
  cm.model.coord_dim = d;
  cm.model.generators = gens;
  cm.model.vector_fields = PolyMat(gens.size(), d, d);
  for (std::size_t z = 0; z < gens.size(); ++z) {
    // d/dt log(exp(tA) exp(xi) exp(-tZ)) = f(ad xi)(e^{-ad xi} A - Z), A = gamma^-1 Z gamma.
    PolyMat term = PolyMat::from_qmat(ginv * gens[z] * gamma, d);
    PolyMat w = term;
    for (std::size_t k = 1; !term.is_zero(); ++k) {
      term = rat(-1, static_cast<long>(k)) * poly_bracket(xi, term);
      w = w + term;
    }
    w = w - PolyMat::from_qmat(gens[z], d);
    PolyMat eta = w;
    term = w;
    for (std::size_t k = 1; ; ++k) {
      term = poly_bracket(xi, term);
      if (term.is_zero()) break;
      ensure(k < coeff.size(), "ad xi is nilpotent");
      if (coeff[k] != 0) eta = eta + coeff[k] * term;
    }
    for (std::size_t a = 0; a < d; ++a) {
      MPoly comp(d);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const Rat& l = cm.coords(a, i * n + j);
          if (l != 0) comp += l * eta(i, j);
        }
      cm.model.vector_fields(z, a) = std::move(comp);
    }
  }
  assert_model(cm.model);
  return cm;
}

MPoly dk_invariant_p(const LieTriple& t) {
  const std::size_t n = t.H.rows();
  GroupContext ctx(n);
  const GradedDecomp g = graded_decomposition(t.H);
  const Subspace g2 = g.level(2);
  const Subspace gm2 = g.level(-2);
  require(g2.dim() == gm2.dim(), "dim g_2 = dim g_-2");
  const std::size_t d = g2.dim();
  if (d == 0) return MPoly::constant(0, 1);
  const auto b = ctx.matrices(g2);
  const auto c = ctx.matrices(gm2);
  PolyMat m(d, d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t bb = 0; bb < d; ++bb) {
        const QVec coords = g2.pivot_coordinates(ctx.flatten(bracket(b[a], bracket(b[bb], c[j]))));
        Monomial mono(d, 0);
        ++mono[a];
        ++mono[bb];
        for (std::size_t i = 0; i < d; ++i)
          if (coords[i] != 0) m(i, j).add_term(mono, coords[i]);
      }
  return poly_det(m);
}

QMat random_levi_element(const LieTriple& t, Rng& rng) {
  const std::size_t n = t.H.rows();
  const Eigenbasis eb = diagonalize(t.H);
  QMat d(n, n), u = QMat::identity(n), lw = QMat::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    d(i, i) = rng.nonzero_integer(5);
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || eb.values[i] != eb.values[j]) continue;
      if (i < j)
        u(i, j) = rng.integer(3);
      else
        lw(i, j) = rng.integer(3);
    }
  }
  const QMat l = eb.change * d * u * lw * inverse_or_throw(eb.change);
  ensure(l * t.H == t.H * l, "Levi element commutes with H");
  return l;
}

CharacterLawReport character_law_check(const LieTriple& t, std::size_t trials,
                                       std::uint64_t seed) {
  const std::size_t n = t.H.rows();
  GroupContext ctx(n);
  const Subspace g2 = graded_decomposition(t.H).level(2);
  const std::size_t d = g2.dim();
  const auto basis = ctx.matrices(g2);
  const MPoly p = dk_invariant_p(t);
  CharacterLawReport rep;
  for (std::size_t s = 0; s < trials; ++s) {
    Rng rng(seed, "character-law", s);
    const QMat l = random_levi_element(t, rng);
    const QMat linv = inverse_or_throw(l);
    QMat ad(d, d);
    for (std::size_t i = 0; i < d; ++i)
      ad.set_column(i, g2.pivot_coordinates(ctx.flatten(l * basis[i] * linv)));
    const Rat det = determinant(ad);
    QMat xr(n, n);
    for (std::size_t i = 0; i < d; ++i) xr += rng.integer(10) * basis[i];
    bool ok = true;
    for (const QMat& x : {t.X, xr}) {
      const QVec before = g2.pivot_coordinates(ctx.flatten(x));
      const QVec after = g2.pivot_coordinates(ctx.flatten(l * x * linv));
      ok = ok && p.evaluate(after) == det * det * p.evaluate(before);
    }
    ++rep.trials;
    if (ok) ++rep.holds;
  }
  rep.passed = rep.holds == rep.trials;
  return rep;
}

RegularityReport regularity_check(const LieTriple& t, std::size_t trials, std::uint64_t seed) {
  const std::size_t n = t.H.rows();
  GroupContext ctx(n);
  const GradedDecomp g = graded_decomposition(t.H);
  const Subspace g2 = g.level(2);
  const Subspace gm2 = g.level(-2);
  const std::size_t d = g2.dim();
  RegularityReport rep;
  rep.d = d;
  if (d == 0) {
    rep.p_nonzero_at_x = rep.hessian_full_rank = rep.infinitesimal_character = true;
    rep.phi_generic = rep.phi_proportional_to_y = rep.passed = true;
    rep.proportionality = Rat(1);
    return rep;
  }
  const MPoly p = dk_invariant_p(t);
  ensure(!p.is_zero(), "p is not identically zero");
  std::vector<MPoly> grad;
  for (std::size_t i = 0; i < d; ++i) grad.push_back(partial_derivative(p, i));
  std::vector<std::vector<MPoly>> hess(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) hess[i].push_back(partial_derivative(grad[i], j));

  const QVec x0 = g2.pivot_coordinates(ctx.flatten(t.X));
  const Rat px = p.evaluate(x0);
  rep.p_nonzero_at_x = px != 0;

  // (a) Jacobian of phi = grad log p, up to the factor p^2.
  for (std::size_t s = 0; s < std::max<std::size_t>(trials, 3) && !rep.hessian_full_rank; ++s) {
    Rng rng(seed, "hessian", s);
    const QVec pt = random_point(d, rng);
    const Rat pv = p.evaluate(pt);
    ++rep.hessian_points_tried;
    if (pv == 0) continue;
    QVec gv(d);
    for (std::size_t i = 0; i < d; ++i) gv[i] = grad[i].evaluate(pt);
    QMat h(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) h(i, j) = pv * hess[i][j].evaluate(pt) - gv[i] * gv[j];
    rep.hessian_full_rank = rank(h) == d;
  }

  // (b) phi(X) transported to g_-2 by the trace form.
  if (rep.p_nonzero_at_x) {
    const auto b = ctx.matrices(g2);
    const auto c = ctx.matrices(gm2);
    QVec phi(d);
    for (std::size_t i = 0; i < d; ++i) phi[i] = grad[i].evaluate(x0) / px;
    QMat pair(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) pair(i, j) = trace_product(c[j], b[i]);
    const auto w = solve_linear(pair, phi);
    ensure(w.has_value() && rank(pair) == d, "trace form pairs g_2 with g_-2");
    QMat big_phi(n, n);
    for (std::size_t j = 0; j < d; ++j) big_phi += (*w)[j] * c[j];

    rep.infinitesimal_character = true;
    for (const auto& z : ctx.matrices(g.level(0))) {
      QMat adz(d, d);
      for (std::size_t i = 0; i < d; ++i)
        adz.set_column(i, g2.pivot_coordinates(ctx.flatten(bracket(z, b[i]))));
      if (trace_product(big_phi, bracket(z, t.X)) != Rat(2) * adz.trace())
        rep.infinitesimal_character = false;
    }
    QMat sq(d, d);
    for (std::size_t i = 0; i < d; ++i)
      sq.set_column(i, gm2.pivot_coordinates(ctx.flatten(bracket(big_phi, bracket(big_phi, b[i])))));
    rep.phi_generic = determinant(sq) != 0;

    // W in g_-2 with [X, W] = H; the sl2 relations make it unique.
    QMat wsys(n * n, d);
    for (std::size_t j = 0; j < d; ++j) wsys.set_column(j, ctx.flatten(bracket(t.X, c[j])));
    const auto wc = solve_linear(wsys, ctx.flatten(t.H));
    ensure(wc.has_value() && rank(wsys) == d, "[X, W] = H has a unique solution in g_-2");
    QMat wm(n, n);
    for (std::size_t j = 0; j < d; ++j) wm += (*wc)[j] * c[j];
    for (std::size_t k = 0; k < n * n; ++k) {
      const Rat& wv = wm.entries()[k];
      if (wv == 0) continue;
      const Rat ratio = big_phi.entries()[k] / wv;
      if (big_phi == ratio * wm) {
        rep.phi_proportional_to_y = true;
        rep.proportionality = ratio;
      }
      break;
    }
  }
  rep.passed = rep.p_nonzero_at_x && rep.hessian_full_rank && rep.infinitesimal_character &&
               rep.phi_generic;
  return rep;
}

FibrationReport fibration_report(const AffineActionModel& total, const Subspace& invariant_sub,
                                 std::size_t trials, std::uint64_t seed, const GcdOptions& opts) {
  const std::size_t d = total.coord_dim;
  require(invariant_sub.ambient_dim() == d, "fibre subspace lives in the model's coordinates");
  const std::size_t k = invariant_sub.dim();
  const std::size_t q = d - k;
  FibrationReport rep;
  rep.quotient_dim = q;
  rep.fiber_dim = k;

  // x = S (u, w): u are quotient coordinates, w run along the fibre.
  std::vector<QVec> cols;
  Subspace acc = invariant_sub;
  for (std::size_t i = 0; i < d; ++i) {
    QVec e(d);
    e[i] = 1;
    if (acc.contains(e)) continue;
    cols.push_back(e);
    acc = subspace_sum(acc, Subspace::span({e}, d));
  }
  for (std::size_t i = 0; i < k; ++i) cols.push_back(invariant_sub.vector(i));
  const AffineActionModel m =
      d == 0 ? total : change_coordinates(total, QMat::from_columns(cols, d));
  const std::size_t r = m.generators.size();

  rep.equivariant = true;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < q; ++c)
      for (std::size_t v = q; v < d; ++v)
        if (m.vector_fields(i, c).involves(v)) rep.equivariant = false;
  if (!rep.equivariant)
    fail_precondition("fibre subspace is preserved by the action (linear quotient exists)");

  std::vector<MPoly> to_u;
  for (std::size_t v = 0; v < d; ++v)
    to_u.push_back(v < q ? MPoly::variable(q, v) : MPoly(q));
  AffineActionModel quot{q, m.generators, PolyMat(r, q, q)};
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < q; ++c) quot.vector_fields(i, c) = m.vector_fields(i, c).substitute(to_u);
  assert_model(quot);

  const OpenOrbitResult oq = open_orbit_test(quot, trials, stream_key(seed, "quotient", 0));
  if (oq.found) {
    rep.eta = oq.witness;
  } else {
    Rng rng(seed, "fibre-point");
    rep.eta = random_point(q, rng);
  }

  // Stabilizer of eta acts on the fibre over eta.
  const QMat at_eta = quot.vector_fields.evaluate(rep.eta);
  const Subspace stab = q == 0 ? Subspace::full(r) : kernel_basis(at_eta.transpose());
  std::vector<MPoly> to_w;
  for (std::size_t v = 0; v < d; ++v)
    to_w.push_back(v < q ? MPoly::constant(k, rep.eta[v]) : MPoly::variable(k, v - q));
  AffineActionModel fib{k, {}, PolyMat(stab.dim(), k, k)};
  for (std::size_t s = 0; s < stab.dim(); ++s) {
    const QVec c = stab.vector(s);
    QMat gmat(m.generators.front().rows(), m.generators.front().cols());
    for (std::size_t i = 0; i < r; ++i) {
      if (c[i] == 0) continue;
      gmat += c[i] * m.generators[i];
      for (std::size_t w = 0; w < k; ++w)
        fib.vector_fields(s, w) += c[i] * m.vector_fields(i, q + w).substitute(to_w);
    }
    fib.generators.push_back(std::move(gmat));
  }
  assert_model(fib);

  const SpecialityReport st = is_special(total, stream_key(seed, "total", 0), opts);
  const SpecialityReport sq = is_special(quot, stream_key(seed, "quotient", 0), opts);
  const SpecialityReport sf = is_special(fib, stream_key(seed, "fibre", 0), opts);
  rep.total_prehomogeneous = st.open_orbit_found;
  rep.quotient_prehomogeneous = sq.open_orbit_found;
  rep.fiber_prehomogeneous = sf.open_orbit_found;
  rep.total_special = st.is_special;
  rep.quotient_special = sq.is_special;
  rep.fiber_special = sf.is_special;
  rep.total_gcd = st.singular_gcd;
  rep.quotient_gcd = sq.singular_gcd;
  rep.fiber_gcd = sf.singular_gcd;
  rep.prehomogeneity_equivalence =
      rep.total_prehomogeneous == (rep.quotient_prehomogeneous && rep.fiber_prehomogeneous);
  rep.speciality_equivalence = rep.total_special == (rep.quotient_special && rep.fiber_special);
  rep.passed = rep.prehomogeneity_equivalence && rep.speciality_equivalence;
  return rep;
}

std::string to_string(const QVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << to_string(v[i]);
  os << ')';
  return os.str();
}

}  // namespace orbitforge
