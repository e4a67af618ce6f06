#include <gtest/gtest.h>

#include <cmath>

#include "orbitforge/error.hpp"
#include "orbitforge/jm.hpp"
#include "orbitforge/lie.hpp"
#include "orbitforge/linalg.hpp"
#include "orbitforge/orbits.hpp"
#include "orbitforge/prehomo.hpp"
#include "orbitforge/verify.hpp"

using namespace orbitforge;

namespace {

LieTriple standard_triple(const Partition& p) {
  return jm_triple(class_representative(unipotent_label(p)) - QMat::identity(p.size()));
}

MPoly var(std::size_t nv, std::size_t i) { return MPoly::variable(nv, i); }

using DMat = std::vector<std::vector<double>>;

DMat to_double(const QMat& m) {
  DMat d(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m(i, j).get_d();
  return d;
}

DMat mul(const DMat& a, const DMat& b) {
  DMat c(a.size(), std::vector<double>(b[0].size(), 0.0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

DMat add(DMat a, const DMat& b, double s) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] += s * b[i][j];
  return a;
}

DMat eye(std::size_t n) {
  DMat d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 1;
  return d;
}

DMat expm(const DMat& a) {
  DMat out = eye(a.size()), term = eye(a.size());
  for (int k = 1; k < 40; ++k) {
    term = mul(term, a);
    for (auto& row : term)
      for (auto& x : row) x /= k;
    out = add(out, term, 1.0);
  }
  return out;
}

// Logarithm of a unipotent matrix by the finite series.
DMat logm_unipotent(const DMat& u) {
  const std::size_t n = u.size();
  const DMat x = add(u, eye(n), -1.0);
  DMat out(n, std::vector<double>(n, 0.0)), pw = eye(n);
  for (std::size_t k = 1; k <= n; ++k) {
    pw = mul(pw, x);
    out = add(out, pw, (k % 2 ? 1.0 : -1.0) / static_cast<double>(k));
  }
  return out;
}

}  // namespace

TEST(Models, CatalogAreBracketCompatible) {
  for (const auto& m : {point_model(), torus_scaling_model(), translation_model(3), zero_action_model(2),
                        regular_nilpotent_g2_model(4), graded_model(standard_triple(Partition({3, 1})))})
    EXPECT_TRUE(bracket_compatible(m));
}

TEST(Models, BrokenFieldsAreRejected) {
  AffineActionModel m = torus_scaling_model();
  m.vector_fields(0, 0) = m.vector_fields(0, 0) * m.vector_fields(0, 0);
  EXPECT_FALSE(bracket_compatible(m));
  EXPECT_THROW(assert_model(m), InvariantViolation);
}

TEST(Models, BasisChangesKeepCompatibility) {
  const AffineActionModel m = graded_model(standard_triple(Partition({2, 2})));
  Rng rng(1, "basis-change");
  const QMat a = random_invertible(m.generators.size(), 2, rng);
  const QMat s = random_invertible(m.coord_dim, 2, rng);
  EXPECT_TRUE(bracket_compatible(change_generator_basis(m, a)));
  EXPECT_TRUE(bracket_compatible(change_coordinates(m, s)));
}

TEST(OpenOrbit, Examples) {
  EXPECT_TRUE(open_orbit_test(point_model(), 5, 1).found);
  EXPECT_TRUE(open_orbit_test(torus_scaling_model(), 5, 1).found);
  EXPECT_FALSE(open_orbit_test(zero_action_model(1), 5, 1).found);
  EXPECT_TRUE(open_orbit_test(translation_model(2), 5, 1).found);
}

TEST(Speciality, Catalog) {
  const SpecialityReport pt = is_special(point_model(), 1);
  EXPECT_TRUE(pt.is_special);
  const SpecialityReport torus = is_special(torus_scaling_model(), 1);
  EXPECT_FALSE(torus.is_special);
  EXPECT_EQ(torus.singular_gcd, var(1, 0));
  const SpecialityReport tr = is_special(translation_model(2), 1);
  EXPECT_TRUE(tr.is_special);
  EXPECT_EQ(singular_gcd(translation_model(1), 1), MPoly::constant(1, Rat(1)));
  for (std::size_t n = 2; n <= 5; ++n) {
    const SpecialityReport r = is_special(regular_nilpotent_g2_model(n), 3);
    MPoly expected = MPoly::constant(n - 1, Rat(1));
    for (std::size_t i = 0; i + 1 < n; ++i) expected = expected * var(n - 1, i);
    EXPECT_FALSE(r.is_special);
    EXPECT_EQ(r.singular_gcd, expected);
  }
}

TEST(Speciality, InvariantUnderCoordinateChange) {
  const AffineActionModel m = regular_nilpotent_g2_model(3);
  const QMat s{{1, 1}, {0, 1}};
  const SpecialityReport r = is_special(change_coordinates(m, s), 2);
  EXPECT_FALSE(r.is_special);
  const MPoly z0 = var(2, 0), z1 = var(2, 1);
  EXPECT_EQ(r.singular_gcd, ((z0 + z1) * z1).monic());
}

TEST(RelativeInvariant, Examples) {
  const MPoly t = var(1, 0);
  EXPECT_EQ(dk_invariant_p(standard_triple(Partition({2}))), Rat(-2) * t * t);
  EXPECT_EQ(dk_invariant_p(standard_triple(Partition({1, 1}))), MPoly::constant(0, Rat(1)));
  const MPoly p3 = dk_invariant_p(standard_triple(Partition({3})));
  EXPECT_EQ(p3.total_degree(), 4u);
  EXPECT_EQ(p3, Rat(3) * pow(var(2, 0), 2) * pow(var(2, 1), 2));
}

TEST(RelativeInvariant, ReferenceValues) {
  auto x = [](std::size_t i, std::size_t nv) { return var(nv, i); };
  EXPECT_EQ(dk_invariant_p(standard_triple(Partition({4}))),
            Rat(-4) * pow(x(0, 3) * x(1, 3) * x(2, 3), 2));
  EXPECT_EQ(dk_invariant_p(standard_triple(Partition({3, 1}))),
            Rat(-3) * pow(x(0, 4) * x(2, 4) + x(1, 4) * x(3, 4), 4));
  EXPECT_EQ(dk_invariant_p(standard_triple(Partition({2, 2}))),
            Rat(16) * pow(x(0, 4) * x(3, 4) - x(1, 4) * x(2, 4), 4));
  EXPECT_EQ(dk_invariant_p(standard_triple(Partition({5}))),
            Rat(5) * pow(x(0, 4) * x(1, 4) * x(2, 4) * x(3, 4), 2));
  EXPECT_EQ(dk_invariant_p(standard_triple(Partition({3, 2}))),
            Rat(-6) * pow(x(0, 3) * x(1, 3) * x(2, 3), 2));
}

TEST(RelativeInvariant, CharacterLawAndRegularity) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& p : partitions_of(n)) {
      const LieTriple t = standard_triple(p);
      EXPECT_TRUE(character_law_check(t, 10, 5).passed) << to_string(p);
      const RegularityReport r = regularity_check(t, 20, 5);
      EXPECT_TRUE(r.passed) << to_string(p);
      EXPECT_TRUE(r.p_nonzero_at_x);
    }
  const RegularityReport one = regularity_check(standard_triple(Partition({2})), 20, 1);
  EXPECT_TRUE(one.phi_proportional_to_y);
  const RegularityReport four = regularity_check(standard_triple(Partition({4})), 20, 1);
  EXPECT_TRUE(four.passed);
  EXPECT_FALSE(four.phi_proportional_to_y);
}

TEST(ConjugationModel, Examples) {
  const LeviSpec b({1, 1});
  const ConjugationModel pt = build_conjugation_model(QMat{{1, 1}, {0, 1}}, b.p(), b.nrad(), b.nrad());
  EXPECT_EQ(pt.model.coord_dim, 0u);

  const QMat g = QMat::diagonal({Rat(1), Rat(2)});
  const ConjugationModel line = build_conjugation_model(g, b.p(), b.nrad(), Subspace(4));
  EXPECT_EQ(line.model.coord_dim, 1u);
  const GroupContext ctx(2);
  EXPECT_TRUE(line.stabilizer.contains(ctx.flatten(QMat::diagonal({Rat(1), Rat(0)}))));
  EXPECT_TRUE(line.stabilizer.contains(ctx.flatten(QMat::diagonal({Rat(0), Rat(1)}))));
  for (std::size_t z = 0; z < line.model.generators.size(); ++z)
    EXPECT_LE(line.model.vector_fields(z, 0).total_degree(), 1u);

  const LeviSpec g3({3});
  EXPECT_EQ(build_conjugation_model(QMat::identity(3), g3.p(), g3.nrad(), g3.nrad()).model.coord_dim, 0u);
}

// The fields against a numerical derivative of the conjugation action.
TEST(ConjugationModel, FieldsMatchFiniteDifferences) {
  for (const auto& comp : std::vector<std::vector<int>>{{1, 1, 1}, {2, 1}, {1, 2, 1}}) {
    const LeviSpec levi(comp);
    const std::size_t n = levi.n();
    Rng rng(9, "finite-difference " + to_string(levi));
    const QMat gamma = sample_inflation(levi, m_representative(levi, trivial_class(levi)), 3, rng);
    const ConjugationModel cm = build_conjugation_model(gamma, levi.p(), levi.nrad(), Subspace(n * n));
    const std::size_t d = cm.model.coord_dim;
    ASSERT_EQ(d, levi.nrad().dim());
    QVec y(d);
    for (auto& v : y) v = rng.rational(2);
    DMat xi(n, std::vector<double>(n, 0.0));
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t k = 0; k < n * n; ++k) xi[k / n][k % n] += y[a].get_d() * cm.complement[a][k].get_d();
    const DMat exi = expm(xi);
    const DMat gd = to_double(gamma), gi = to_double(inverse_or_throw(gamma));
    const DMat coords = to_double(cm.coords);
    for (std::size_t z = 0; z < cm.model.generators.size(); ++z) {
      const DMat zd = to_double(cm.model.generators[z]);
      const DMat ad = mul(mul(gi, zd), gd);
      auto curve = [&](double h) {
        DMat u = mul(mul(expm(add(DMat(n, std::vector<double>(n, 0.0)), ad, h)), exi),
                     expm(add(DMat(n, std::vector<double>(n, 0.0)), zd, -h)));
        const DMat l = logm_unipotent(u);
        std::vector<double> c(d, 0.0);
        for (std::size_t a = 0; a < d; ++a)
          for (std::size_t k = 0; k < n * n; ++k) c[a] += coords[a][k] * l[k / n][k % n];
        return c;
      };
      const double h = 1e-5;
      const auto plus = curve(h), minus = curve(-h);
      for (std::size_t a = 0; a < d; ++a) {
        const double numeric = (plus[a] - minus[a]) / (2 * h);
        const double exact = cm.model.vector_fields(z, a).evaluate(y).get_d();
        EXPECT_NEAR(numeric, exact, 1e-5 * (1 + std::abs(exact))) << to_string(levi) << " z=" << z << " a=" << a;
      }
    }
  }
}

TEST(Fibration, TrivialSubspaces) {
  const AffineActionModel m = translation_model(2);
  const FibrationReport none = fibration_report(m, Subspace(2), 10, 1);
  EXPECT_EQ(none.fiber_dim, 0u);
  EXPECT_TRUE(none.passed);
  EXPECT_EQ(none.total_special, none.quotient_special);
  const FibrationReport all = fibration_report(m, Subspace::full(2), 10, 1);
  EXPECT_EQ(all.quotient_dim, 0u);
  EXPECT_TRUE(all.passed);
  EXPECT_EQ(all.total_special, all.fiber_special);
}

TEST(Fibration, NonInvariantSubspaceIsRejected) {
  const AffineActionModel m = regular_nilpotent_g2_model(3);
  // The torus preserves the coordinate axes but not the diagonal line.
  EXPECT_THROW(fibration_report(m, Subspace::span({QVec{Rat(1), Rat(1)}}, 2), 10, 1), PreconditionError);
  const FibrationReport axis = fibration_report(m, Subspace::span({QVec{Rat(1), Rat(0)}}, 2), 10, 1);
  EXPECT_TRUE(axis.passed);
  EXPECT_FALSE(axis.total_special);
}
