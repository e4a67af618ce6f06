#include <gtest/gtest.h>

#include "orbitforge/conjecture.hpp"
#include "orbitforge/error.hpp"
#include "orbitforge/lie.hpp"
#include "orbitforge/linalg.hpp"

using namespace orbitforge;

namespace {
ConjectureOptions strong() {
  ConjectureOptions o;
  o.sampling.bound = 1000000;
  return o;
}
}  // namespace

TEST(NC, BorelRegularUnipotent) {
  const LeviSpec b2({1, 1});
  const NCResult r2 = nc_subspace(QMat{{1, 1}, {0, 1}}, b2);
  EXPECT_EQ(r2.nc_basis, b2.nrad());
  EXPECT_TRUE(r2.randomized_match);
  EXPECT_TRUE(r2.is_p_ideal);

  const LeviSpec b3({1, 1, 1});
  const NCResult r3 = nc_subspace(QMat{{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}, b3);
  EXPECT_EQ(r3.nc_basis.dim(), 3u);
  EXPECT_TRUE(r3.randomized_match);
}

TEST(NC, RejectsNonGenericGamma) {
  const LeviSpec b2({1, 1});
  EXPECT_THROW(nc_subspace(QMat::identity(2), b2), PreconditionError);
}

TEST(NC, SubregularLevi) {
  const LeviSpec l({2, 1});
  const ConjectureVerdict v = conjecture_check(l, trivial_class(l), strong());
  ASSERT_NE(v.verdict, Verdict::inconclusive) << v.reason;
  EXPECT_TRUE(v.nc.randomized_match);
  EXPECT_TRUE(v.nc.is_p_ideal);
  EXPECT_TRUE(l.nrad().contains(v.nc.nc_basis));
  EXPECT_TRUE(v.nc.start.contains(v.nc.nc_basis));
  EXPECT_TRUE(v.translates.passed);
  EXPECT_GT(v.translates.in_class, 0u);
  EXPECT_EQ(v.quotient_dim + v.nc_dim, l.nrad().dim());
}

TEST(NC, EquivariantUnderP) {
  const LeviSpec l({1, 2});
  const ConjectureVerdict v = conjecture_check(l, regular_unipotent_class(l), strong());
  ASSERT_NE(v.verdict, Verdict::inconclusive) << v.reason;
  EXPECT_TRUE(v.equivariant);
  EXPECT_TRUE(nc_equivariance_check(v.gamma, l, v.nc, 77));
}

TEST(Conjecture, Examples) {
  const LeviSpec b2({1, 1});
  const ConjectureVerdict a = conjecture_check(b2, trivial_class(b2), strong());
  EXPECT_EQ(a.quotient_dim, 0u);
  EXPECT_EQ(a.verdict, Verdict::special);

  const LeviSpec b3({1, 1, 1});
  const ConjectureVerdict b = conjecture_check(b3, trivial_class(b3), strong());
  EXPECT_EQ(b.quotient_dim, 0u);
  EXPECT_EQ(b.verdict, Verdict::special);

  const LeviSpec g({3});
  const ConjectureVerdict c = conjecture_check(g, trivial_class(g), strong());
  EXPECT_EQ(c.quotient_dim, 0u);
  EXPECT_EQ(c.verdict, Verdict::special);
}

TEST(Conjecture, VerdictMatchesSpeciality) {
  const LeviSpec l({2, 1});
  for (const auto& c : catalog_classes(l, ConjectureCatalog{})) {
    const ConjectureVerdict v = conjecture_check(l, c, strong());
    ASSERT_NE(v.verdict, Verdict::inconclusive) << v.reason;
    EXPECT_EQ(v.verdict == Verdict::special, v.speciality.is_special);
    ASSERT_TRUE(v.fibration.has_value());
    EXPECT_TRUE(v.fibration->passed);
    EXPECT_TRUE(v.fibration_quotient_agrees);
  }
}

TEST(Conjecture, CatalogClasses) {
  const LeviSpec l({2, 1});
  const auto cs = catalog_classes(l, ConjectureCatalog{});
  ASSERT_EQ(cs.size(), 3u);
  EXPECT_EQ(cs[0], trivial_class(l));
  EXPECT_EQ(cs[1], regular_unipotent_class(l));
  // All-ones compositions make trivial and regular coincide.
  EXPECT_EQ(catalog_classes(LeviSpec({1, 1}), ConjectureCatalog{}).size(), 2u);
}

TEST(Conjecture, BatchSmall) {
  ConjectureOptions o = strong();
  const BatchReport r = conjecture_batch(2, ConjectureCatalog{}, o);
  EXPECT_EQ(r.summary.inconclusive, 0u);
  EXPECT_EQ(r.summary.special, r.cases.size());
  EXPECT_THROW(conjecture_batch(6, ConjectureCatalog{}, o), PreconditionError);
}
