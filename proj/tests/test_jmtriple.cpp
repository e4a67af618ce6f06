#include <gtest/gtest.h>

#include "orbitforge/error.hpp"
#include "orbitforge/jm.hpp"
#include "orbitforge/jordan.hpp"
#include "orbitforge/lie.hpp"
#include "orbitforge/orbits.hpp"
#include "orbitforge/verify.hpp"

using namespace orbitforge;

namespace {
QMat e(std::size_t n, std::size_t i, std::size_t j) { return QMat::unit(n, i, j); }
Subspace span(std::size_t n, std::vector<QMat> ms) { return GroupContext(n).span(ms); }
Subspace upper(std::size_t n, bool strict) {
  std::vector<QMat> ms;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = strict ? i + 1 : i; j < n; ++j) ms.push_back(e(n, i, j));
  return span(n, ms);
}
}  // namespace

TEST(JmTriple, Examples) {
  const LieTriple z = jm_triple(QMat(3, 3));
  EXPECT_TRUE(z.H.is_zero());
  EXPECT_TRUE(z.Y.is_zero());

  const LieTriple t = jm_triple(e(2, 0, 1));
  EXPECT_EQ(t.H, (QMat{{1, 0}, {0, -1}}));
  EXPECT_EQ(t.Y, e(2, 1, 0));

  const LieTriple r = jm_triple(e(3, 0, 1) + e(3, 1, 2));
  EXPECT_EQ(r.H, QMat::diagonal({Rat(2), Rat(0), Rat(-2)}));
  EXPECT_EQ(r.Y, Rat(2) * e(3, 1, 0) + Rat(2) * e(3, 2, 1));
  EXPECT_TRUE(satisfies_triple_relations(r));
  EXPECT_THROW(jm_triple(QMat::identity(2)), PreconditionError);
}

TEST(JmTriple, RandomNilpotents) {
  for (int n = 1; n <= 5; ++n)
    for (std::uint64_t s = 0; s < 10; ++s) {
      Rng rng(3, "jm-test-" + std::to_string(n), s);
      const auto ps = partitions_of(n);
      const Partition p = ps[rng.uniform(0, ps.size() - 1)];
      const QMat x = random_nilpotent(p, rng);
      const LieTriple t = jm_triple(x, {}, &rng);
      EXPECT_EQ(t.X, x);
      EXPECT_TRUE(satisfies_triple_relations(t));
      EXPECT_EQ(jordan_type(t.Y), p);
    }
}

TEST(Grading, Examples) {
  const GradedDecomp g = graded_decomposition(QMat{{1, 0}, {0, -1}});
  EXPECT_EQ(g.level(2), span(2, {e(2, 0, 1)}));
  EXPECT_EQ(g.level(0), span(2, {e(2, 0, 0), e(2, 1, 1)}));
  EXPECT_EQ(g.level(-2), span(2, {e(2, 1, 0)}));
  EXPECT_TRUE(g.level(1).is_zero());

  const GradedDecomp z = graded_decomposition(QMat(3, 3));
  ASSERT_EQ(z.levels.size(), 1u);
  EXPECT_EQ(z.level(0), GroupContext(3).full());

  const GradedDecomp h = graded_decomposition(QMat::diagonal({Rat(2), Rat(0), Rat(-2)}));
  EXPECT_EQ(h.level(2), span(3, {e(3, 0, 1), e(3, 1, 2)}));
  EXPECT_EQ(h.level(4), span(3, {e(3, 0, 2)}));
  EXPECT_EQ(h.level(-4), span(3, {e(3, 2, 0)}));
  EXPECT_EQ(h.level(0).dim(), 3u);
}

TEST(Parabolic, Examples) {
  const ParabolicData z = canonical_parabolic(jm_triple(QMat(3, 3)));
  EXPECT_EQ(z.q, GroupContext(3).full());
  EXPECT_TRUE(z.u.is_zero());
  EXPECT_TRUE(z.uprime.is_zero());

  const ParabolicData b2 = canonical_parabolic(jm_triple(e(2, 0, 1)));
  EXPECT_EQ(b2.q, upper(2, false));
  EXPECT_EQ(b2.u, span(2, {e(2, 0, 1)}));
  EXPECT_TRUE(b2.uprime.is_zero());

  const ParabolicData b3 = canonical_parabolic(jm_triple(e(3, 0, 1) + e(3, 1, 2)));
  EXPECT_EQ(b3.q, upper(3, false));
  EXPECT_EQ(b3.u, upper(3, true));
  EXPECT_EQ(b3.uprime, span(3, {e(3, 0, 2)}));
}

TEST(Parabolic, AdXMapsLevelZeroOntoLevelTwo) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : partitions_of(n)) {
      const QMat x = class_representative(unipotent_label(p)) - QMat::identity(n);
      const ParabolicData pd = canonical_parabolic(jm_triple(x));
      EXPECT_EQ(image(ad_matrix(x), pd.grading.level(0)), pd.grading.level(2));
      EXPECT_TRUE(pd.q.contains(centralizer(x, GroupContext(n).full())));
    }
}

TEST(Parabolic, OfGroupElements) {
  const ElementParabolic reg = canonical_parabolic_of_element(QMat::diagonal({Rat(1), Rat(2), Rat(3)}));
  EXPECT_EQ(reg.parabolic.q, GroupContext(3).full());

  const QMat u = QMat::identity(3) + e(3, 0, 1);
  const ElementParabolic ep = canonical_parabolic_of_element(u);
  const Eigenbasis eb = diagonalize(ep.triple.H);
  EXPECT_EQ(eb.values, (QVec{Rat(-1), Rat(0), Rat(1)}));

  const QMat g = QMat::diagonal({Rat(1), Rat(1), Rat(2)}) * nilpotent_exp(e(3, 0, 1));
  const ElementParabolic mixed = canonical_parabolic_of_element(g);
  EXPECT_TRUE(mixed.parabolic.u.contains(GroupContext(3).flatten(e(3, 0, 1))));
  EXPECT_EQ(mixed.triple.H * mixed.jc.sigma, mixed.jc.sigma * mixed.triple.H);
  EXPECT_TRUE(satisfies_triple_relations(mixed.triple));
}

TEST(Parabolic, IndependentOfTheTriple) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    Rng rng(12, "indep", s);
    const QMat x = random_nilpotent(Partition({2, 2, 1}), rng);
    Rng a = rng.child("a"), b = rng.child("b");
    const ParabolicData pa = canonical_parabolic(jm_triple(x, {}, &a));
    const ParabolicData pb = canonical_parabolic(jm_triple(x, {}, &b));
    EXPECT_EQ(pa.q, pb.q);
    EXPECT_EQ(pa.u, pb.u);
    EXPECT_EQ(pa.uprime, pb.uprime);
  }
}
