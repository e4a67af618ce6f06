#include <gtest/gtest.h>

#include "orbitforge/error.hpp"
#include "orbitforge/jordan.hpp"
#include "orbitforge/lie.hpp"
#include "orbitforge/linalg.hpp"
#include "orbitforge/orbits.hpp"
#include "orbitforge/partition.hpp"
#include "orbitforge/verify.hpp"

using namespace orbitforge;

namespace {
QMat e(std::size_t n, std::size_t i, std::size_t j) { return QMat::unit(n, i, j); }
QMat jblock(std::size_t n) {
  QMat j(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) j(i, i + 1) = 1;
  return j;
}
}  // namespace

TEST(Bracket, Examples) {
  EXPECT_EQ(bracket(e(2, 0, 1), e(2, 1, 0)), (QMat{{1, 0}, {0, -1}}));
  EXPECT_EQ(bracket(QMat{{1, 0}, {0, -1}}, e(2, 0, 1)), Rat(2) * e(2, 0, 1));
  const QMat a{{1, 2}, {3, 4}};
  EXPECT_TRUE(bracket(a, a).is_zero());
  EXPECT_TRUE(ad_matrix(QMat(3, 3)).is_zero());
  EXPECT_TRUE(ad_matrix(QMat::identity(3)).is_zero());
}

TEST(Bracket, AdAndConjugationMatricesActOnFlattening) {
  Rng rng(2, "adconj");
  const GroupContext ctx(3);
  const QMat a = random_invertible(3, 3, rng);
  const QMat b = random_invertible(3, 3, rng);
  EXPECT_EQ(ad_matrix(a) * ctx.flatten(b), ctx.flatten(bracket(a, b)));
  EXPECT_EQ(conjugation_matrix(a) * ctx.flatten(b), ctx.flatten(a * b * inverse_or_throw(a)));
}

TEST(JordanType, Examples) {
  EXPECT_EQ(jordan_type(QMat(3, 3)), Partition({1, 1, 1}));
  EXPECT_EQ(jordan_type(jblock(3)), Partition({3}));
  EXPECT_EQ(jordan_type(e(3, 0, 1)), Partition({2, 1}));
  EXPECT_THROW(jordan_type(QMat::identity(2)), PreconditionError);
}

TEST(JordanChevalley, Additive) {
  const auto a = additive_jc(QMat{{1, 0}, {0, 2}});
  EXPECT_EQ(a.semisimple, (QMat{{1, 0}, {0, 2}}));
  EXPECT_TRUE(a.nilpotent.is_zero());
  const auto b = additive_jc(jblock(2));
  EXPECT_TRUE(b.semisimple.is_zero());
  EXPECT_EQ(b.nilpotent, jblock(2));
  const auto c = additive_jc(QMat{{2, 1}, {0, 2}});
  EXPECT_EQ(c.semisimple, Rat(2) * QMat::identity(2));
  EXPECT_EQ(c.nilpotent, e(2, 0, 1));
}

TEST(JordanChevalley, Multiplicative) {
  const auto a = mult_jc(QMat{{1, 1}, {0, 1}});
  EXPECT_EQ(a.sigma, QMat::identity(2));
  EXPECT_EQ(a.nu, (QMat{{1, 1}, {0, 1}}));
  const auto b = mult_jc(QMat{{1, 0}, {0, 2}});
  EXPECT_EQ(b.nu, QMat::identity(2));
  const auto c = mult_jc(QMat{{2, 1}, {0, 2}});
  EXPECT_EQ(c.sigma, Rat(2) * QMat::identity(2));
  EXPECT_EQ(c.nu, (QMat{{1, rat(1, 2)}, {0, 1}}));
  EXPECT_THROW(mult_jc(QMat(2, 2)), PreconditionError);
}

TEST(JordanChevalley, RandomConjugatesDecompose) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    Rng rng(6, "jc", s);
    const ClassLabel l = make_label({{Rat(2), Partition({2})}, {rat(-1, 3), Partition({1})}});
    const QMat g = random_invertible(3, 3, rng);
    const QMat x = g * class_representative(l) * inverse_or_throw(g);
    const auto jc = mult_jc(x);
    EXPECT_EQ(jc.sigma * jc.nu, x);
    EXPECT_EQ(jc.sigma * jc.nu, jc.nu * jc.sigma);
    EXPECT_TRUE(is_unipotent(jc.nu));
    EXPECT_EQ(class_label(x), l);
  }
}

TEST(Spectrum, IrrationalIsUnsupported) {
  EXPECT_THROW(eigenvalues(QMat{{0, 1}, {2, 0}}), UnsupportedSpectrum);
  EXPECT_THROW(eigenvalues(QMat{{0, -1}, {1, 0}}), UnsupportedSpectrum);
  const auto ev = eigenvalues(QMat{{3, 0, 0}, {0, rat(1, 2), 0}, {0, 0, 3}});
  ASSERT_EQ(ev.size(), 2u);
  EXPECT_EQ(ev[0], std::make_pair(rat(1, 2), 1));
  EXPECT_EQ(ev[1], std::make_pair(Rat(3), 2));
}

TEST(Centralizer, Dimensions) {
  const GroupContext ctx(3);
  EXPECT_EQ(centralizer_dim(QMat::identity(3), ctx.full()), 9u);
  EXPECT_EQ(centralizer_dim(e(3, 0, 1), ctx.full()), 5u);
  for (std::size_t n = 1; n <= 5; ++n)
    EXPECT_EQ(centralizer_dim(jblock(n), GroupContext(n).full()), n);
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : partitions_of(n)) {
      const QMat x = class_representative(unipotent_label(p)) - QMat::identity(n);
      EXPECT_EQ(static_cast<int>(centralizer_dim(x, GroupContext(n).full())), centralizer_dim_formula(p));
    }
}

TEST(ExpLog, Examples) {
  EXPECT_EQ(nilpotent_exp(QMat(3, 3)), QMat::identity(3));
  EXPECT_EQ(nilpotent_exp(e(2, 0, 1)), (QMat{{1, 1}, {0, 1}}));
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::uint64_t s = 0; s < 5; ++s) {
      Rng rng(8, "explog-" + std::to_string(n), s);
      const auto ps = partitions_of(static_cast<int>(n));
      const QMat x = random_nilpotent(ps[rng.uniform(0, ps.size() - 1)], rng);
      EXPECT_EQ(nilpotent_log(nilpotent_exp(x)), x);
    }
  EXPECT_THROW(nilpotent_exp(QMat::identity(2)), PreconditionError);
}

TEST(Partitions, Combinatorics) {
  EXPECT_EQ(partitions_of(5).size(), 7u);
  EXPECT_EQ(partitions_of(7).size(), 15u);
  EXPECT_EQ(compositions_of(4).size(), 8u);
  EXPECT_EQ(dual(Partition({3, 1})), Partition({2, 1, 1}));
  EXPECT_EQ(dual(Partition({2, 2})), Partition({2, 2}));
  EXPECT_EQ(dual(dual(Partition({4, 2, 2, 1}))), Partition({4, 2, 2, 1}));
  EXPECT_TRUE(dominates(Partition({3}), Partition({2, 1})));
  EXPECT_FALSE(dominates(Partition({2, 2, 2}), Partition({3, 1, 1, 1})));
  EXPECT_FALSE(dominates(Partition({3, 1, 1, 1}), Partition({2, 2, 2})));
  EXPECT_EQ(padded_sum({Partition({2, 1}), Partition({1})}), Partition({3, 1}));
  EXPECT_EQ(parse_partition("1,3,2"), Partition({3, 2, 1}));
  EXPECT_THROW(parse_partition("2,0"), PreconditionError);
  EXPECT_EQ(to_string(Partition({2, 1})), "(2,1)");
}
