#include <gtest/gtest.h>

#include "orbitforge/error.hpp"
#include "orbitforge/jordan.hpp"
#include "orbitforge/lie.hpp"
#include "orbitforge/orbits.hpp"

using namespace orbitforge;

namespace {
ClassLabel lab(std::vector<std::pair<long, std::vector<int>>> xs) {
  std::vector<std::pair<Rat, Partition>> pairs;
  for (auto& [l, p] : xs) pairs.emplace_back(Rat(l), Partition(p));
  return make_label(std::move(pairs));
}
SamplingOptions strong() {
  SamplingOptions o;
  o.bound = 1000000;
  return o;
}
QMat e(std::size_t n, std::size_t i, std::size_t j) { return QMat::unit(n, i, j); }
}  // namespace

TEST(Labels, Examples) {
  EXPECT_EQ(class_label(QMat::identity(3)), lab({{1, {1, 1, 1}}}));
  EXPECT_EQ(class_label(QMat{{1, 1}, {0, 1}}), lab({{1, {2}}}));
  const QMat g = QMat::diagonal({Rat(1), Rat(1), Rat(2)}) * nilpotent_exp(e(3, 0, 1));
  EXPECT_EQ(class_label(g), lab({{1, {2}}, {2, {1}}}));
  EXPECT_EQ(class_representative(lab({{1, {2}}})), (QMat{{1, 1}, {0, 1}}));
  EXPECT_EQ(class_representative(lab({{2, {1, 1}}})), Rat(2) * QMat::identity(2));
  EXPECT_EQ(to_string(lab({{2, {1}}, {1, {2, 1}}})), "[(1,(2,1)),(2,(1))]");
  EXPECT_THROW(lab({{0, {1}}}), PreconditionError);
  EXPECT_THROW(lab({{1, {1}}, {1, {2}}}), PreconditionError);
}

TEST(Labels, RepresentativeRoundTrip) {
  for (const auto& l : {lab({{1, {2}}, {3, {1}}}), lab({{-1, {2, 2}}, {2, {1}}}), lab({{5, {3}}})})
    EXPECT_EQ(class_label(class_representative(l)), l);
}

TEST(Levi, Structure) {
  const LeviSpec l({2, 1});
  EXPECT_EQ(l.n(), 3);
  EXPECT_EQ(l.p().dim(), 7u);
  EXPECT_EQ(l.m().dim(), 5u);
  EXPECT_EQ(l.nrad().dim(), 2u);
  EXPECT_TRUE(l.in_p(QMat::identity(3) + e(3, 0, 2)));
  EXPECT_FALSE(l.in_p(QMat::identity(3) + e(3, 2, 0)));
  EXPECT_THROW(LeviSpec({2, 0}), PreconditionError);
}

TEST(Induce, Examples) {
  const LeviSpec b2({1, 1});
  EXPECT_EQ(induce(b2, trivial_class(b2)).label, lab({{1, {2}}}));
  const LeviSpec l22({2, 2});
  const InductionResult r = induce(l22, trivial_class(l22));
  EXPECT_EQ(r.label, lab({{1, {2, 2}}}));
  EXPECT_TRUE(r.unanimous);
  EXPECT_EQ(class_label(r.witness), r.label);

  const LeviSpec g({3});
  const MClassLabel c{{lab({{2, {2}}, {5, {1}}})}};
  EXPECT_EQ(induce(g, c).label, c.per_block[0]);

  const MClassLabel torus{{lab({{1, {1}}}), lab({{2, {1}}})}};
  EXPECT_EQ(induce(b2, torus).label, lab({{1, {1}}, {2, {1}}}));
}

TEST(Induce, Richardson) {
  EXPECT_EQ(richardson(LeviSpec({2, 1})).result.label, lab({{1, {2, 1}}}));
  EXPECT_EQ(richardson(LeviSpec({1, 1, 1, 1})).result.label, lab({{1, {4}}}));
  EXPECT_EQ(richardson(LeviSpec({4})).result.label, lab({{1, {1, 1, 1, 1}}}));
  for (const auto& comp : compositions_of(5)) EXPECT_TRUE(richardson(LeviSpec(comp), strong()).passed);
}

TEST(Induce, PartitionSum) {
  const LeviSpec l({3, 2});
  const MClassLabel c = unipotent_class({Partition({2, 1}), Partition({2})});
  EXPECT_EQ(induce(l, c, strong()).label, lab({{1, {4, 1}}}));
}

TEST(Induce, SeedDeterminism) {
  const LeviSpec l({2, 1, 1});
  SamplingOptions o;
  o.seed = 42;
  const InductionResult a = induce(l, trivial_class(l), o);
  const InductionResult b = induce(l, trivial_class(l), o);
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.label, b.label);
}

// A larger bound can only shrink the non-generic locus hit by the samples.
TEST(Induce, LargerBoundsAreMoreOftenUnanimous) {
  std::vector<std::size_t> split;
  for (std::int64_t bound : {10, 100, 1000}) {
    SamplingOptions o;
    o.bound = bound;
    std::size_t non_unanimous = 0;
    for (int n = 1; n <= 5; ++n)
      for (const auto& comp : compositions_of(n))
        if (!richardson(LeviSpec(comp), o).result.unanimous) ++non_unanimous;
    split.push_back(non_unanimous);
  }
  EXPECT_GE(split[0], split[1]);
  EXPECT_GE(split[1], split[2]);
}

TEST(Codim, Examples) {
  const LeviSpec l21({2, 1});
  const CodimReport a = check_codim(l21, trivial_class(l21), strong());
  EXPECT_TRUE(a.passed);
  EXPECT_EQ(a.dim_m_mu, 5u);
  for (auto d : a.dim_g_gamma) EXPECT_EQ(d, 5u);

  const LeviSpec l22({2, 2});
  const CodimReport b = check_codim(l22, trivial_class(l22), strong());
  EXPECT_TRUE(b.passed);
  EXPECT_EQ(b.dim_m_mu, 8u);

  const LeviSpec b2({1, 1});
  const CodimReport c = check_codim(b2, MClassLabel{{lab({{1, {1}}}), lab({{2, {1}}})}}, strong());
  EXPECT_TRUE(c.passed);
  EXPECT_EQ(c.dim_m_mu, 2u);
}

TEST(Assoc, Examples) {
  const AssocReport a = check_assoc(LeviSpec({2, 1}), trivial_class(LeviSpec({2, 1})), strong());
  EXPECT_TRUE(a.passed);
  EXPECT_EQ(a.permutations.size(), 2u);
  const LeviSpec l({1, 1, 2});
  const InductionResult two = induce_in_steps(l, trivial_class(l), {2, 1}, strong());
  EXPECT_EQ(two.label, induce(l, trivial_class(l), strong()).label);
  EXPECT_TRUE(check_assoc(l, regular_unipotent_class(l), strong()).passed);
}

TEST(Descent, Examples) {
  const LeviSpec l({2, 1});
  const MClassLabel c{{lab({{1, {1, 1}}}), lab({{2, {1}}})}};
  const DescentReport r =
      check_descent(l, c, QMat::diagonal({Rat(1), Rat(1), Rat(2)}), strong());
  EXPECT_TRUE(r.passed);
  const LeviSpec l22({2, 2});
  const MClassLabel c22{{lab({{1, {1, 1}}}), lab({{2, {1, 1}}})}};
  EXPECT_TRUE(check_descent(l22, c22, QMat::diagonal({Rat(1), Rat(1), Rat(2), Rat(2)}), strong()).passed);
  EXPECT_TRUE(check_descent(l22, trivial_class(l22), QMat::identity(4), strong()).passed);
  EXPECT_THROW(check_descent(l22, trivial_class(l22), Rat(2) * QMat::identity(4)), PreconditionError);
}

TEST(Inflation, Genericity) {
  const LeviSpec b({1, 1});
  const LeviSpec b3({1, 1, 1});
  EXPECT_FALSE(is_inflation_generic(QMat::identity(2), b));
  EXPECT_TRUE(is_inflation_generic(QMat{{1, 1}, {0, 1}}, b));
  EXPECT_TRUE(is_inflation_generic(QMat::diagonal({Rat(1), Rat(2)}), b));
  EXPECT_TRUE(inflated_class_contains(QMat{{1, 1}, {0, 1}}, b, trivial_class(b)));
  EXPECT_FALSE(inflated_class_contains(QMat::identity(2), b, trivial_class(b)));
  const MClassLabel t{{lab({{1, {1}}}), lab({{2, {1}}})}};
  EXPECT_TRUE(inflated_class_contains(QMat{{1, 1}, {0, 2}}, b, t));
  EXPECT_THROW(is_inflation_generic(QMat{{1, 0}, {1, 1}}, b), PreconditionError);
  (void)b3;
}

TEST(SemisimpleConjugacy, Examples) {
  const LeviSpec b3({1, 1, 1});
  SamplingOptions o;
  o.samples = 20;
  EXPECT_TRUE(check_gN(QMat{{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}, b3, o).passed);
  const QMat d = QMat::diagonal({Rat(1), Rat(1), Rat(2)}) * nilpotent_exp(e(3, 0, 1));
  const GNReport r = check_gN(d, b3, o);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.samples, 20u);
}
