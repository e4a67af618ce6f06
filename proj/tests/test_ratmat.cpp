#include <gtest/gtest.h>

#include "orbitforge/error.hpp"
#include "orbitforge/linalg.hpp"
#include "orbitforge/random.hpp"
#include "orbitforge/subspace.hpp"

using namespace orbitforge;

namespace {

QVec vec(std::initializer_list<long> xs) {
  QVec v;
  for (long x : xs) v.push_back(Rat(x));
  return v;
}

QMat random_matrix(std::size_t r, std::size_t c, Rng& rng) {
  QMat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = rng.uniform(0, 2) == 0 ? Rat(0) : rng.rational(4);
  return m;
}

// Rank as the size of the largest nonsingular square minor.
std::size_t naive_rank(const QMat& m) {
  const std::size_t r = m.rows(), c = m.cols();
  for (std::size_t k = std::min(r, c); k > 0; --k) {
    for (unsigned rm = 0; rm < (1u << r); ++rm) {
      if (static_cast<std::size_t>(__builtin_popcount(rm)) != k) continue;
      for (unsigned cm = 0; cm < (1u << c); ++cm) {
        if (static_cast<std::size_t>(__builtin_popcount(cm)) != k) continue;
        QMat s(k, k);
        std::size_t a = 0;
        for (std::size_t i = 0; i < r; ++i) {
          if (!(rm >> i & 1)) continue;
          std::size_t b = 0;
          for (std::size_t j = 0; j < c; ++j)
            if (cm >> j & 1) s(a, b++) = m(i, j);
          ++a;
        }
        if (determinant(s) != 0) return k;
      }
    }
  }
  return 0;
}

}  // namespace

TEST(Rat, ParseAndPrint) {
  EXPECT_EQ(parse_rat("4/6"), rat(2, 3));
  EXPECT_EQ(parse_rat("-3"), Rat(-3));
  EXPECT_EQ(to_string(rat(-6, 4)), "-3/2");
  EXPECT_EQ(to_string(Rat(5)), "5");
  EXPECT_THROW(parse_rat("1/0"), PreconditionError);
  EXPECT_THROW(parse_rat("abc"), PreconditionError);
}

TEST(Rref, Examples) {
  EXPECT_EQ(rref(QMat{{2, 4}, {1, 2}}), (QMat{{1, 2}, {0, 0}}));
  EXPECT_EQ(rref(QMat::identity(3)), QMat::identity(3));
  EXPECT_EQ(rref(QMat{{0, 1}, {1, 0}}), QMat::identity(2));
}

TEST(Rref, AgreesWithMinorRank) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    Rng rng(7, "rref-oracle", s);
    const QMat m = random_matrix(rng.uniform(1, 4), rng.uniform(1, 4), rng);
    const QMat e = rref(m);
    EXPECT_EQ(rank(m), naive_rank(m));
    EXPECT_EQ(rref(e), e);
    EXPECT_EQ(Subspace::span(e), Subspace::span(m));
    // Pivot columns are unit columns.
    const auto piv = pivot_columns(e);
    for (std::size_t k = 0; k < piv.size(); ++k)
      for (std::size_t i = 0; i < e.rows(); ++i) EXPECT_EQ(e(i, piv[k]), Rat(i == k ? 1 : 0));
  }
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel_basis(QMat(2, 2)).dim(), 2u);
  EXPECT_EQ(kernel_basis(QMat::identity(3)).dim(), 0u);
  const Subspace k = kernel_basis(QMat{{1, 1}});
  ASSERT_EQ(k.dim(), 1u);
  EXPECT_TRUE(k.contains(vec({1, -1})));
}

TEST(Kernel, RankNullity) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    Rng rng(3, "kernel", s);
    const QMat m = random_matrix(rng.uniform(1, 5), rng.uniform(1, 5), rng);
    const Subspace k = kernel_basis(m);
    EXPECT_EQ(k.dim() + rank(m), m.cols());
    for (std::size_t i = 0; i < k.dim(); ++i) EXPECT_TRUE(is_zero(m * k.vector(i)));
  }
}

TEST(Inverse, SingularAndRegular) {
  EXPECT_FALSE(inverse(QMat{{1, 2}, {2, 4}}).has_value());
  EXPECT_THROW(inverse_or_throw(QMat{{1, 2}, {2, 4}}), PreconditionError);
  const QMat a{{2, 1}, {7, 4}};
  EXPECT_EQ(a * inverse_or_throw(a), QMat::identity(2));
  EXPECT_EQ(determinant(a), Rat(1));
  EXPECT_EQ(determinant(QMat{{0, 1}, {1, 0}}), Rat(-1));
}

TEST(Solve, Examples) {
  const QVec b = vec({3, -1, 2});
  EXPECT_EQ(*solve_linear(QMat::identity(3), b), b);
  const auto x = solve_linear(QMat{{1, 1}}, vec({2}));
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0] + (*x)[1], Rat(2));
  EXPECT_FALSE(solve_linear(QMat{{1}, {1}}, vec({0, 1})).has_value());
}

TEST(Subspace, IntersectAndSum) {
  const Subspace a = Subspace::span({vec({1, 0, 0}), vec({0, 1, 0})}, 3);
  const Subspace b = Subspace::span({vec({0, 1, 0}), vec({0, 0, 1})}, 3);
  EXPECT_EQ(subspace_intersect(a, b), Subspace::span({vec({0, 1, 0})}, 3));
  EXPECT_EQ(subspace_intersect(a, a), a);
  EXPECT_TRUE(subspace_intersect(Subspace::span({vec({1, 0, 0})}, 3),
                                 Subspace::span({vec({0, 1, 0})}, 3))
                  .is_zero());
  EXPECT_EQ(subspace_sum(a, b), Subspace::full(3));
}

TEST(Subspace, DimensionFormulaAndAnnihilator) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    Rng rng(5, "subspace", s);
    const std::size_t n = rng.uniform(1, 5);
    const Subspace a = Subspace::span(random_matrix(rng.uniform(0, n), n, rng));
    const Subspace b = Subspace::span(random_matrix(rng.uniform(0, n), n, rng));
    EXPECT_EQ(subspace_sum(a, b).dim() + subspace_intersect(a, b).dim(), a.dim() + b.dim());
    const Subspace ann = a.annihilator();
    EXPECT_EQ(ann.dim() + a.dim(), n);
    for (std::size_t i = 0; i < ann.dim(); ++i)
      EXPECT_TRUE(is_zero(a.basis() * ann.vector(i)));
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const auto c = a.coordinates(a.vector(i));
      ASSERT_TRUE(c.has_value());
    }
  }
}

TEST(Rng, StreamsAreReproducibleAndIndependent) {
  Rng a(1, "x", 0), b(1, "x", 0), c(1, "x", 1), d(1, "y", 0);
  std::vector<std::int64_t> va, vb, vc, vd;
  for (int i = 0; i < 8; ++i) {
    va.push_back(a.uniform(-100, 100));
    vb.push_back(b.uniform(-100, 100));
    vc.push_back(c.uniform(-100, 100));
    vd.push_back(d.uniform(-100, 100));
  }
  EXPECT_EQ(va, vb);
  EXPECT_NE(va, vc);
  EXPECT_NE(va, vd);
  EXPECT_EQ(stream_key(9, "s", 2), stream_key(9, "s", 2));
  EXPECT_NE(stream_key(9, "s", 2), stream_key(9, "s", 3));
  Rng r(2, "nz");
  for (int i = 0; i < 100; ++i) EXPECT_NE(r.nonzero_integer(2), 0);
}
