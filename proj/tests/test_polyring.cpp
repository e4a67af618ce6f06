#include <gtest/gtest.h>

#include "orbitforge/mpoly.hpp"
#include "orbitforge/polymat.hpp"
#include "orbitforge/random.hpp"

using namespace orbitforge;

namespace {

const MPoly x = MPoly::variable(2, 0);
const MPoly y = MPoly::variable(2, 1);
MPoly c2(long v) { return MPoly::constant(2, Rat(v)); }

MPoly random_poly(std::size_t nv, Rng& rng) {
  MPoly p(nv);
  for (int t = 0; t < 3; ++t) {
    Monomial m(nv);
    for (auto& e : m) e = static_cast<std::uint32_t>(rng.uniform(0, 2));
    p.add_term(m, rng.nonzero_integer(5));
  }
  return p;
}

}  // namespace

TEST(MPoly, Arithmetic) {
  EXPECT_EQ((x + y) * (x - y), x * x - y * y);
  EXPECT_EQ(x + MPoly(2), x);
  EXPECT_EQ(to_string(x * x), "x0^2");
  EXPECT_EQ(to_string(Rat(-2) * x * x * y + Rat(3) * y + c2(1)), "(-2)*x0^2*x1 + 3*x1 + 1");
  EXPECT_EQ(pow(x + y, 2), x * x + Rat(2) * x * y + y * y);
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_EQ((x * y + c2(3)).total_degree(), 2u);
}

TEST(MPoly, Derivatives) {
  EXPECT_EQ(partial_derivative(x * x * y, 0), Rat(2) * x * y);
  EXPECT_TRUE(partial_derivative(x * x, 1).is_zero());
  const MPoly t = MPoly::variable(1, 0);
  EXPECT_EQ(partial_derivative(Rat(-2) * t * t, 0), Rat(-4) * t);
}

TEST(MPoly, Gcd) {
  EXPECT_EQ(mpoly_gcd(x * x * y, x * y * y), x * y);
  EXPECT_EQ(mpoly_gcd(x * x + y, c2(1)), c2(1));
  EXPECT_EQ(mpoly_gcd(x * x - y * y, x - y), x - y);
  EXPECT_EQ(mpoly_gcd(Rat(6) * x, Rat(4) * x * y), x);
}

TEST(MPoly, GcdOfRandomMultiples) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    Rng rng(11, "gcd", s);
    const std::size_t nv = rng.uniform(1, 3);
    const MPoly g = random_poly(nv, rng);
    const MPoly a = g * random_poly(nv, rng);
    const MPoly b = g * random_poly(nv, rng);
    if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
    const MPoly d = mpoly_gcd(a, b);
    EXPECT_TRUE(divide_exact(a, d).has_value());
    EXPECT_TRUE(divide_exact(b, d).has_value());
    EXPECT_TRUE(divide_exact(d, g).has_value());
    EXPECT_EQ(d, d.monic());
  }
}

TEST(MPoly, DivideExact) {
  EXPECT_EQ(*divide_exact(x * x - y * y, x + y), x - y);
  EXPECT_FALSE(divide_exact(x * x + y, x).has_value());
}

TEST(MPoly, EvaluateAndSubstitute) {
  const MPoly p = x * x * y + Rat(3) * y;
  EXPECT_EQ(p.evaluate({Rat(2), Rat(-1)}), Rat(-7));
  EXPECT_EQ(p.substitute({y, x}), y * y * x + Rat(3) * x);
}

TEST(PolyMat, Determinant) {
  const MPoly t = MPoly::variable(1, 0);
  PolyMat one(1, 1, 1);
  one(0, 0) = t;
  EXPECT_EQ(poly_det(one), t);
  PolyMat d(2, 2, 2);
  d(0, 0) = x;
  d(1, 1) = y;
  EXPECT_EQ(poly_det(d), x * y);
  PolyMat m(2, 2, 2);
  m(0, 0) = x;
  m(0, 1) = c2(1);
  m(1, 0) = c2(1);
  m(1, 1) = x;
  EXPECT_EQ(poly_det(m), x * x - c2(1));
}

TEST(PolyMat, ProductMatchesEvaluation) {
  Rng rng(4, "polymat");
  PolyMat a(2, 3, 2), b(3, 2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      a(i, j) = random_poly(2, rng);
      b(j, i) = random_poly(2, rng);
    }
  const QVec pt{Rat(1, 2), Rat(-3)};
  EXPECT_EQ((a * b).evaluate(pt), a.evaluate(pt) * b.evaluate(pt));
}
