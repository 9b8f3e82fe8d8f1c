#include <gtest/gtest.h>

#include "lpproj/errors.hpp"
#include "lpproj/linear_map.hpp"
#include "lpproj/rational.hpp"
#include "lpproj/rng.hpp"

using namespace lpproj;

TEST(Rational, ParseCanonicalizes) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-8/4")), "-2");
  EXPECT_EQ(to_string(parse_rational("+3/6")), "1/2");
  EXPECT_EQ(parse_rational("  7 "), Rational(7));
  EXPECT_EQ(parse_rational("123456789012345678901234567890"),
            Rational(Integer("123456789012345678901234567890")));
}

TEST(Rational, ParseRejectsGarbage) {
  for (const char* bad : {"", "1/0", "abc", "1/2/3", "1.5", "/3", "2/", "3/-6"}) {
    EXPECT_THROW(parse_rational(bad), ParseError) << bad;
  }
}

TEST(Rational, VectorHelpers) {
  const Vector a = {Rational(1, 2), Rational(-1), Rational(0)};
  const Vector b = {Rational(2), Rational(1, 3), Rational(5)};
  EXPECT_EQ(dot(a, b), Rational(1) - Rational(1, 3));
  EXPECT_EQ(add(a, b), (Vector{Rational(5, 2), Rational(-2, 3), Rational(5)}));
  EXPECT_EQ(sub(a, a), zero_vector(3));
  EXPECT_TRUE(is_zero(sub(a, a)));
  EXPECT_EQ(scaled(a, 2), (Vector{Rational(1), Rational(-2), Rational(0)}));
  EXPECT_EQ(unit_vector(3, 1), (Vector{0, 1, 0}));
  EXPECT_EQ(dot(IntVector{2, -1, 4}, b), Rational(4) - Rational(1, 3) + 20);
}

TEST(Rational, RankAndNullspace) {
  std::vector<Vector> rows = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  EXPECT_EQ(rank(rows), 2);
  auto ns = nullspace(rows, 3);
  ASSERT_EQ(ns.size(), 1u);
  for (const auto& r : rows) EXPECT_EQ(dot(r, ns[0]), 0);
  EXPECT_EQ(nullspace({}, 2).size(), 2u);
  EXPECT_EQ(affine_rank(std::vector<Vector>{{0, 0}, {1, 1}, {2, 2}}), 1);
  EXPECT_EQ(affine_rank(std::vector<Vector>{}), -1);
}

TEST(Rational, PrimitiveKeepsOrientation) {
  EXPECT_EQ(primitive({Rational(2, 3), Rational(-4, 3), Rational(0)}), (IntVector{1, -2, 0}));
  EXPECT_EQ(primitive({Rational(-6), Rational(9)}), (IntVector{-2, 3}));
  EXPECT_THROW(primitive({0, 0}), PreconditionError);
}

TEST(Rational, DeterminantAndInverse) {
  Matrix m = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  EXPECT_EQ(determinant(m), Rational(18));
  auto inv = inverse(m);
  ASSERT_TRUE(inv.has_value());
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < 3; ++k) s += m[i][k] * (*inv)[k][j];
      EXPECT_EQ(s, i == j ? 1 : 0);
    }
  }
  EXPECT_FALSE(inverse(Matrix{{1, 2}, {2, 4}}).has_value());
}

TEST(LinearMap, FromColumnsAndInverse) {
  // e_1 -> e_1, e_2 -> (1/2, 1/2)
  auto phi = LinearMap::from_columns({{1, 0}, {Rational(1, 2), Rational(1, 2)}});
  EXPECT_EQ(phi.det(), Rational(1, 2));
  EXPECT_EQ(phi.apply(Vector{0, 1}), (Vector{Rational(1, 2), Rational(1, 2)}));
  EXPECT_EQ(phi * phi.inverse(), LinearMap::identity(2));
  EXPECT_EQ(phi.transpose().transpose(), phi);
  EXPECT_THROW(LinearMap(Matrix{{1, 1}, {1, 1}}).inverse(), PreconditionError);
  EXPECT_THROW(LinearMap(Matrix{{1, 1}}), DimensionError);
  auto d = phi.apply(std::vector<double>{0.0, 2.0});
  EXPECT_DOUBLE_EQ(d[0], 1.0);
  EXPECT_DOUBLE_EQ(d[1], 1.0);
}

TEST(Rng, DeterministicAndSplittable) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
  Rng s1 = Rng(42).split(3), s2 = Rng(42).split(3), s3 = Rng(42).split(4);
  EXPECT_EQ(s1.next(), s2.next());
  EXPECT_NE(Rng(42).split(3).next(), s3.next());
  Rng r(1);
  for (int i = 0; i < 1000; ++i) {
    const auto v = r.uniform_int(-3, 3);
    EXPECT_GE(v, -3);
    EXPECT_LE(v, 3);
    const double u = r.uniform01();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(Rng, NormalHasRoughlyUnitVariance) {
  Rng r(9);
  double sum = 0, sq = 0;
  const int m = 20000;
  for (int i = 0; i < m; ++i) {
    const double x = r.normal();
    sum += x;
    sq += x * x;
  }
  EXPECT_NEAR(sum / m, 0.0, 0.05);
  EXPECT_NEAR(sq / m, 1.0, 0.05);
}
