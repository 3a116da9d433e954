#include <random>

#include <gtest/gtest.h>

#include "kostka/exactla.hpp"

using namespace kostka;

TEST(Rational, ReducesAndKeepsDenominatorPositive) {
  const Rational q(6, -4);
  EXPECT_EQ(q.num(), -3);
  EXPECT_EQ(q.den(), 2);
  EXPECT_EQ(q.str(), "-3/2");
  EXPECT_EQ(Rational(4, 2).str(), "2");
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_THROW(Rational::parse("1/"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, ArithmeticAndOrdering) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(-4, 9), Rational(-3, 2));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
}

TEST(Rational, OverflowThrows) {
  const Rational big(INT64_MAX / 2 + 1);
  EXPECT_THROW(big + big, ArithmeticOverflow);
  EXPECT_THROW(big * Rational(3), ArithmeticOverflow);
}

TEST(Solve, Examples) {
  const auto one = solve(RatMatrix{{2}}, RatVector{1});
  ASSERT_TRUE(one.ok());
  EXPECT_EQ(one.x, (RatVector{Rational(1, 2)}));

  // Hand elimination: 2x - y = 1, -2x + 2y = 0 gives y = x, x = 1.
  const auto c2 = solve(RatMatrix{{2, -1}, {-2, 2}}, RatVector{1, 0});
  ASSERT_TRUE(c2.ok());
  EXPECT_EQ(c2.x, (RatVector{1, 1}));

  EXPECT_EQ(solve(RatMatrix{{1, 1}, {2, 2}}, RatVector{1, 3}).status, SolveStatus::NoSolution);
  EXPECT_EQ(solve(RatMatrix{{1, 1}, {2, 2}}, RatVector{1, 2}).status, SolveStatus::NonUnique);
}

TEST(Inverse, Examples) {
  EXPECT_EQ(inverse(RatMatrix{{2}}), (RatMatrix{{Rational(1, 2)}}));
  // Inverse of the C2 Cartan matrix is (1/2)[[2,1],[2,2]].
  EXPECT_EQ(inverse(RatMatrix{{2, -1}, {-2, 2}}), (RatMatrix{{1, Rational(1, 2)}, {1, 1}}));
  EXPECT_EQ(inverse(RatMatrix::identity(3)), RatMatrix::identity(3));
  EXPECT_THROW(inverse(RatMatrix{{1, 2}, {2, 4}}), SingularMatrix);
  EXPECT_THROW(inverse(RatMatrix(2, 3)), DimensionMismatch);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(RatMatrix(2, 2)), 0U);
  EXPECT_EQ(rank(RatMatrix::identity(4)), 4U);
  EXPECT_EQ(rank(RatMatrix{{1, 2}, {2, 4}}), 1U);
  EXPECT_EQ(nullspace_dim(RatMatrix::identity(3)), 0U);
  EXPECT_EQ(nullspace_dim(RatMatrix(1, 3)), 3U);
  EXPECT_EQ(nullspace_dim(RatMatrix{{1, -1}}), 1U);
}

TEST(Determinant, SmallCases) {
  EXPECT_EQ(determinant(RatMatrix{{2, -1}, {-2, 2}}), Rational(2));
  EXPECT_EQ(determinant(RatMatrix{{0, 1}, {1, 0}}), Rational(-1));
  EXPECT_EQ(determinant(RatMatrix{{1, 2}, {2, 4}}), Rational(0));
}

namespace {

RatMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> entry(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(entry(rng), den(rng));
  return m;
}

}  // namespace

TEST(ExactLaProperties, InverseRoundTripAndSolve) {
  std::mt19937_64 rng(7);
  int invertible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const RatMatrix a = random_matrix(rng, n, n);
    if (determinant(a).is_zero()) {
      EXPECT_LT(rank(a), n);
      continue;
    }
    ++invertible;
    const RatMatrix inv = inverse(a);
    EXPECT_EQ(a * inv, RatMatrix::identity(n));
    EXPECT_EQ(inverse(inv), a);

    const RatVector b = random_matrix(rng, n, 1).column(0);
    const auto sol = solve(a, b);
    ASSERT_TRUE(sol.ok());
    EXPECT_EQ(a * sol.x, b);
  }
  EXPECT_GT(invertible, 200);
}

TEST(ExactLaProperties, RankOfTransposeAndNullspace) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + trial % 5, cols = 1 + (trial / 5) % 6;
    RatMatrix a = random_matrix(rng, rows, cols);
    if (rows > 1 && trial % 3 == 0)  // force a dependent row
      for (std::size_t c = 0; c < cols; ++c) a(rows - 1, c) = a(0, c) * Rational(2);
    EXPECT_EQ(rank(a), rank(a.transpose()));
    const auto basis = nullspace_basis(a);
    EXPECT_EQ(basis.size(), nullspace_dim(a));
    for (const auto& v : basis) EXPECT_TRUE(is_zero(a * v));
  }
}
