#include <gtest/gtest.h>

#include <random>

#include "ordvec/error.hpp"
#include "ordvec/linalg.hpp"
#include "ordvec/random_instances.hpp"

using namespace ordvec;

TEST(Rational, ArithmeticExamples) {
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(2, 4).str(), "1/2");
  EXPECT_EQ(Rational(7, 3) * Rational(3, 7), Rational(1));
  EXPECT_EQ(Rational(-6, -4).str(), "3/2");
  EXPECT_EQ(Rational(3, -6).str(), "-1/2");
  EXPECT_EQ(Rational(0, 5).str(), "0");
}

TEST(Rational, DivisionByZeroIsInvalidInput) {
  EXPECT_THROW(Rational(1) / Rational(0), InvalidInput);
  EXPECT_THROW(Rational(1, 0), InvalidInput);
  EXPECT_THROW(inverse(Rational(0)), InvalidInput);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("-3/7"), Rational(-3, 7));
  EXPECT_EQ(Rational::parse(" 5 "), Rational(5));
  EXPECT_EQ(Rational::parse("4/6"), Rational(2, 3));
  EXPECT_EQ(Rational::parse("123456789012345678901234567890").str(), "123456789012345678901234567890");
  for (const char* bad : {"", "1/", "/2", "1/0", "a", "1.5", "1/-2", "--1", "1 2"}) {
    EXPECT_THROW(Rational::parse(bad), InvalidInput) << bad;
  }
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(abs(Rational(-2, 3)), Rational(2, 3));
  EXPECT_EQ(Rational(-2, 3).sign(), -1);
  EXPECT_TRUE(Rational(4, 2).is_integer());
}

TEST(Rational, FieldAxiomsOnSamples) {
  Sampler rng(7);
  for (int i = 0; i < 300; ++i) {
    Rational a = rng.rational(-20, 20, 17), b = rng.rational(-20, 20, 13), c = rng.rational(-20, 20, 11);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a - a, Rational(0));
    if (!a.is_zero()) EXPECT_EQ(a * inverse(a), Rational(1));
  }
}

TEST(Rational, LargeValuesStayExact) {
  Rational x(1);
  for (int i = 0; i < 200; ++i) x *= Rational(3, 2);
  for (int i = 0; i < 200; ++i) x /= Rational(3, 2);
  EXPECT_EQ(x, Rational(1));
}

TEST(RVector, Basics) {
  RVector v{1, -2, Rational(1, 2)};
  EXPECT_EQ(v.dim(), 3U);
  EXPECT_EQ(v.sum(), Rational(-1, 2));
  EXPECT_EQ(v.l1(), Rational(7, 2));
  EXPECT_FALSE(v.nonnegative());
  EXPECT_EQ(dot(v, RVector{2, 1, 4}), Rational(2));
  EXPECT_EQ(v.str(), "(1, -2, 1/2)");
  EXPECT_EQ(RVector::unit(3, 1), (RVector{0, 1, 0}));
  EXPECT_THROW(v + (RVector{1, 2}), DimensionMismatch);
}

TEST(SolveLinear, Examples) {
  auto id = solve_linear(RMatrix::identity(2), RVector{1, -2});
  ASSERT_EQ(id.status, LinearSolveResult::Status::Unique);
  EXPECT_EQ(id.solution, (RVector{1, -2}));

  EXPECT_EQ(solve_linear(RMatrix{{1, 1}, {1, 1}}, RVector{1, 2}).status, LinearSolveResult::Status::NoSolution);

  auto diag = solve_linear(RMatrix{{2, 0}, {0, 4}}, RVector{1, 1});
  ASSERT_EQ(diag.status, LinearSolveResult::Status::Unique);
  EXPECT_EQ(diag.solution, (RVector{Rational(1, 2), Rational(1, 4)}));

  auto under = solve_linear(RMatrix{{1, 1}}, RVector{3});
  EXPECT_EQ(under.status, LinearSolveResult::Status::Underdetermined);
  EXPECT_EQ(RMatrix({{1, 1}}) * under.solution, RVector{3});

  EXPECT_THROW(solve_linear(RMatrix::identity(2), RVector{1}), DimensionMismatch);
}

TEST(SolveLinear, RandomSystemsSatisfyEquations) {
  Sampler rng(11);
  for (int i = 0; i < 200; ++i) {
    auto r = static_cast<std::size_t>(rng.integer(1, 6));
    auto c = static_cast<std::size_t>(rng.integer(1, 6));
    RMatrix a(r, c);
    for (std::size_t x = 0; x < r; ++x)
      for (std::size_t y = 0; y < c; ++y) a(x, y) = rng.rational(-3, 3, 2);
    RVector b = rng.coin() ? a * rng.vector(c, -3, 3, 3) : rng.vector(r, -3, 3);
    auto s = solve_linear(a, b);
    if (s.status != LinearSolveResult::Status::NoSolution) {
      EXPECT_EQ(a * s.solution, b);
      EXPECT_EQ(s.status == LinearSolveResult::Status::Unique, s.rank == c);
    } else {
      // Inconsistent: appending b raises the rank.
      RMatrix ab(r, c + 1);
      for (std::size_t x = 0; x < r; ++x) {
        for (std::size_t y = 0; y < c; ++y) ab(x, y) = a(x, y);
        ab(x, c) = b[x];
      }
      EXPECT_EQ(rank(ab), rank(a) + 1);
    }
  }
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(RMatrix::identity(3)), 3U);
  EXPECT_EQ(rank(RMatrix(3, 3)), 0U);
  EXPECT_EQ(rank(RMatrix{{1, 2}, {2, 4}}), 1U);
  EXPECT_EQ(rank(RMatrix(0, 4)), 0U);
}

TEST(Rank, TransposeInvariantAndNullSpace) {
  Sampler rng(3);
  for (int i = 0; i < 100; ++i) {
    auto r = static_cast<std::size_t>(rng.integer(1, 8));
    auto c = static_cast<std::size_t>(rng.integer(1, 8));
    RMatrix a(r, c);
    for (std::size_t x = 0; x < r; ++x)
      for (std::size_t y = 0; y < c; ++y) a(x, y) = Rational(rng.integer(-2, 2));
    EXPECT_EQ(rank(a), rank(a.transpose()));
    auto ns = null_space(a);
    EXPECT_EQ(ns.size(), c - rank(a));
    for (const auto& n : ns) EXPECT_TRUE((a * n).is_zero());
  }
}

TEST(RMatrix, Products) {
  RMatrix a{{1, 2}, {3, 4}};
  EXPECT_EQ(a * (RVector{1, 1}), (RVector{3, 7}));
  EXPECT_EQ(a * RMatrix::identity(2), a);
  EXPECT_EQ(a.transpose()(0, 1), Rational(3));
  EXPECT_EQ(a.col(1), (RVector{2, 4}));
}
