// Copyright 2026 The linpencil Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "fixtures.hpp"
#include "linpencil/numeric.hpp"

namespace linpencil
{
namespace
{

// Laplace expansion along the first row.
Complex cofactor_det(const CMatrix &a)
{
  const std::size_t n = a.rows();
  if (n == 1)
  {
    return a(0, 0);
  }
  Complex d{};
  for (std::size_t j = 0; j < n; ++j)
  {
    CMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
    {
      for (std::size_t c = 0, cc = 0; c < n; ++c)
      {
        if (c != j)
        {
          minor(r - 1, cc++) = a(r, c);
        }
      }
    }
    d += (j % 2 == 0 ? 1.0 : -1.0) * a(0, j) * cofactor_det(minor);
  }
  return d;
}

TEST(CMatrix, RejectsEmptyAndNonFinite)
{
  EXPECT_THROW(CMatrix(0, 3), Error);
  EXPECT_THROW(CMatrix(2, 2, std::numeric_limits<double>::quiet_NaN()), Error);
  EXPECT_THROW(CMatrix(2, 2, std::vector<Complex>(3)), Error);
  try
  {
    CMatrix(1, 1, std::vector<Complex>{Complex(0, std::numeric_limits<double>::infinity())});
    FAIL();
  }
  catch (const Error &e)
  {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
}

TEST(CMatrix, LiteralBlocksAndArithmetic)
{
  CMatrix a{{1, 2}, {3, 4}};
  EXPECT_EQ(a(1, 0), Complex(3));
  CMatrix big(4, 4);
  big.set_block(1, 2, a);
  EXPECT_EQ(big(2, 3), Complex(4));
  EXPECT_EQ(big.block(1, 2, 2, 2), a);
  EXPECT_EQ(a * CMatrix::identity(2), a);
  EXPECT_EQ((a + a) - a, a);
  EXPECT_EQ(transpose(a)(0, 1), Complex(3));
  CMatrix c{{Complex(0, 1)}};
  EXPECT_EQ(conj_transpose(c)(0, 0), Complex(0, -1));
  EXPECT_THROW(a * CMatrix(3, 3), Error);
}

TEST(CMatrix, SipReversesOrder)
{
  const CMatrix j = CMatrix::sip(3);
  const CMatrix v{{1}, {2}, {3}};
  EXPECT_EQ(j * v, (CMatrix{{3}, {2}, {1}}));
  EXPECT_EQ(j * j, CMatrix::identity(3));
}

TEST(CMatrix, KronMatchesDefinition)
{
  const CMatrix a{{1, 2}, {3, 4}};
  const CMatrix b{{0, 5}, {6, 7}};
  const CMatrix k = kron(a, b);
  ASSERT_EQ(k.rows(), 4u);
  for (std::size_t i = 0; i < 4; ++i)
  {
    for (std::size_t j = 0; j < 4; ++j)
    {
      EXPECT_EQ(k(i, j), a(i / 2, j / 2) * b(i % 2, j % 2));
    }
  }
  EXPECT_EQ(kron_identity(a, 2), kron(a, CMatrix::identity(2)));
}

TEST(LU, DeterminantMatchesCofactorExpansion)
{
  std::mt19937_64 rng(7);
  for (std::size_t n = 1; n <= 6; ++n)
  {
    const CMatrix a = fixtures::random_matrix(rng, n, n);
    const Complex exact = cofactor_det(a);
    EXPECT_LT(std::abs(determinant(a) - exact), 1e-12 * std::max(1.0, std::abs(exact))) << n;
  }
}

TEST(LU, SolveAndInverse)
{
  std::mt19937_64 rng(11);
  const CMatrix a = fixtures::random_matrix(rng, 5, 5);
  const CMatrix b = fixtures::random_matrix(rng, 5, 2);
  EXPECT_LT(max_abs(a * solve(a, b) - b), 1e-12);
  EXPECT_LT(max_abs(a * inverse(a) - CMatrix::identity(5)), 1e-12);
}

TEST(LU, UnpackReconstructsPermutedMatrix)
{
  std::mt19937_64 rng(3);
  const CMatrix a = fixtures::random_matrix(rng, 4, 4);
  const auto [p, l, u] = unpack(lu_factor(a));
  EXPECT_LT(max_abs(p * a - l * u), 1e-13);
  for (std::size_t i = 0; i < 4; ++i)
  {
    EXPECT_EQ(l(i, i), Complex(1));
    for (std::size_t j = i + 1; j < 4; ++j)
    {
      EXPECT_EQ(l(i, j), Complex{});
      EXPECT_EQ(u(j, i), Complex{});
    }
  }
}

TEST(LU, SingularMatrices)
{
  const CMatrix s{{1, 2}, {2, 4}};
  EXPECT_EQ(determinant(s), Complex{});
  const CMatrix z(3, 3);
  try
  {
    lu_factor(z);
    FAIL();
  }
  catch (const Error &e)
  {
    EXPECT_EQ(e.code(), ErrorCode::SingularMatrix);
  }
  EXPECT_EQ(determinant(z), Complex{});
}

TEST(LU, PivotRatioFlagsNearSingularity)
{
  EXPECT_DOUBLE_EQ(pivot_ratio(lu_factor(CMatrix::identity(3))), 1.0);
  const CMatrix near{{1, 1}, {1, 1 + 1e-14}};
  EXPECT_LT(pivot_ratio(lu_factor(near)), 1e-12);
}

TEST(CMatrix, Norms)
{
  const CMatrix a{{3, 0}, {0, Complex(0, 4)}};
  EXPECT_DOUBLE_EQ(frobenius_norm(a), 5.0);
  EXPECT_DOUBLE_EQ(max_abs(a), 4.0);
}

}  // namespace
}  // namespace linpencil
