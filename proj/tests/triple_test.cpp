// Copyright 2026 The linpencil Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "linpencil/triple.hpp"

namespace linpencil
{
namespace
{

class ResolventIdentity : public ::testing::TestWithParam<int>
{
};

TEST_P(ResolventIdentity, GoldenExample)
{
  const auto ex = fixtures::all_examples()[static_cast<std::size_t>(GetParam())];
  const auto t = make_triple(build_pencil(ex.p));
  std::mt19937_64 rng(2026);
  const auto zs = sample_points(t.pencil, 10, 2.0, rng);
  EXPECT_LE(verify_triple(t, ex.p, zs), 1e-8) << ex.name;
}

INSTANTIATE_TEST_SUITE_P(Examples, ResolventIdentity, ::testing::Range(0, 7));

TEST(ResolventIdentity, RandomPolynomialsEveryBasis)
{
  std::mt19937_64 rng(17);
  for (int kind = 0; kind < fixtures::kBasisKinds; ++kind)
  {
    for (std::size_t n = 1; n <= 3; ++n)
    {
      for (std::size_t ell : {2u, 4u, 6u})
      {
        const auto p = fixtures::random_polynomial(rng, kind, n, ell);
        const auto t = make_triple(build_pencil(p));
        const auto zs = sample_points(t.pencil, 10, 2.0, rng);
        EXPECT_LE(verify_triple(t, p, zs), 1e-8) << "kind " << kind << " n " << n << " ell " << ell;
      }
    }
  }
}

TEST(Resolvent, ThrowsAtEigenvalue)
{
  // p = (z - 2)(z - 3)
  const auto p = MatrixPolynomial::scalar(Basis::monomial(), {6.0, -5.0, 1.0});
  const auto t = make_triple(build_pencil(p));
  try
  {
    resolvent(t, 2.0);
    FAIL();
  }
  catch (const Error &e)
  {
    EXPECT_EQ(e.code(), ErrorCode::SingularPencil);
  }
  EXPECT_NEAR(std::abs(resolvent(t, 0.0)(0, 0) - 1.0 / 6.0), 0.0, 1e-15);
}

TEST(SamplePoints, AvoidNodesAndStayInDisk)
{
  std::mt19937_64 rng(8);
  const auto pc = build_pencil(fixtures::lagrange_example());
  const auto zs = sample_points(pc, 50, 1.5, rng);
  ASSERT_EQ(zs.size(), 50u);
  for (auto z : zs)
  {
    EXPECT_LE(std::abs(z), 1.5);
    for (auto t : {1.0, 0.0, -1.0})
    {
      EXPECT_GT(std::abs(z - t), 1e-3);
    }
  }
}

TEST(TripleTransforms, FlipAndSimilarityPreserveResolvent)
{
  std::mt19937_64 rng(31);
  for (int kind = 0; kind < fixtures::kBasisKinds; ++kind)
  {
    const auto p = fixtures::random_polynomial(rng, kind, 2, 3);
    const auto t = make_triple(build_pencil(p));
    const auto f = flip(t);
    const auto s = similarity(t, fixtures::random_matrix(rng, t.pencil.size(), t.pencil.size()));
    for (auto z : sample_points(t.pencil, 5, 2.0, rng))
    {
      const CMatrix r = resolvent(t, z);
      EXPECT_LE(max_abs(resolvent(f, z) - r), 1e-9);
      EXPECT_LE(max_abs(resolvent(s, z) - r), 1e-9 * std::max(1.0, max_abs(r)));
    }
  }
}

TEST(TripleTransforms, TransposedPencilWithSwappedRoles)
{
  // (Y^T, z C1^T - C0^T, X^T) inverts P^T
  const auto p = fixtures::newton_example();
  const auto t = make_triple(build_pencil(p));
  const GeneralizedStandardTriple tt{transpose(t.y), transpose(t.pencil), transpose(t.x)};
  const Complex z(0.1, 0.45);
  EXPECT_LT(max_abs(resolvent(tt, z) * transpose(evaluate(p, z)) - CMatrix::identity(2)), 1e-10);
}

TEST(StandardPair, SwapQuadratic)
{
  // z^2 - 1
  const auto p = MatrixPolynomial::scalar(Basis::monomial(), {-1.0, 0.0, 1.0});
  const auto sp = monomial_standard_pair(p);
  EXPECT_LE(standard_pair_residual(p, sp), 1e-12);
  EXPECT_EQ(sp.t, (CMatrix{{0, 1}, {1, 0}}));
  EXPECT_LT(max_abs(sp.q * sp.y - CMatrix{{0}, {1}}), 1e-15);
}

TEST(StandardPair, RandomMonicCubic)
{
  std::mt19937_64 rng(12);
  std::vector<CMatrix> c{fixtures::random_matrix(rng, 1, 1), fixtures::random_matrix(rng, 1, 1),
                         fixtures::random_matrix(rng, 1, 1), CMatrix{{1.0}}};
  const auto p = MatrixPolynomial::from_coefficients(Basis::monomial(), c);
  EXPECT_LE(standard_pair_residual(p, monomial_standard_pair(p)), 1e-10);
}

TEST(StandardPair, BlockMonic)
{
  std::mt19937_64 rng(13);
  std::vector<CMatrix> c{fixtures::random_matrix(rng, 2, 2), fixtures::random_matrix(rng, 2, 2), CMatrix::identity(2)};
  const auto p = MatrixPolynomial::from_coefficients(Basis::monomial(), c);
  EXPECT_LE(standard_pair_residual(p, monomial_standard_pair(p)), 1e-10);
}

TEST(StandardPair, Errors)
{
  const auto zi = MatrixPolynomial::scalar(Basis::monomial(), {0.0, 1.0, 0.0});
  try
  {
    monomial_standard_pair(zi);
    FAIL();
  }
  catch (const Error &e)
  {
    EXPECT_EQ(e.code(), ErrorCode::NotMonic);
  }
  try
  {
    monomial_standard_pair(MatrixPolynomial::scalar(Basis::chebyshev(), {0.0, 1.0}));
    FAIL();
  }
  catch (const Error &e)
  {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedBasis);
  }
}

}  // namespace
}  // namespace linpencil
