// Copyright 2026 The linpencil Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <random>
#include <span>
#include <sstream>
#include <vector>

#include "basis.hpp"
#include "matpoly.hpp"
#include "numeric.hpp"
#include "pencil.hpp"

namespace linpencil
{

/// (X, z*C1 - C0, Y) with P(z)^{-1} = X (z*C1 - C0)^{-1} Y away from the
/// spectrum.
struct GeneralizedStandardTriple
{
  CMatrix x;  // n x N
  CompanionPencil pencil;
  CMatrix y;  // N x n
};

/// Samples whose pencil LU has pivot ratio below this are treated as lying on
/// (or numerically at) a generalized eigenvalue.
inline constexpr double kEigenProximityRatio = 1e-12;

namespace detail
{

inline std::string format_z(Complex z)
{
  std::ostringstream os;
  os.precision(17);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

}  // namespace detail

/// X = (coefficients of 1) ⊗ I_n, Y = [I_n 0 ... 0]^T.
inline GeneralizedStandardTriple make_triple(const CompanionPencil &pc)
{
  const auto e = one_coefficients(pc.basis, pc.ell);
  if (e.size() != pc.blocks())
  {
    throw Error(ErrorCode::DimensionMismatch, "basis structure does not match the pencil size");
  }
  CMatrix row(1, e.size(), std::vector<Complex>(e.begin(), e.end()));
  CMatrix first(pc.blocks(), 1);
  first(0, 0) = 1.0;
  return {kron_identity(row, pc.n), pc, kron_identity(first, pc.n)};
}

/// X (z*C1 - C0)^{-1} Y. Throws SingularPencil when z is (numerically) a
/// generalized eigenvalue.
inline CMatrix resolvent(const GeneralizedStandardTriple &t, Complex z)
{
  LUFactors f;
  try
  {
    f = lu_factor(t.pencil.at(z));
  }
  catch (const Error &e)
  {
    if (e.code() == ErrorCode::SingularMatrix)
    {
      throw Error(ErrorCode::SingularPencil, "z = " + detail::format_z(z));
    }
    throw;
  }
  if (pivot_ratio(f) < kEigenProximityRatio)
  {
    throw Error(ErrorCode::SingularPencil, "z = " + detail::format_z(z) + " is numerically an eigenvalue");
  }
  return t.x * solve(f, t.y);
}

/// max over zs of ||X(zC1-C0)^{-1}Y P(z) - I||_F.
inline double verify_triple(const GeneralizedStandardTriple &t, const MatrixPolynomial &p,
                            std::span<const Complex> zs)
{
  if (t.x.rows() != p.n())
  {
    throw Error(ErrorCode::DimensionMismatch, "triple and polynomial block sizes differ");
  }
  const CMatrix eye = CMatrix::identity(p.n());
  double worst = 0.0;
  for (auto z : zs)
  {
    worst = std::max(worst, frobenius_norm(resolvent(t, z) * evaluate(p, z) - eye));
  }
  return worst;
}

/// Random sample points in the disk |z| <= radius that stay away from the
/// interpolation nodes and from the pencil's spectrum (resampling when the
/// pencil LU is nearly singular).
template <class Rng>
std::vector<Complex> sample_points(const CompanionPencil &pc, std::size_t count, double radius, Rng &rng)
{
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Complex> nodes;
  if (pc.basis.is_lagrange())
  {
    nodes = pc.basis.lagrange().nodes;
  }
  else if (pc.basis.is_hermite())
  {
    nodes = pc.basis.hermite().nodes;
  }
  std::vector<Complex> zs;
  for (std::size_t attempts = 0; zs.size() < count; ++attempts)
  {
    if (attempts > 100 * count + 100)
    {
      throw Error(ErrorCode::SingularPencilEverywhere, "could not find regular sample points");
    }
    const double r = radius * std::sqrt(unit(rng));
    const double th = 2.0 * std::numbers::pi * unit(rng);
    const Complex z = std::polar(r, th);
    const bool near_node = std::any_of(nodes.begin(), nodes.end(),
                                       [&](Complex t) { return std::abs(z - t) < 1e-3; });
    if (near_node)
    {
      continue;
    }
    try
    {
      if (pivot_ratio(lu_factor(pc.at(z))) < kEigenProximityRatio)
      {
        continue;
      }
    }
    catch (const Error &)
    {
      continue;
    }
    zs.push_back(z);
  }
  return zs;
}

/// The triple of the flipped pencil: (XJ, J(zC1-C0)J, JY).
inline GeneralizedStandardTriple flip(const GeneralizedStandardTriple &t)
{
  const CMatrix j = CMatrix::sip(t.pencil.size());
  return {t.x * j, flip(t.pencil), j * t.y};
}

/// (XS, S^{-1}(zC1-C0)S, S^{-1}Y).
inline GeneralizedStandardTriple similarity(const GeneralizedStandardTriple &t, const CMatrix &s)
{
  const auto f = lu_factor(s);
  return {t.x * s, similarity(t.pencil, s), solve(f, t.y)};
}

// ---------------------------------------------------------------------------
// Classical standard pair of a monic monomial polynomial

struct StandardPair
{
  CMatrix x;  // n x nℓ
  CMatrix t;  // nℓ x nℓ
  CMatrix q;  // [X; XT; ...; XT^{ℓ-1}]
  CMatrix y;  // Q^{-1} [0 ... 0 I]^T
};

/// ||Σ P_k X T^k||_F
inline double standard_pair_residual(const MatrixPolynomial &p, const StandardPair &sp)
{
  const auto &c = p.coefficients();
  CMatrix xt = sp.x;
  CMatrix acc = c[0] * xt;
  for (std::size_t k = 1; k < c.size(); ++k)
  {
    xt = xt * sp.t;
    acc += c[k] * xt;
  }
  return frobenius_norm(acc);
}

inline StandardPair monomial_standard_pair(const MatrixPolynomial &p)
{
  const auto &basis = p.basis();
  if (!basis.is_three_term() || basis.three_term().kind != ThreeTermKind::Monomial)
  {
    throw Error(ErrorCode::UnsupportedBasis, "standard pairs are defined for the monomial basis");
  }
  const std::size_t n = p.n();
  const std::size_t l = p.grade();
  if (l < 1)
  {
    throw Error(ErrorCode::GradeTooSmall, "grade must be at least 1");
  }
  if (max_abs(p.coefficients()[l] - CMatrix::identity(n)) > 1e-14)
  {
    throw Error(ErrorCode::NotMonic, "leading coefficient is not the identity");
  }
  const auto pc = build_three_term(p);
  const std::size_t size = n * l;
  CMatrix x(n, size);
  x.set_scaled_identity(0, size - n, n, 1.0);

  // C1 = I, so T = C0.
  CMatrix q(size, size);
  CMatrix xt = x;
  for (std::size_t k = 0; k < l; ++k)
  {
    q.set_block(k * n, 0, xt);
    xt = xt * pc.c0;
  }
  CMatrix rhs(size, n);
  rhs.set_scaled_identity(size - n, 0, n, 1.0);
  LUFactors f;
  try
  {
    f = lu_factor(q);
  }
  catch (const Error &)
  {
    throw Error(ErrorCode::SingularMatrix, "Q is singular");
  }
  CMatrix y = solve(f, rhs);
  return {std::move(x), pc.c0, std::move(q), std::move(y)};
}

}  // namespace linpencil
