// Copyright 2026 The linpencil Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "basis.hpp"
#include "matpoly.hpp"
#include "numeric.hpp"

namespace linpencil
{

/// The linearization z*c1 - c0 of a matrix polynomial together with the
/// provenance needed to attach X and Y later.
struct CompanionPencil
{
  CMatrix c1;
  CMatrix c0;
  std::size_t n = 0;    // block dimension
  std::size_t ell = 0;  // grade of the source polynomial
  Basis basis = Basis::monomial();

  std::size_t size() const noexcept { return c1.rows(); }
  std::size_t blocks() const noexcept { return c1.rows() / n; }

  /// z*c1 - c0
  CMatrix at(Complex z) const { return z * c1 - c0; }
};

/// Companion pencil for a three-term-recurrence basis:
///   C1 = diag(P_ℓ/α_{ℓ-1}, I, ..., I)
///   C0 = [ -P_{ℓ-1} + (β_{ℓ-1}/α_{ℓ-1})P_ℓ   -P_{ℓ-2} + (γ_{ℓ-1}/α_{ℓ-1})P_ℓ   -P_{ℓ-3} ... -P_0 ]
///        [ α_{ℓ-2}I   β_{ℓ-2}I   γ_{ℓ-2}I                                                     ]
///        [            ...                                                                     ]
///        [                                   α_0 I   β_0 I                                    ]
/// Grade 1 degenerates to the n x n pencil (P_1/α_0, β_0 P_1/α_0 - P_0).
inline CompanionPencil build_three_term(const MatrixPolynomial &p)
{
  const auto &basis = p.basis();
  if (!basis.is_three_term())
  {
    throw Error(ErrorCode::UnsupportedBasis, "build_three_term needs a three-term basis");
  }
  const std::size_t l = p.grade();
  if (l < 1)
  {
    throw Error(ErrorCode::GradeTooSmall, "a pencil needs grade at least 1");
  }
  const std::size_t n = p.n();
  const auto &c = p.coefficients();
  const std::size_t size = n * l;

  CMatrix c1 = CMatrix::identity(size);
  CMatrix c0(size, size);
  const auto top = recurrence_row(basis, l - 1);
  c1.set_block(0, 0, c[l] * (1.0 / top.alpha));

  for (std::size_t j = 0; j < l; ++j)
  {
    c0.set_block(0, j * n, -c[l - 1 - j]);
  }
  c0.set_block(0, 0, c0.block(0, 0, n, n) + (top.beta / top.alpha) * c[l]);
  if (l >= 2)
  {
    c0.set_block(0, n, c0.block(0, n, n, n) + (top.gamma / top.alpha) * c[l]);
  }
  for (std::size_t i = 1; i < l; ++i)
  {
    const auto r = recurrence_row(basis, l - 1 - i);
    c0.set_scaled_identity(i * n, (i - 1) * n, n, r.alpha);
    c0.set_scaled_identity(i * n, i * n, n, r.beta);
    if (i + 1 < l)
    {
      c0.set_scaled_identity(i * n, (i + 1) * n, n, r.gamma);
    }
  }
  return {std::move(c1), std::move(c0), n, l, basis};
}

/// Bernstein companion pencil on [0, 1]. C0 carries -P_{ℓ-1} ... -P_0 across
/// its first block row over an identity subdiagonal; C1 repeats that pattern
/// with P_ℓ/ℓ added to the corner and (k+1)/(ℓ-k) on the diagonal of block
/// row k.
inline CompanionPencil build_bernstein(const MatrixPolynomial &p)
{
  const auto &basis = p.basis();
  if (!basis.is_bernstein())
  {
    throw Error(ErrorCode::UnsupportedBasis, "build_bernstein needs a Bernstein basis");
  }
  const std::size_t l = p.grade();
  if (l < 1)
  {
    throw Error(ErrorCode::GradeTooSmall, "a pencil needs grade at least 1");
  }
  const std::size_t n = p.n();
  const auto &c = p.coefficients();
  const std::size_t size = n * l;

  CMatrix c0(size, size);
  for (std::size_t j = 0; j < l; ++j)
  {
    c0.set_block(0, j * n, -c[l - 1 - j]);
  }
  for (std::size_t i = 1; i < l; ++i)
  {
    c0.set_scaled_identity(i * n, (i - 1) * n, n, 1.0);
  }
  CMatrix c1 = c0;
  c1.set_block(0, 0, c0.block(0, 0, n, n) + (1.0 / static_cast<double>(l)) * c[l]);
  for (std::size_t i = 1; i < l; ++i)
  {
    c1.set_scaled_identity(i * n, i * n, n, static_cast<double>(i + 1) / static_cast<double>(l - i));
  }
  return {std::move(c1), std::move(c0), n, l, basis};
}

/// Lagrange pencil of size (ℓ+2)n: C1 = diag(0, I, ..., I) and C0 the
/// bordered arrowhead with -ρ_k across the top, β_k I down the first block
/// column and τ_k I on the diagonal.
inline CompanionPencil build_lagrange(const MatrixPolynomial &p)
{
  const auto &basis = p.basis();
  if (!basis.is_lagrange())
  {
    throw Error(ErrorCode::UnsupportedBasis, "build_lagrange needs a Lagrange basis");
  }
  const auto &tau = basis.lagrange().nodes;
  const auto &rho = p.samples();
  const auto beta = barycentric_weights(basis);
  const std::size_t n = p.n();
  const std::size_t size = n * (tau.size() + 1);

  CMatrix c1 = CMatrix::identity(size);
  c1.set_scaled_identity(0, 0, n, 0.0);
  CMatrix c0(size, size);
  for (std::size_t k = 0; k < tau.size(); ++k)
  {
    const std::size_t off = (k + 1) * n;
    c0.set_block(0, off, -rho[k]);
    c0.set_scaled_identity(off, 0, n, beta[k]);
    c0.set_scaled_identity(off, off, n, tau[k]);
  }
  return {std::move(c1), std::move(c0), n, p.grade(), basis};
}

/// Hermite pencil: the Lagrange arrowhead with one transposed Jordan block
/// per node. Inside node i the columns carry -ρ_{i,s_i-1}, ..., -ρ_{i,0}.
inline CompanionPencil build_hermite(const MatrixPolynomial &p)
{
  const auto &basis = p.basis();
  if (!basis.is_hermite())
  {
    throw Error(ErrorCode::UnsupportedBasis, "build_hermite needs a Hermite basis");
  }
  const auto &h = basis.hermite();
  const auto &rho = p.hermite_samples();
  const auto beta = barycentric_weights(basis);
  const std::size_t n = p.n();
  const std::size_t size = n * (p.grade() + 2);

  CMatrix c1 = CMatrix::identity(size);
  c1.set_scaled_identity(0, 0, n, 0.0);
  CMatrix c0(size, size);
  std::size_t col = 1;
  std::size_t w = 0;
  for (std::size_t i = 0; i < h.nodes.size(); ++i)
  {
    const std::size_t s = h.confluencies[i];
    for (std::size_t b = 0; b < s; ++b, ++col, ++w)
    {
      const std::size_t off = col * n;
      c0.set_block(0, off, -rho[i][s - 1 - b]);
      c0.set_scaled_identity(off, 0, n, beta[w]);
      c0.set_scaled_identity(off, off, n, h.nodes[i]);
      if (b > 0)
      {
        c0.set_scaled_identity(off, off - n, n, 1.0);
      }
    }
  }
  return {std::move(c1), std::move(c0), n, p.grade(), basis};
}

/// Dispatches on the polynomial's basis.
inline CompanionPencil build_pencil(const MatrixPolynomial &p)
{
  const auto &b = p.basis();
  if (b.is_three_term())
  {
    return build_three_term(p);
  }
  if (b.is_bernstein())
  {
    return build_bernstein(p);
  }
  if (b.is_lagrange())
  {
    return build_lagrange(p);
  }
  return build_hermite(p);
}

/// Constant κ with det(z*C1 - C0) = κ * det P(z). The recurrence rows of a
/// three-term pencil contribute Π_{k=0}^{ℓ-2} α_k per block column; every
/// other construction here has κ = 1.
inline Complex determinant_scale(const CompanionPencil &pc)
{
  if (!pc.basis.is_three_term())
  {
    return 1.0;
  }
  Complex kappa = 1.0;
  for (std::size_t k = 0; k + 1 < pc.ell; ++k)
  {
    const Complex a = recurrence_row(pc.basis, k).alpha;
    for (std::size_t r = 0; r < pc.n; ++r)
    {
      kappa *= a;
    }
  }
  return kappa;
}

/// Conjugation by the anti-identity J: (J C1 J, J C0 J).
inline CompanionPencil flip(const CompanionPencil &pc)
{
  const std::size_t size = pc.size();
  CompanionPencil out = pc;
  for (std::size_t i = 0; i < size; ++i)
  {
    for (std::size_t j = 0; j < size; ++j)
    {
      out.c1(i, j) = pc.c1(size - 1 - i, size - 1 - j);
      out.c0(i, j) = pc.c0(size - 1 - i, size - 1 - j);
    }
  }
  return out;
}

inline CompanionPencil transpose(const CompanionPencil &pc)
{
  CompanionPencil out = pc;
  out.c1 = transpose(pc.c1);
  out.c0 = transpose(pc.c0);
  return out;
}

/// (S^{-1} C1 S, S^{-1} C0 S).
inline CompanionPencil similarity(const CompanionPencil &pc, const CMatrix &s)
{
  if (!s.square() || s.rows() != pc.size())
  {
    throw Error(ErrorCode::DimensionMismatch, "similarity matrix must match the pencil size");
  }
  const auto f = lu_factor(s);
  CompanionPencil out = pc;
  out.c1 = solve(f, pc.c1 * s);
  out.c0 = solve(f, pc.c0 * s);
  return out;
}

}  // namespace linpencil
