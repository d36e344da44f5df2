// Copyright 2026 The linpencil Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "basis.hpp"
#include "matpoly.hpp"
#include "numeric.hpp"
#include "pencil.hpp"

namespace linpencil
{

enum class EquivalenceDirection
{
  ToMonomial,    // E·C_φ·F = C_m
  FromMonomial,  // E·C_m·F = C_φ
};

inline const char *to_string(EquivalenceDirection d)
{
  return d == EquivalenceDirection::ToMonomial ? "to_monomial" : "from_monomial";
}

struct EquivalencePair
{
  CMatrix e;
  CMatrix f;
  EquivalenceDirection direction = EquivalenceDirection::ToMonomial;
  CompanionPencil monomial;  // the monomial companion pencil on the other side
};

/// Monomial companion pencil for coefficients B_0..B_g (ascending).
inline CompanionPencil monomial_pencil(std::vector<CMatrix> b)
{
  return build_three_term(MatrixPolynomial::from_coefficients(Basis::monomial(), std::move(b)));
}

inline double verify_equivalence(const EquivalencePair &pair, const CompanionPencil &phi,
                                  const CompanionPencil &mono)
{
  const std::size_t s = pair.e.rows();
  if (phi.size() != s || mono.size() != s || pair.f.rows() != s || !pair.e.square() || !pair.f.square())
  {
    throw Error(ErrorCode::DimensionMismatch, "equivalence matrices and pencils differ in size");
  }
  const bool to = pair.direction == EquivalenceDirection::ToMonomial;
  const auto &src = to ? phi : mono;
  const auto &dst = to ? mono : phi;
  return std::max(max_abs(pair.e * src.c0 * pair.f - dst.c0), max_abs(pair.e * src.c1 * pair.f - dst.c1));
}

inline double verify_equivalence(const EquivalencePair &pair, const CompanionPencil &phi)
{
  return verify_equivalence(pair, phi, pair.monomial);
}

/// E, F with E·C_{0,φ}·F = C_{0,m} and E·C_{1,φ}·F = C_{1,m}, where F = Φ⊗I
/// and E is solved from the C0 equation. Three-term and Bernstein bases.
inline EquivalencePair equivalence_degree_graded(const MatrixPolynomial &p, double tol = 1e-10)
{
  const auto &basis = p.basis();
  if (basis.is_interpolational())
  {
    throw Error(ErrorCode::UnsupportedBasis, "degree-graded equivalence needs a three-term or Bernstein basis");
  }
  if (p.grade() < 2)
  {
    throw Error(ErrorCode::GradeTooSmall, "equivalence needs grade at least 2");
  }
  const auto pc = build_pencil(p);
  auto mono = monomial_pencil(monomial_coefficients(p));
  CMatrix f = kron_identity(null_vector_basis_matrix(basis, p.grade()), p.n());

  LUFactors c0f;
  try
  {
    c0f = lu_factor(pc.c0);
  }
  catch (const Error &)
  {
    throw Error(ErrorCode::SingularC0, "C0 of the basis pencil is singular");
  }
  if (pivot_ratio(c0f) < 1e-14)
  {
    throw Error(ErrorCode::SingularC0, "C0 of the basis pencil is numerically singular");
  }
  // E = C0m F^{-1} C0φ^{-1}  <=>  E^T = C0φ^{-T} F^{-T} C0m^T
  const CMatrix finv = inverse(f);
  const CMatrix et = solve(lu_factor(transpose(pc.c0)), transpose(mono.c0 * finv));
  EquivalencePair pair{transpose(et), std::move(f), EquivalenceDirection::ToMonomial, std::move(mono)};

  const double scale = std::max(1.0, max_abs(pair.monomial.c1));
  if (max_abs(pair.e * pc.c1 * pair.f - pair.monomial.c1) > tol * scale)
  {
    throw Error(ErrorCode::EquivalenceFailed, "the C1 equation does not hold");
  }
  return pair;
}

/// Lagrange nodes τ_0..τ_ℓ: E = diag(I, V⊗I) with V(i, k) = τ_k^{ℓ-i},
/// F = Φ⊗I (row ω, then the Lagrange polynomials). The monomial side is the
/// companion pencil of the same polynomial read at grade ℓ+2.
inline EquivalencePair equivalence_lagrange(const MatrixPolynomial &p)
{
  const auto &basis = p.basis();
  if (!basis.is_lagrange())
  {
    throw Error(ErrorCode::UnsupportedBasis, "Lagrange equivalence needs a Lagrange basis");
  }
  const auto &tau = basis.lagrange().nodes;
  const std::size_t m = tau.size();  // ℓ + 1
  const std::size_t n = p.n();
  const CMatrix phi = null_vector_basis_matrix(basis, m - 1);

  CMatrix e(m + 1, m + 1);
  e(0, 0) = 1.0;
  for (std::size_t k = 0; k < m; ++k)
  {
    Complex pw = 1.0;
    for (std::size_t i = m; i-- > 0;)
    {
      e(i + 1, k + 1) = pw;
      pw *= tau[k];
    }
  }

  // Monomial coefficients B_j = Σ_k ρ_k · [ℓ_k]_j, padded with two zeros.
  const auto &rho = p.samples();
  std::vector<CMatrix> b(m + 2, CMatrix(n, n));
  for (std::size_t k = 0; k < m; ++k)
  {
    for (std::size_t j = 0; j < m; ++j)
    {
      // phi row k+1, column c holds the coefficient of z^{m-c}
      const Complex w = phi(k + 1, m - j);
      if (w != Complex{})
      {
        b[j] += w * rho[k];
      }
    }
  }
  return {kron_identity(e, n), kron_identity(phi, n), EquivalenceDirection::ToMonomial,
          monomial_pencil(std::move(b))};
}

/// Dispatch on the basis.
inline EquivalencePair equivalence(const MatrixPolynomial &p)
{
  return p.basis().is_lagrange() ? equivalence_lagrange(p) : equivalence_degree_graded(p);
}

}  // namespace linpencil
