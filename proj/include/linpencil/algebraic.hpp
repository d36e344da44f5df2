// Copyright 2026 The linpencil Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "matpoly.hpp"
#include "numeric.hpp"
#include "triple.hpp"

namespace linpencil
{

/// Pencil z*dh - eh for H(z) = z A(z) B(z) + C, assembled from triples of A
/// and B:
///
///   dh = [ D_A          ]      eh = [ E_A   0     -Y_A C X_B ]
///        [      I_n     ]           [ -X_A  0      0         ]
///        [          D_B ]           [ 0     -Y_B   E_B       ]
struct AlgebraicLinearization
{
  CMatrix dh;
  CMatrix eh;
  std::size_t na = 0;
  std::size_t nb = 0;
  std::size_t n = 0;

  std::size_t size() const noexcept { return dh.rows(); }
  CMatrix at(Complex z) const { return z * dh - eh; }
};

inline AlgebraicLinearization build_algebraic(const GeneralizedStandardTriple &ta,
                                              const GeneralizedStandardTriple &tb, const CMatrix &c)
{
  const std::size_t n = ta.x.rows();
  if (tb.x.rows() != n || c.rows() != n || c.cols() != n)
  {
    throw Error(ErrorCode::DimensionMismatch, "A, B and C must share the block dimension");
  }
  const std::size_t na = ta.pencil.size();
  const std::size_t nb = tb.pencil.size();
  if (ta.y.rows() != na || tb.y.rows() != nb || ta.x.cols() != na || tb.x.cols() != nb)
  {
    throw Error(ErrorCode::DimensionMismatch, "triple X/Y sizes do not match their pencils");
  }
  const std::size_t size = na + n + nb;
  const CMatrix eye = CMatrix::identity(n);

  CMatrix dh = block_diagonal({&ta.pencil.c1, &eye, &tb.pencil.c1});
  CMatrix eh(size, size);
  eh.set_block(0, 0, ta.pencil.c0);
  eh.set_block(0, na + n, -(ta.y * c * tb.x));
  eh.set_block(na, 0, -ta.x);
  eh.set_block(na + n, na, -tb.y);
  eh.set_block(na + n, na + n, tb.pencil.c0);
  return {std::move(dh), std::move(eh), na, nb, n};
}

/// Result of the determinant-ratio check.
struct AlgebraicCheck
{
  double spread = 0.0;  // max |r(z) - mean| / |mean|
  Complex kappa;        // mean ratio det(z dh - eh) / det H(z)
};

/// det(z*dh - eh) / det(H(z)) at each z, with H supplied as a callable.
inline AlgebraicCheck verify_algebraic(const AlgebraicLinearization &al,
                                       const std::function<CMatrix(Complex)> &h,
                                       std::span<const Complex> zs)
{
  if (zs.empty())
  {
    throw Error(ErrorCode::InvalidArgument, "no sample points");
  }
  std::vector<Complex> ratios;
  ratios.reserve(zs.size());
  for (auto z : zs)
  {
    const Complex dh = determinant(h(z));
    if (dh == Complex{})
    {
      throw Error(ErrorCode::SingularPencil, "H is singular at z = " + detail::format_z(z));
    }
    ratios.push_back(determinant(al.at(z)) / dh);
  }
  Complex mean{};
  for (auto r : ratios)
  {
    mean += r;
  }
  mean /= static_cast<double>(ratios.size());
  if (mean == Complex{})
  {
    return {std::numeric_limits<double>::infinity(), mean};
  }
  double spread = 0.0;
  for (auto r : ratios)
  {
    spread = std::max(spread, std::abs(r - mean) / std::abs(mean));
  }
  return {spread, mean};
}

/// H(z) = z A(z) B(z) + C.
inline CMatrix evaluate_algebraic(const MatrixPolynomial &a, const MatrixPolynomial &b, const CMatrix &c,
                                  Complex z)
{
  return z * (evaluate(a, z) * evaluate(b, z)) + c;
}

inline AlgebraicCheck verify_algebraic(const AlgebraicLinearization &al, const MatrixPolynomial &a,
                                       const MatrixPolynomial &b, const CMatrix &c,
                                       std::span<const Complex> zs)
{
  return verify_algebraic(
      al, [&](Complex z) { return evaluate_algebraic(a, b, c, z); }, zs);
}

/// A triple for H itself, (X_H, z*dh - eh, Y_H) with X_H = [0 0 X_B] and
/// Y_H = [Y_A; 0; 0]. Feeding it back into build_algebraic composes
/// linearizations recursively.
inline GeneralizedStandardTriple algebraic_triple(const AlgebraicLinearization &al,
                                                  const GeneralizedStandardTriple &ta,
                                                  const GeneralizedStandardTriple &tb)
{
  CMatrix x(al.n, al.size());
  x.set_block(0, al.na + al.n, tb.x);
  CMatrix y(al.size(), al.n);
  y.set_block(0, 0, ta.y);
  CompanionPencil pc{al.dh, al.eh, al.n, 0, Basis::monomial()};
  return {std::move(x), std::move(pc), std::move(y)};
}

}  // namespace linpencil
