// Copyright 2026 The linpencil Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace linpencil
{

using Complex = std::complex<double>;

inline bool is_finite(Complex z)
{
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Dense, row-major complex matrix. Every matrix in the library (pencils,
/// triples, coefficients, equivalence transforms) is one of these.
class CMatrix
{
public:
  CMatrix() = default;

  CMatrix(std::size_t rows, std::size_t cols, Complex fill = {})
    : rows_(rows), cols_(cols), data_(rows * cols, fill)
  {
    if (rows == 0 || cols == 0)
    {
      throw Error(ErrorCode::InvalidArgument, "matrix dimensions must be positive");
    }
    if (!is_finite(fill))
    {
      throw Error(ErrorCode::InvalidArgument, "non-finite matrix entry");
    }
  }

  CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries))
  {
    if (rows == 0 || cols == 0)
    {
      throw Error(ErrorCode::InvalidArgument, "matrix dimensions must be positive");
    }
    if (data_.size() != rows * cols)
    {
      throw Error(ErrorCode::DimensionMismatch, "entry count does not match rows*cols");
    }
    for (const auto &z : data_)
    {
      if (!is_finite(z))
      {
        throw Error(ErrorCode::InvalidArgument, "non-finite matrix entry");
      }
    }
  }

  /// Row-by-row literal, e.g. CMatrix{{1, 2}, {3, 4}}.
  CMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
  {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    if (rows_ == 0 || cols_ == 0)
    {
      throw Error(ErrorCode::InvalidArgument, "matrix dimensions must be positive");
    }
    data_.reserve(rows_ * cols_);
    for (const auto &r : rows)
    {
      if (r.size() != cols_)
      {
        throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
      }
      for (const auto &z : r)
      {
        if (!is_finite(z))
        {
          throw Error(ErrorCode::InvalidArgument, "non-finite matrix entry");
        }
        data_.push_back(z);
      }
    }
  }

  static CMatrix zeros(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }

  static CMatrix identity(std::size_t n)
  {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
    {
      m(i, i) = 1.0;
    }
    return m;
  }

  /// The anti-identity ("standard involutory permutation"); J*J = I.
  static CMatrix sip(std::size_t n)
  {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
    {
      m(i, n - 1 - i) = 1.0;
    }
    return m;
  }

  static CMatrix diagonal(std::span<const Complex> d)
  {
    CMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
    {
      m(i, i) = d[i];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  Complex &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Complex> entries() const noexcept { return data_; }
  std::span<Complex> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Complex> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  CMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
  {
    if (r0 + nr > rows_ || c0 + nc > cols_)
    {
      throw Error(ErrorCode::DimensionMismatch, "block out of range");
    }
    CMatrix out(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
    {
      for (std::size_t j = 0; j < nc; ++j)
      {
        out(i, j) = (*this)(r0 + i, c0 + j);
      }
    }
    return out;
  }

  void set_block(std::size_t r0, std::size_t c0, const CMatrix &b)
  {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
    {
      throw Error(ErrorCode::DimensionMismatch, "block out of range");
    }
    for (std::size_t i = 0; i < b.rows(); ++i)
    {
      for (std::size_t j = 0; j < b.cols(); ++j)
      {
        (*this)(r0 + i, c0 + j) = b(i, j);
      }
    }
  }

  /// Writes s*I into the square block at (r0, c0).
  void set_scaled_identity(std::size_t r0, std::size_t c0, std::size_t n, Complex s)
  {
    for (std::size_t i = 0; i < n; ++i)
    {
      (*this)(r0 + i, c0 + i) = s;
    }
  }

  CMatrix &operator+=(const CMatrix &b)
  {
    check_same_shape(b);
    for (std::size_t k = 0; k < data_.size(); ++k)
    {
      data_[k] += b.data_[k];
    }
    return *this;
  }

  CMatrix &operator-=(const CMatrix &b)
  {
    check_same_shape(b);
    for (std::size_t k = 0; k < data_.size(); ++k)
    {
      data_[k] -= b.data_[k];
    }
    return *this;
  }

  CMatrix &operator*=(Complex s)
  {
    for (auto &z : data_)
    {
      z *= s;
    }
    return *this;
  }

  bool operator==(const CMatrix &) const = default;

private:
  void check_same_shape(const CMatrix &b) const
  {
    if (rows_ != b.rows_ || cols_ != b.cols_)
    {
      throw Error(ErrorCode::DimensionMismatch, "shape mismatch");
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

inline CMatrix operator+(CMatrix a, const CMatrix &b)
{
  a += b;
  return a;
}

inline CMatrix operator-(CMatrix a, const CMatrix &b)
{
  a -= b;
  return a;
}

inline CMatrix operator-(CMatrix a)
{
  a *= -1.0;
  return a;
}

inline CMatrix operator*(Complex s, CMatrix a)
{
  a *= s;
  return a;
}

inline CMatrix operator*(CMatrix a, Complex s)
{
  a *= s;
  return a;
}

inline CMatrix operator*(const CMatrix &a, const CMatrix &b)
{
  if (a.cols() != b.rows())
  {
    throw Error(ErrorCode::DimensionMismatch, "matmul inner dimensions differ");
  }
  CMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
  {
    for (std::size_t k = 0; k < a.cols(); ++k)
    {
      const Complex aik = a(i, k);
      if (aik == Complex{})
      {
        continue;
      }
      for (std::size_t j = 0; j < b.cols(); ++j)
      {
        c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

inline CMatrix transpose(const CMatrix &a)
{
  CMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
  {
    for (std::size_t j = 0; j < a.cols(); ++j)
    {
      t(j, i) = a(i, j);
    }
  }
  return t;
}

inline CMatrix conj_transpose(const CMatrix &a)
{
  CMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
  {
    for (std::size_t j = 0; j < a.cols(); ++j)
    {
      t(j, i) = std::conj(a(i, j));
    }
  }
  return t;
}

inline double frobenius_norm(const CMatrix &a)
{
  double s = 0.0;
  for (const auto &z : a.entries())
  {
    s += std::norm(z);
  }
  return std::sqrt(s);
}

/// Largest entry modulus.
inline double max_abs(const CMatrix &a)
{
  double m = 0.0;
  for (const auto &z : a.entries())
  {
    m = std::max(m, std::abs(z));
  }
  return m;
}

inline CMatrix kron(const CMatrix &a, const CMatrix &b)
{
  CMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
  {
    for (std::size_t j = 0; j < a.cols(); ++j)
    {
      const Complex aij = a(i, j);
      if (aij == Complex{})
      {
        continue;
      }
      for (std::size_t p = 0; p < b.rows(); ++p)
      {
        for (std::size_t q = 0; q < b.cols(); ++q)
        {
          k(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
        }
      }
    }
  }
  return k;
}

/// Kronecker product of a row/column of scalars with I_n.
inline CMatrix kron_identity(const CMatrix &a, std::size_t n)
{
  return kron(a, CMatrix::identity(n));
}

inline CMatrix block_diagonal(std::initializer_list<const CMatrix *> blocks)
{
  std::size_t r = 0, c = 0;
  for (const auto *b : blocks)
  {
    r += b->rows();
    c += b->cols();
  }
  CMatrix out(r, c);
  r = c = 0;
  for (const auto *b : blocks)
  {
    out.set_block(r, c, *b);
    r += b->rows();
    c += b->cols();
  }
  return out;
}

// ---------------------------------------------------------------------------
// LU with partial pivoting

/// Packed L\U factors of P*A = L*U. `pivots[k]` is the row swapped into
/// position k at step k; `parity` is the sign of the permutation.
struct LUFactors
{
  CMatrix lu;
  std::vector<std::size_t> pivots;
  int parity = 1;
};

inline LUFactors lu_factor(const CMatrix &a)
{
  if (!a.square())
  {
    throw Error(ErrorCode::DimensionMismatch, "LU requires a square matrix");
  }
  const std::size_t n = a.rows();
  LUFactors f{a, std::vector<std::size_t>(n), 1};
  CMatrix &m = f.lu;
  for (std::size_t k = 0; k < n; ++k)
  {
    std::size_t p = k;
    double best = std::abs(m(k, k));
    for (std::size_t i = k + 1; i < n; ++i)
    {
      const double v = std::abs(m(i, k));
      if (v > best)
      {
        best = v;
        p = i;
      }
    }
    if (best == 0.0)
    {
      throw Error(ErrorCode::SingularMatrix, "zero pivot column at step " + std::to_string(k));
    }
    f.pivots[k] = p;
    if (p != k)
    {
      std::swap_ranges(m.row(k).begin(), m.row(k).end(), m.row(p).begin());
      f.parity = -f.parity;
    }
    const Complex pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i)
    {
      const Complex l = m(i, k) / pivot;
      m(i, k) = l;
      if (l == Complex{})
      {
        continue;
      }
      for (std::size_t j = k + 1; j < n; ++j)
      {
        m(i, j) -= l * m(k, j);
      }
    }
  }
  return f;
}

/// min |u_kk| / max |u_kk|: a cheap proximity-to-singularity indicator.
inline double pivot_ratio(const LUFactors &f)
{
  double lo = std::abs(f.lu(0, 0)), hi = lo;
  for (std::size_t k = 1; k < f.lu.rows(); ++k)
  {
    const double v = std::abs(f.lu(k, k));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return hi == 0.0 ? 0.0 : lo / hi;
}

inline CMatrix solve(const LUFactors &f, const CMatrix &b)
{
  const std::size_t n = f.lu.rows();
  if (b.rows() != n)
  {
    throw Error(ErrorCode::DimensionMismatch, "right-hand side row count differs from LU size");
  }
  CMatrix x = b;
  for (std::size_t k = 0; k < n; ++k)
  {
    if (f.pivots[k] != k)
    {
      std::swap_ranges(x.row(k).begin(), x.row(k).end(), x.row(f.pivots[k]).begin());
    }
  }
  const std::size_t m = x.cols();
  for (std::size_t i = 1; i < n; ++i)
  {
    for (std::size_t k = 0; k < i; ++k)
    {
      const Complex l = f.lu(i, k);
      if (l == Complex{})
      {
        continue;
      }
      for (std::size_t j = 0; j < m; ++j)
      {
        x(i, j) -= l * x(k, j);
      }
    }
  }
  for (std::size_t ii = n; ii-- > 0;)
  {
    for (std::size_t k = ii + 1; k < n; ++k)
    {
      const Complex u = f.lu(ii, k);
      if (u == Complex{})
      {
        continue;
      }
      for (std::size_t j = 0; j < m; ++j)
      {
        x(ii, j) -= u * x(k, j);
      }
    }
    const Complex d = f.lu(ii, ii);
    for (std::size_t j = 0; j < m; ++j)
    {
      x(ii, j) /= d;
    }
  }
  return x;
}

inline CMatrix solve(const CMatrix &a, const CMatrix &b) { return solve(lu_factor(a), b); }

inline Complex determinant(const LUFactors &f)
{
  Complex d = static_cast<double>(f.parity);
  for (std::size_t k = 0; k < f.lu.rows(); ++k)
  {
    d *= f.lu(k, k);
  }
  return d;
}

/// Determinant of an arbitrary square matrix; a singular input yields 0.
inline Complex determinant(const CMatrix &a)
{
  try
  {
    return determinant(lu_factor(a));
  }
  catch (const Error &e)
  {
    if (e.code() == ErrorCode::SingularMatrix)
    {
      return 0.0;
    }
    throw;
  }
}

inline CMatrix inverse(const CMatrix &a) { return solve(lu_factor(a), CMatrix::identity(a.rows())); }

/// L and U unpacked, plus the permutation matrix P with P*A = L*U. Test helper
/// territory, but cheap enough to keep public.
struct UnpackedLU
{
  CMatrix p, l, u;
};

inline UnpackedLU unpack(const LUFactors &f)
{
  const std::size_t n = f.lu.rows();
  UnpackedLU out{CMatrix::identity(n), CMatrix::identity(n), CMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i)
  {
    for (std::size_t j = 0; j < n; ++j)
    {
      if (j < i)
      {
        out.l(i, j) = f.lu(i, j);
      }
      else
      {
        out.u(i, j) = f.lu(i, j);
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k)
  {
    if (f.pivots[k] != k)
    {
      std::swap_ranges(out.p.row(k).begin(), out.p.row(k).end(), out.p.row(f.pivots[k]).begin());
    }
  }
  return out;
}

}  // namespace linpencil
