// Copyright 2026 The linpencil Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "matpoly.hpp"
#include "numeric.hpp"
#include "pencil.hpp"

namespace linpencil
{

/// Shift-invert eigenvalues |θ| at or below this are eigenvalues at infinity.
inline constexpr double kInfiniteTheta = 1e-8;
/// Radius of the circle the shift is drawn from.
inline constexpr double kShiftRadius = 1.37;
inline constexpr int kShiftAttempts = 8;

struct FiniteEigenvalue
{
  Complex lambda;
  double residual = 0.0;
};

struct EigenResult
{
  std::vector<FiniteEigenvalue> finite;  // sorted by (re, im)
  std::size_t infinite_count = 0;
  Complex shift_used;
};

/// Householder reduction to upper Hessenberg form.
inline CMatrix hessenberg(CMatrix a)
{
  if (!a.square())
  {
    throw Error(ErrorCode::DimensionMismatch, "hessenberg needs a square matrix");
  }
  const std::size_t n = a.rows();
  std::vector<Complex> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k)
  {
    double norm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i)
    {
      norm2 += std::norm(a(i, k));
    }
    const double tail = norm2 - std::norm(a(k + 1, k));
    if (tail == 0.0)
    {
      continue;
    }
    const double xn = std::sqrt(norm2);
    const Complex x0 = a(k + 1, k);
    const Complex phase = x0 == Complex{} ? Complex{1.0} : x0 / std::abs(x0);
    const Complex alpha = -phase * xn;
    double vn2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i)
    {
      v[i] = a(i, k);
      if (i == k + 1)
      {
        v[i] -= alpha;
      }
      vn2 += std::norm(v[i]);
    }
    const double vn = std::sqrt(vn2);
    for (std::size_t i = k + 1; i < n; ++i)
    {
      v[i] /= vn;
    }
    // A <- (I - 2vv^H) A
    for (std::size_t j = k; j < n; ++j)
    {
      Complex s{};
      for (std::size_t i = k + 1; i < n; ++i)
      {
        s += std::conj(v[i]) * a(i, j);
      }
      for (std::size_t i = k + 1; i < n; ++i)
      {
        a(i, j) -= 2.0 * v[i] * s;
      }
    }
    // A <- A (I - 2vv^H)
    for (std::size_t i = 0; i < n; ++i)
    {
      Complex s{};
      for (std::size_t j = k + 1; j < n; ++j)
      {
        s += a(i, j) * v[j];
      }
      for (std::size_t j = k + 1; j < n; ++j)
      {
        a(i, j) -= 2.0 * s * std::conj(v[j]);
      }
    }
    for (std::size_t i = k + 2; i < n; ++i)
    {
      a(i, k) = 0.0;
    }
  }
  return a;
}

namespace detail
{

struct Givens
{
  Complex c;  // a/r
  Complex s;  // b/r
};

inline Givens givens(Complex a, Complex b)
{
  const double r = std::hypot(std::abs(a), std::abs(b));
  if (r == 0.0)
  {
    return {1.0, 0.0};
  }
  return {a / r, b / r};
}

inline Complex wilkinson_shift(Complex a, Complex b, Complex c, Complex d)
{
  const Complex half = 0.5 * (a - d);
  const Complex disc = std::sqrt(half * half + b * c);
  const Complex m1 = 0.5 * (a + d) + disc;
  const Complex m2 = 0.5 * (a + d) - disc;
  return std::abs(m1 - d) < std::abs(m2 - d) ? m1 : m2;
}

}  // namespace detail

/// Eigenvalues of an upper Hessenberg matrix by complex single-shift QR with
/// Wilkinson shifts and deflation. At most 100*N sweeps in total.
inline std::vector<Complex> qr_eigenvalues(CMatrix h)
{
  if (!h.square())
  {
    throw Error(ErrorCode::DimensionMismatch, "qr_eigenvalues needs a square matrix");
  }
  const std::size_t n = h.rows();
  constexpr double eps = std::numeric_limits<double>::epsilon();
  std::vector<Complex> out;
  out.reserve(n);
  std::vector<detail::Givens> rot(n);
  const std::size_t budget = 100 * n;
  std::size_t sweeps = 0;
  std::size_t stuck = 0;

  std::size_t hi = n - 1;
  while (true)
  {
    if (hi == 0)
    {
      out.push_back(h(0, 0));
      break;
    }
    std::size_t lo = hi;
    while (lo > 0)
    {
      const double scale = std::abs(h(lo, lo)) + std::abs(h(lo - 1, lo - 1));
      if (std::abs(h(lo, lo - 1)) <= eps * (scale == 0.0 ? 1.0 : scale))
      {
        h(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }
    if (lo == hi)
    {
      out.push_back(h(hi, hi));
      --hi;
      stuck = 0;
      continue;
    }
    if (++sweeps > budget)
    {
      throw Error(ErrorCode::NoConvergence, "QR iteration exceeded " + std::to_string(budget) + " sweeps");
    }
    ++stuck;
    Complex mu;
    if (stuck % 11 == 10)
    {
      mu = h(hi, hi) + Complex(std::abs(h(hi, hi - 1)), 0.75 * std::abs(h(hi, hi - 1)));
    }
    else
    {
      mu = detail::wilkinson_shift(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
    }

    for (std::size_t k = lo; k <= hi; ++k)
    {
      h(k, k) -= mu;
    }
    for (std::size_t k = lo; k < hi; ++k)
    {
      const auto g = detail::givens(h(k, k), h(k + 1, k));
      rot[k] = g;
      for (std::size_t j = k; j <= hi; ++j)
      {
        const Complex x = h(k, j), y = h(k + 1, j);
        h(k, j) = std::conj(g.c) * x + std::conj(g.s) * y;
        h(k + 1, j) = -g.s * x + g.c * y;
      }
    }
    for (std::size_t k = lo; k < hi; ++k)
    {
      const auto g = rot[k];
      const std::size_t last = std::min(k + 1, hi);
      for (std::size_t i = lo; i <= last; ++i)
      {
        const Complex x = h(i, k), y = h(i, k + 1);
        h(i, k) = x * g.c + y * g.s;
        h(i, k + 1) = -x * std::conj(g.s) + y * std::conj(g.c);
      }
    }
    for (std::size_t k = lo; k <= hi; ++k)
    {
      h(k, k) += mu;
    }
  }
  return out;
}

inline std::vector<Complex> eigenvalues(const CMatrix &a) { return qr_eigenvalues(hessenberg(a)); }

/// Backward-style residual of λ for an arbitrary matrix function: three
/// inverse-iteration steps on M = f(λ) from a seeded random start, then
/// ||M v|| / (||v|| * scale). Exactly singular M gives 0.
inline double matrix_residual(const CMatrix &m, double scale, std::uint64_t seed = 0x5eedULL)
{
  const std::size_t n = m.rows();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  CMatrix v(n, 1);
  for (std::size_t i = 0; i < n; ++i)
  {
    v(i, 0) = Complex(nd(rng), nd(rng));
  }
  LUFactors f;
  try
  {
    f = lu_factor(m);
  }
  catch (const Error &)
  {
    return 0.0;
  }
  for (int step = 0; step < 3; ++step)
  {
    v = solve(f, v);
    const double nv = frobenius_norm(v);
    if (!std::isfinite(nv) || nv == 0.0)
    {
      return 0.0;
    }
    v *= 1.0 / nv;
  }
  return frobenius_norm(m * v) / (frobenius_norm(v) * (scale == 0.0 ? 1.0 : scale));
}

/// ||P(λ)v|| / (||v|| max_k ||payload_k||_F) after inverse iteration.
inline double eigen_residual(const MatrixPolynomial &p, Complex lambda)
{
  return matrix_residual(evaluate(p, lambda), p.payload_scale());
}

namespace detail
{

inline void sort_finite(std::vector<FiniteEigenvalue> &v)
{
  std::sort(v.begin(), v.end(),
            [](const FiniteEigenvalue &a, const FiniteEigenvalue &b)
            {
              if (a.lambda.real() != b.lambda.real())
              {
                return a.lambda.real() < b.lambda.real();
              }
              return a.lambda.imag() < b.lambda.imag();
            });
}

}  // namespace detail

/// Generalized eigenvalues of z*c1 - c0 by shift-invert: eigenvalues θ of
/// (σ c1 - c0)^{-1} c1 map to λ = σ - 1/θ, and |θ| <= kInfiniteTheta counts
/// as infinite. `residual` scores each finite λ.
inline EigenResult generalized_eigenvalues(const CMatrix &c1, const CMatrix &c0, std::uint64_t seed,
                                           const std::function<double(Complex)> &residual)
{
  if (!c1.square() || c1.rows() != c0.rows() || c1.cols() != c0.cols())
  {
    throw Error(ErrorCode::DimensionMismatch, "pencil matrices must be square and equal in size");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (int attempt = 0; attempt < kShiftAttempts; ++attempt)
  {
    const Complex sigma = std::polar(kShiftRadius, angle(rng));
    LUFactors f;
    try
    {
      f = lu_factor(sigma * c1 - c0);
    }
    catch (const Error &)
    {
      continue;
    }
    if (pivot_ratio(f) < 1e-12)
    {
      continue;
    }
    EigenResult res;
    res.shift_used = sigma;
    for (auto theta : eigenvalues(solve(f, c1)))
    {
      if (std::abs(theta) <= kInfiniteTheta)
      {
        ++res.infinite_count;
        continue;
      }
      const Complex lambda = sigma - 1.0 / theta;
      res.finite.push_back({lambda, residual ? residual(lambda) : 0.0});
    }
    detail::sort_finite(res.finite);
    return res;
  }
  throw Error(ErrorCode::SingularPencilEverywhere,
              "no acceptable shift in " + std::to_string(kShiftAttempts) + " attempts");
}

/// Residuals are measured on the pencil itself.
inline EigenResult generalized_eigenvalues(const CompanionPencil &pc, std::uint64_t seed = 0)
{
  const double scale = std::max(frobenius_norm(pc.c1), frobenius_norm(pc.c0));
  return generalized_eigenvalues(pc.c1, pc.c0, seed,
                                 [&](Complex z) { return matrix_residual(pc.at(z), scale); });
}

/// Builds the pencil of p and measures residuals on p.
inline EigenResult generalized_eigenvalues(const MatrixPolynomial &p, std::uint64_t seed = 0)
{
  const auto pc = build_pencil(p);
  return generalized_eigenvalues(pc.c1, pc.c0, seed, [&](Complex z) { return eigen_residual(p, z); });
}

}  // namespace linpencil
