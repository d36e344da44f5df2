// Copyright 2026 The linpencil Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "linpencil/linpencil.hpp"

namespace linpencil::fixtures
{

inline CMatrix m2(double a, double b, double c, double d) { return CMatrix{{a, b}, {c, d}}; }

inline MatrixPolynomial chebyshev_example()
{
  return MatrixPolynomial::from_coefficients(
      Basis::chebyshev(), {m2(1.0 / 5, 7.0 / 100, -93.0 / 200, -29.0 / 200), m2(53.0 / 300, 7.0 / 60, 2.0 / 25, 3.0 / 50),
                           m2(-9.0 / 80, -13.0 / 80, 57.0 / 400, -47.0 / 400),
                           m2(-3.0 / 250, -31.0 / 500, -77.0 / 500, 27.0 / 250)});
}

inline MatrixPolynomial newton_example()
{
  return MatrixPolynomial::from_coefficients(
      Basis::newton({1.0, 0.5, -0.5, -1.0}),
      {m2(6, 25, -1, 5), m2(-80.0 / 3, 25.0 / 3, 43.0 / 3, 94.0 / 3), m2(77.0 / 4, 31.0 / 4, 9.0 / 4, -25.0 / 2),
       m2(86.0 / 5, -61.0 / 5, 4, -48.0 / 5)});
}

inline MatrixPolynomial bernstein_monic_example()
{
  return MatrixPolynomial::from_coefficients(
      Basis::bernstein(3),
      {m2(4.0 / 25, 99.0 / 100, 9.0 / 100, 3.0 / 5), m2(-17.0 / 25, 11.0 / 50, -67.0 / 100, 7.0 / 50),
       m2(-59.0 / 100, -31.0 / 50, 3.0 / 25, -33.0 / 100), m2(41.0 / 50, 21.0 / 50, 18.0 / 25, 9.0 / 50)});
}

inline MatrixPolynomial bernstein_singular_example()
{
  return MatrixPolynomial::from_coefficients(
      Basis::bernstein(3),
      {m2(29.0 / 100, -8.0 / 25, 7.0 / 10, -1.0 / 100), m2(-41.0 / 50, 41.0 / 100, -7.0 / 10, 91.0 / 100),
       m2(9.0 / 10, 19.0 / 100, 4.0 / 5, 22.0 / 25), m2(1, 1, 9851.0 / 1980, 0)});
}

inline MatrixPolynomial lagrange_example()
{
  const CMatrix i2 = CMatrix::identity(2);
  return MatrixPolynomial::from_samples(Basis::lagrange({1.0, 0.0, -1.0}), {i2, i2, i2});
}

/// Scalar constant 1 with confluent data at 1, 1/2, -1/2, -1.
inline MatrixPolynomial hermite_scalar_example()
{
  const CMatrix one{{1.0}}, zero{{0.0}};
  return MatrixPolynomial::from_hermite(Basis::hermite({1.0, 0.5, -0.5, -1.0}, {2, 1, 1, 3}),
                                        {{one, zero}, {one}, {one}, {one, zero, zero}});
}

inline MatrixPolynomial hermite_matrix_example()
{
  return MatrixPolynomial::from_hermite(Basis::hermite({0.0, 1.0}, {1, 2}),
                                        {{m2(-1, 0, -1, 1)}, {m2(0, 1, 1, -1), m2(1, -1, -1, 0)}});
}

struct Named
{
  std::string name;
  MatrixPolynomial p;
};

inline std::vector<Named> all_examples()
{
  return {{"chebyshev", chebyshev_example()},
          {"newton", newton_example()},
          {"bernstein_monic", bernstein_monic_example()},
          {"bernstein_singular", bernstein_singular_example()},
          {"lagrange", lagrange_example()},
          {"hermite_scalar", hermite_scalar_example()},
          {"hermite_matrix", hermite_matrix_example()}};
}

inline CMatrix random_matrix(std::mt19937_64 &rng, std::size_t r, std::size_t c)
{
  std::normal_distribution<double> nd;
  CMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
  {
    for (std::size_t j = 0; j < c; ++j)
    {
      m(i, j) = Complex(nd(rng), nd(rng));
    }
  }
  return m;
}

inline std::vector<Complex> distinct_nodes(std::mt19937_64 &rng, std::size_t count)
{
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> t;
  while (t.size() < count)
  {
    const Complex z(u(rng), 0.5 * u(rng));
    bool ok = true;
    for (auto s : t)
    {
      ok = ok && std::abs(z - s) > 0.15;
    }
    if (ok)
    {
      t.push_back(z);
    }
  }
  return t;
}

/// Random polynomial of grade ell, block size n, in basis family `kind`
/// (0 monomial, 1 chebyshev, 2 legendre, 3 newton, 4 taylor, 5 bernstein,
/// 6 lagrange, 7 hermite). Payload matrices are scaled to unit max norm.
inline MatrixPolynomial random_polynomial(std::mt19937_64 &rng, int kind, std::size_t n, std::size_t ell)
{
  auto normalized = [&](std::size_t count)
  {
    std::vector<CMatrix> ms;
    double s = 0.0;
    for (std::size_t k = 0; k < count; ++k)
    {
      ms.push_back(random_matrix(rng, n, n));
      s = std::max(s, frobenius_norm(ms.back()));
    }
    for (auto &m : ms)
    {
      m *= 1.0 / s;
    }
    return ms;
  };
  switch (kind)
  {
  case 0:
    return MatrixPolynomial::from_coefficients(Basis::monomial(), normalized(ell + 1));
  case 1:
    return MatrixPolynomial::from_coefficients(Basis::chebyshev(), normalized(ell + 1));
  case 2:
    return MatrixPolynomial::from_coefficients(Basis::legendre(), normalized(ell + 1));
  case 3:
    return MatrixPolynomial::from_coefficients(Basis::newton(distinct_nodes(rng, ell)), normalized(ell + 1));
  case 4:
    return MatrixPolynomial::from_coefficients(Basis::taylor(Complex(0.25, -0.1)), normalized(ell + 1));
  case 5:
    return MatrixPolynomial::from_coefficients(Basis::bernstein(ell), normalized(ell + 1));
  case 6:
    return MatrixPolynomial::from_samples(Basis::lagrange(distinct_nodes(rng, ell + 1)), normalized(ell + 1));
  default:
  {
    // split ell + 1 conditions into confluent groups of size 1 or 2
    std::vector<std::size_t> conf;
    std::size_t left = ell + 1;
    while (left > 0)
    {
      const std::size_t s = left >= 2 && conf.size() % 2 == 0 ? 2 : 1;
      conf.push_back(s);
      left -= s;
    }
    auto data = normalized(ell + 1);
    std::vector<std::vector<CMatrix>> rho;
    std::size_t k = 0;
    for (auto s : conf)
    {
      rho.emplace_back(data.begin() + static_cast<std::ptrdiff_t>(k), data.begin() + static_cast<std::ptrdiff_t>(k + s));
      k += s;
    }
    return MatrixPolynomial::from_hermite(Basis::hermite(distinct_nodes(rng, conf.size()), conf), std::move(rho));
  }
  }
}

inline constexpr int kBasisKinds = 8;

}  // namespace linpencil::fixtures
