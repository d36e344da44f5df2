// Copyright 2026 The linpencil Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "basis.hpp"
#include "numeric.hpp"

namespace linpencil
{

/// P(z) = Σ P_k φ_k(z) (three-term, Bernstein), or interpolation data at the
/// nodes of a Lagrange / Hermite basis. The grade is authoritative: leading
/// zero coefficients are kept.
class MatrixPolynomial
{
public:
  struct Coefficients
  {
    std::vector<CMatrix> p;  // P_0 .. P_ℓ
  };
  struct Samples
  {
    std::vector<CMatrix> rho;  // ρ_k = P(τ_k)
  };
  struct HermiteSamples
  {
    std::vector<std::vector<CMatrix>> rho;  // rho[i][j] = P^{(j)}(τ_i) / j!
  };
  using Payload = std::variant<Coefficients, Samples, HermiteSamples>;

  static MatrixPolynomial from_coefficients(Basis basis, std::vector<CMatrix> coefficients)
  {
    if (basis.is_interpolational())
    {
      throw Error(ErrorCode::UnsupportedBasis, "coefficients need a three-term or Bernstein basis");
    }
    if (coefficients.empty())
    {
      throw Error(ErrorCode::InvalidArgument, "at least one coefficient is required");
    }
    const std::size_t grade = coefficients.size() - 1;
    if (basis.is_bernstein() && basis.bernstein().grade != grade)
    {
      throw Error(ErrorCode::DimensionMismatch, "Bernstein basis grade " +
                                                    std::to_string(basis.bernstein().grade) +
                                                    " but " + std::to_string(coefficients.size()) +
                                                    " coefficients");
    }
    if (basis.is_three_term())
    {
      const auto &t = basis.three_term();
      if (t.kind == ThreeTermKind::Newton && t.nodes.size() < grade)
      {
        throw Error(ErrorCode::InvalidBasis, "Newton basis of grade " + std::to_string(grade) +
                                                 " needs at least " + std::to_string(grade) +
                                                 " nodes");
      }
      if (t.kind == ThreeTermKind::Custom && t.rows.size() < grade)
      {
        throw Error(ErrorCode::InvalidBasis, "custom recurrence needs at least " +
                                                 std::to_string(grade) + " rows");
      }
    }
    const std::size_t n = check_square_family(coefficients);
    return MatrixPolynomial(std::move(basis), n, grade, Coefficients{std::move(coefficients)});
  }

  static MatrixPolynomial from_samples(Basis basis, std::vector<CMatrix> samples)
  {
    if (!basis.is_lagrange())
    {
      throw Error(ErrorCode::UnsupportedBasis, "samples need a Lagrange basis");
    }
    if (samples.size() != basis.lagrange().nodes.size())
    {
      throw Error(ErrorCode::DimensionMismatch, "one sample per node is required");
    }
    const std::size_t n = check_square_family(samples);
    const std::size_t grade = samples.size() - 1;
    return MatrixPolynomial(std::move(basis), n, grade, Samples{std::move(samples)});
  }

  static MatrixPolynomial from_hermite(Basis basis, std::vector<std::vector<CMatrix>> data)
  {
    if (!basis.is_hermite())
    {
      throw Error(ErrorCode::UnsupportedBasis, "Hermite data needs a Hermite basis");
    }
    const auto &h = basis.hermite();
    if (data.size() != h.nodes.size())
    {
      throw Error(ErrorCode::DimensionMismatch, "one data list per node is required");
    }
    std::vector<CMatrix> all;
    for (std::size_t i = 0; i < data.size(); ++i)
    {
      if (data[i].size() != h.confluencies[i])
      {
        throw Error(ErrorCode::BadConfluency, "node " + std::to_string(i) + " has confluency " +
                                                  std::to_string(h.confluencies[i]) + " but " +
                                                  std::to_string(data[i].size()) + " values");
      }
      all.insert(all.end(), data[i].begin(), data[i].end());
    }
    const std::size_t n = check_square_family(all);
    const std::size_t grade = interpolation_grade(basis);
    return MatrixPolynomial(std::move(basis), n, grade, HermiteSamples{std::move(data)});
  }

  /// Scalar (n = 1) convenience.
  static MatrixPolynomial scalar(Basis basis, const std::vector<Complex> &values)
  {
    std::vector<CMatrix> m;
    m.reserve(values.size());
    for (auto v : values)
    {
      m.emplace_back(1, 1, v);
    }
    if (basis.is_lagrange())
    {
      return from_samples(std::move(basis), std::move(m));
    }
    return from_coefficients(std::move(basis), std::move(m));
  }

  const Basis &basis() const noexcept { return basis_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t grade() const noexcept { return grade_; }
  const Payload &payload() const noexcept { return payload_; }

  const std::vector<CMatrix> &coefficients() const
  {
    if (const auto *c = std::get_if<Coefficients>(&payload_))
    {
      return c->p;
    }
    throw Error(ErrorCode::UnsupportedBasis, "polynomial has interpolation data, not coefficients");
  }

  const std::vector<CMatrix> &samples() const
  {
    if (const auto *s = std::get_if<Samples>(&payload_))
    {
      return s->rho;
    }
    throw Error(ErrorCode::UnsupportedBasis, "polynomial is not given by Lagrange samples");
  }

  const std::vector<std::vector<CMatrix>> &hermite_samples() const
  {
    if (const auto *s = std::get_if<HermiteSamples>(&payload_))
    {
      return s->rho;
    }
    throw Error(ErrorCode::UnsupportedBasis, "polynomial is not given by Hermite data");
  }

  /// Largest Frobenius norm over all payload matrices.
  double payload_scale() const
  {
    double m = 0.0;
    std::visit(
        [&m](const auto &pl)
        {
          using T = std::decay_t<decltype(pl)>;
          if constexpr (std::is_same_v<T, HermiteSamples>)
          {
            for (const auto &node : pl.rho)
            {
              for (const auto &r : node)
              {
                m = std::max(m, frobenius_norm(r));
              }
            }
          }
          else if constexpr (std::is_same_v<T, Coefficients>)
          {
            for (const auto &r : pl.p)
            {
              m = std::max(m, frobenius_norm(r));
            }
          }
          else
          {
            for (const auto &r : pl.rho)
            {
              m = std::max(m, frobenius_norm(r));
            }
          }
        },
        payload_);
    return m;
  }

private:
  MatrixPolynomial(Basis basis, std::size_t n, std::size_t grade, Payload payload)
    : basis_(std::move(basis)), n_(n), grade_(grade), payload_(std::move(payload))
  {
  }

  static std::size_t check_square_family(const std::vector<CMatrix> &ms)
  {
    if (ms.empty())
    {
      throw Error(ErrorCode::InvalidArgument, "no payload matrices");
    }
    const std::size_t n = ms.front().rows();
    for (const auto &m : ms)
    {
      if (m.rows() != n || m.cols() != n)
      {
        throw Error(ErrorCode::DimensionMismatch, "payload matrices must all be n x n");
      }
    }
    return n;
  }

  Basis basis_;
  std::size_t n_;
  std::size_t grade_;
  Payload payload_;
};

namespace detail
{

/// Index of the node z snaps to, if any.
inline std::optional<std::size_t> snapped_node(const std::vector<Complex> &nodes, Complex z)
{
  for (std::size_t k = 0; k < nodes.size(); ++k)
  {
    if (std::abs(z - nodes[k]) < 1e-12 * (1.0 + std::abs(nodes[k])))
    {
      return k;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// P(z). Interpolational data is evaluated by the first barycentric formula;
/// points within 1e-12*(1+|τ|) of a node return the stored node value.
inline CMatrix evaluate(const MatrixPolynomial &p, Complex z)
{
  const auto &basis = p.basis();
  const std::size_t n = p.n();
  CMatrix out(n, n);
  if (basis.is_three_term() || basis.is_bernstein())
  {
    const auto &c = p.coefficients();
    if (basis.is_three_term())
    {
      const auto phi = three_term_values(basis, c.size(), z);
      for (std::size_t k = 0; k < c.size(); ++k)
      {
        out += phi[k] * c[k];
      }
    }
    else
    {
      for (std::size_t k = 0; k < c.size(); ++k)
      {
        out += eval_phi(basis, k, z) * c[k];
      }
    }
    return out;
  }
  if (basis.is_lagrange())
  {
    const auto &tau = basis.lagrange().nodes;
    const auto &rho = p.samples();
    if (auto k = detail::snapped_node(tau, z))
    {
      return rho[*k];
    }
    const auto beta = lagrange_weights(tau);
    Complex omega = 1.0;
    for (std::size_t k = 0; k < tau.size(); ++k)
    {
      omega *= z - tau[k];
      out += (beta[k] / (z - tau[k])) * rho[k];
    }
    return omega * out;
  }
  const auto &h = basis.hermite();
  const auto &rho = p.hermite_samples();
  if (auto i = detail::snapped_node(h.nodes, z))
  {
    return rho[*i][0];
  }
  const auto beta = barycentric_weights(basis);
  Complex omega = 1.0;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < h.nodes.size(); ++i)
  {
    const std::size_t s = h.confluencies[i];
    const Complex d = z - h.nodes[i];
    for (std::size_t r = 0; r < s; ++r)
    {
      omega *= d;
    }
    for (std::size_t j = 0; j < s; ++j)
    {
      const Complex bij = beta[offset + (s - 1 - j)];
      for (std::size_t k = 0; k <= j; ++k)
      {
        Complex dpow = 1.0;
        for (std::size_t r = 0; r < j - k + 1; ++r)
        {
          dpow *= d;
        }
        out += (bij / dpow) * rho[i][k];
      }
    }
    offset += s;
  }
  return omega * out;
}

/// Number of leading (highest-index) coefficients that are exactly zero.
inline std::size_t degree_defect(const MatrixPolynomial &p)
{
  const auto &c = p.coefficients();
  std::size_t defect = 0;
  for (std::size_t k = c.size(); k-- > 0;)
  {
    if (max_abs(c[k]) != 0.0)
    {
      break;
    }
    ++defect;
  }
  return defect;
}

/// Monomial coefficients B_0..B_ℓ of a three-term or Bernstein polynomial.
inline std::vector<CMatrix> monomial_coefficients(const MatrixPolynomial &p)
{
  const auto &c = p.coefficients();
  const std::size_t grade = p.grade();
  std::vector<CMatrix> b(grade + 1, CMatrix(p.n(), p.n()));
  for (std::size_t k = 0; k <= grade; ++k)
  {
    const auto e = basis_function_coefficients(p.basis(), k, grade);
    for (std::size_t m = 0; m < e.size() && m <= grade; ++m)
    {
      if (e[m] != Complex{})
      {
        b[m] += e[m] * c[k];
      }
    }
  }
  return b;
}

}  // namespace linpencil
