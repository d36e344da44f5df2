// Copyright 2026 The linpencil Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "numeric.hpp"

namespace linpencil
{

// ---------------------------------------------------------------------------
// Basis description

/// zφ_k(z) = alpha φ_{k+1}(z) + beta φ_k(z) + gamma φ_{k-1}(z)
struct RecurrenceRow
{
  Complex alpha;
  Complex beta;
  Complex gamma;
};

enum class ThreeTermKind
{
  Monomial,
  ShiftedMonomial,
  Taylor,
  Newton,
  ChebyshevT,
  LegendreP,
  Custom,
};

struct ThreeTermBasis
{
  ThreeTermKind kind = ThreeTermKind::Monomial;
  Complex shift{};                   // ShiftedMonomial, Taylor
  std::vector<Complex> nodes;        // Newton
  std::vector<RecurrenceRow> rows;   // Custom
};

/// Bernstein polynomials of a fixed grade on [0, 1].
struct BernsteinBasis
{
  std::size_t grade = 0;
};

struct LagrangeBasis
{
  std::vector<Complex> nodes;
};

struct HermiteBasis
{
  std::vector<Complex> nodes;
  std::vector<std::size_t> confluencies;
};

namespace detail
{

inline void require_distinct(const std::vector<Complex> &nodes)
{
  for (std::size_t i = 0; i < nodes.size(); ++i)
  {
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
    {
      if (nodes[i] == nodes[j])
      {
        throw Error(ErrorCode::DuplicateNodes,
                    "nodes " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      }
    }
  }
}

}  // namespace detail

/// Tagged polynomial basis. Construct through the named factories, which
/// enforce the per-variant invariants.
class Basis
{
public:
  using Variant = std::variant<ThreeTermBasis, BernsteinBasis, LagrangeBasis, HermiteBasis>;

  static Basis monomial() { return Basis(ThreeTermBasis{ThreeTermKind::Monomial, {}, {}, {}}); }
  static Basis shifted_monomial(Complex a)
  {
    return Basis(ThreeTermBasis{ThreeTermKind::ShiftedMonomial, a, {}, {}});
  }
  static Basis taylor(Complex a) { return Basis(ThreeTermBasis{ThreeTermKind::Taylor, a, {}, {}}); }
  static Basis chebyshev() { return Basis(ThreeTermBasis{ThreeTermKind::ChebyshevT, {}, {}, {}}); }
  static Basis legendre() { return Basis(ThreeTermBasis{ThreeTermKind::LegendreP, {}, {}, {}}); }

  /// φ_k(z) = Π_{j<k} (z - τ_j). Needs at least as many nodes as the grade.
  static Basis newton(std::vector<Complex> nodes)
  {
    detail::require_distinct(nodes);
    return Basis(ThreeTermBasis{ThreeTermKind::Newton, {}, std::move(nodes), {}});
  }

  static Basis custom(std::vector<RecurrenceRow> rows)
  {
    for (std::size_t k = 0; k < rows.size(); ++k)
    {
      if (rows[k].alpha == Complex{})
      {
        throw Error(ErrorCode::InvalidBasis, "alpha_" + std::to_string(k) + " is zero");
      }
    }
    return Basis(ThreeTermBasis{ThreeTermKind::Custom, {}, {}, std::move(rows)});
  }

  static Basis bernstein(std::size_t grade)
  {
    if (grade == 0)
    {
      throw Error(ErrorCode::GradeTooSmall, "Bernstein grade must be at least 1");
    }
    return Basis(BernsteinBasis{grade});
  }

  static Basis lagrange(std::vector<Complex> nodes)
  {
    if (nodes.empty())
    {
      throw Error(ErrorCode::InvalidBasis, "Lagrange basis needs at least one node");
    }
    detail::require_distinct(nodes);
    return Basis(LagrangeBasis{std::move(nodes)});
  }

  static Basis hermite(std::vector<Complex> nodes, std::vector<std::size_t> confluencies)
  {
    if (nodes.empty())
    {
      throw Error(ErrorCode::InvalidBasis, "Hermite basis needs at least one node");
    }
    if (nodes.size() != confluencies.size())
    {
      throw Error(ErrorCode::BadConfluency, "one confluency per node is required");
    }
    for (auto s : confluencies)
    {
      if (s == 0)
      {
        throw Error(ErrorCode::BadConfluency, "confluencies must be positive");
      }
    }
    detail::require_distinct(nodes);
    return Basis(HermiteBasis{std::move(nodes), std::move(confluencies)});
  }

  const Variant &variant() const noexcept { return v_; }

  bool is_three_term() const noexcept { return std::holds_alternative<ThreeTermBasis>(v_); }
  bool is_bernstein() const noexcept { return std::holds_alternative<BernsteinBasis>(v_); }
  bool is_lagrange() const noexcept { return std::holds_alternative<LagrangeBasis>(v_); }
  bool is_hermite() const noexcept { return std::holds_alternative<HermiteBasis>(v_); }
  bool is_interpolational() const noexcept { return is_lagrange() || is_hermite(); }

  const ThreeTermBasis &three_term() const { return get<ThreeTermBasis>("three-term"); }
  const BernsteinBasis &bernstein() const { return get<BernsteinBasis>("Bernstein"); }
  const LagrangeBasis &lagrange() const { return get<LagrangeBasis>("Lagrange"); }
  const HermiteBasis &hermite() const { return get<HermiteBasis>("Hermite"); }

  std::string name() const
  {
    if (is_bernstein())
    {
      return "bernstein";
    }
    if (is_lagrange())
    {
      return "lagrange";
    }
    if (is_hermite())
    {
      return "hermite";
    }
    switch (three_term().kind)
    {
      case ThreeTermKind::Monomial:
        return "monomial";
      case ThreeTermKind::ShiftedMonomial:
        return "shifted";
      case ThreeTermKind::Taylor:
        return "taylor";
      case ThreeTermKind::Newton:
        return "newton";
      case ThreeTermKind::ChebyshevT:
        return "chebyshev";
      case ThreeTermKind::LegendreP:
        return "legendre";
      case ThreeTermKind::Custom:
        return "custom";
    }
    return "unknown";
  }

private:
  explicit Basis(Variant v) : v_(std::move(v)) {}

  template <class T>
  const T &get(const char *what) const
  {
    if (const auto *p = std::get_if<T>(&v_))
    {
      return *p;
    }
    throw Error(ErrorCode::UnsupportedBasis, "basis is not " + std::string(what));
  }

  Variant v_;
};

// ---------------------------------------------------------------------------
// Small polynomial helpers. Coefficients are ascending (index = power) here;
// public results are converted to the descending order used by the pencils.

namespace poly
{

using Coeffs = std::vector<Complex>;

inline Coeffs multiply(const Coeffs &a, const Coeffs &b)
{
  Coeffs c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
  {
    for (std::size_t j = 0; j < b.size(); ++j)
    {
      c[i + j] += a[i] * b[j];
    }
  }
  return c;
}

/// (z - root) * a
inline Coeffs times_linear(const Coeffs &a, Complex root) { return multiply(a, {-root, 1.0}); }

inline Coeffs descending(Coeffs a, std::size_t length)
{
  a.resize(length);
  return Coeffs(a.rbegin(), a.rend());
}

inline Complex ipow(Complex z, std::size_t k)
{
  Complex r = 1.0;
  for (; k > 0; --k)
  {
    r *= z;
  }
  return r;
}

inline double binomial(std::size_t n, std::size_t k)
{
  if (k > n)
  {
    return 0.0;
  }
  double c = 1.0;
  for (std::size_t i = 0; i < std::min(k, n - k); ++i)
  {
    c = c * static_cast<double>(n - i) / static_cast<double>(i + 1);
  }
  return std::round(c);
}

}  // namespace poly

// ---------------------------------------------------------------------------
// Operations

inline RecurrenceRow recurrence_row(const Basis &basis, std::size_t k)
{
  if (!basis.is_three_term())
  {
    throw Error(ErrorCode::UnsupportedBasis, basis.name() + " has no three-term recurrence");
  }
  const auto &b = basis.three_term();
  const double kd = static_cast<double>(k);
  switch (b.kind)
  {
    case ThreeTermKind::Monomial:
      return {1.0, 0.0, 0.0};
    case ThreeTermKind::ShiftedMonomial:
      return {1.0, b.shift, 0.0};
    case ThreeTermKind::Taylor:
      return {kd + 1.0, b.shift, 0.0};
    case ThreeTermKind::Newton:
      if (k >= b.nodes.size())
      {
        throw Error(ErrorCode::InvalidArgument,
                    "Newton basis has " + std::to_string(b.nodes.size()) + " nodes, row " +
                        std::to_string(k) + " requested");
      }
      return {1.0, b.nodes[k], 0.0};
    case ThreeTermKind::ChebyshevT:
      // T_1 = z breaks the pattern of the higher rows.
      return k == 0 ? RecurrenceRow{1.0, 0.0, 0.0} : RecurrenceRow{0.5, 0.0, 0.5};
    case ThreeTermKind::LegendreP:
      return {(kd + 1.0) / (2.0 * kd + 1.0), 0.0, kd / (2.0 * kd + 1.0)};
    case ThreeTermKind::Custom:
      if (k >= b.rows.size())
      {
        throw Error(ErrorCode::InvalidArgument,
                    "custom recurrence has " + std::to_string(b.rows.size()) + " rows, row " +
                        std::to_string(k) + " requested");
      }
      return b.rows[k];
  }
  throw Error(ErrorCode::UnsupportedBasis, "unknown three-term kind");
}

/// φ_0(z), ..., φ_count-1(z) by forward recurrence.
inline std::vector<Complex> three_term_values(const Basis &basis, std::size_t count, Complex z)
{
  std::vector<Complex> phi(count);
  if (count == 0)
  {
    return phi;
  }
  phi[0] = 1.0;
  for (std::size_t k = 0; k + 1 < count; ++k)
  {
    const auto r = recurrence_row(basis, k);
    const Complex prev = k == 0 ? Complex{} : phi[k - 1];
    phi[k + 1] = ((z - r.beta) * phi[k] - r.gamma * prev) / r.alpha;
  }
  return phi;
}

/// Lagrange weights β_k = Π_{j≠k} (τ_k - τ_j)^{-1}.
inline std::vector<Complex> lagrange_weights(const std::vector<Complex> &nodes)
{
  detail::require_distinct(nodes);
  std::vector<Complex> w(nodes.size(), 1.0);
  for (std::size_t k = 0; k < nodes.size(); ++k)
  {
    for (std::size_t j = 0; j < nodes.size(); ++j)
    {
      if (j != k)
      {
        w[k] /= nodes[k] - nodes[j];
      }
    }
  }
  return w;
}

inline Complex eval_phi(const Basis &basis, std::size_t k, Complex z)
{
  if (basis.is_three_term())
  {
    return three_term_values(basis, k + 1, z)[k];
  }
  if (basis.is_bernstein())
  {
    const std::size_t l = basis.bernstein().grade;
    if (k > l)
    {
      throw Error(ErrorCode::InvalidArgument, "Bernstein index exceeds grade");
    }
    return poly::binomial(l, k) * poly::ipow(z, k) * poly::ipow(1.0 - z, l - k);
  }
  if (basis.is_lagrange())
  {
    const auto &tau = basis.lagrange().nodes;
    if (k >= tau.size())
    {
      throw Error(ErrorCode::InvalidArgument, "Lagrange index exceeds node count");
    }
    const auto w = lagrange_weights(tau);
    Complex v = w[k];
    for (std::size_t j = 0; j < tau.size(); ++j)
    {
      if (j != k)
      {
        v *= z - tau[j];
      }
    }
    return v;
  }
  throw Error(ErrorCode::UnsupportedBasis, "Hermite basis functions are evaluated through matpoly");
}

/// Grade implied by an interpolational node structure: node count - 1
/// (Lagrange) or Σ s_i - 1 (Hermite).
inline std::size_t interpolation_grade(const Basis &basis)
{
  if (basis.is_lagrange())
  {
    return basis.lagrange().nodes.size() - 1;
  }
  const auto &s = basis.hermite().confluencies;
  return std::accumulate(s.begin(), s.end(), std::size_t{0}) - 1;
}

/// Coefficients of the constant 1 in the pencil's block-column order. These
/// become the row X of the generalized standard triple.
inline std::vector<Complex> one_coefficients(const Basis &basis, std::size_t grade)
{
  if (basis.is_three_term())
  {
    if (grade == 0)
    {
      throw Error(ErrorCode::GradeTooSmall, "grade must be at least 1");
    }
    std::vector<Complex> e(grade);
    e.back() = 1.0;
    return e;
  }
  if (basis.is_bernstein())
  {
    if (grade == 0)
    {
      throw Error(ErrorCode::GradeTooSmall, "grade must be at least 1");
    }
    std::vector<Complex> e(grade);
    for (std::size_t k = 0; k < grade; ++k)
    {
      e[k] = static_cast<double>(k + 1) / static_cast<double>(grade);
    }
    return e;
  }
  if (basis.is_lagrange())
  {
    std::vector<Complex> e(basis.lagrange().nodes.size() + 1, 1.0);
    e[0] = 0.0;
    return e;
  }
  std::vector<Complex> e{0.0};
  for (auto s : basis.hermite().confluencies)
  {
    for (std::size_t j = 0; j + 1 < s; ++j)
    {
      e.push_back(0.0);
    }
    e.push_back(1.0);
  }
  return e;
}

/// Monic node polynomial ω(z), coefficients highest power first.
inline std::vector<Complex> node_polynomial(const Basis &basis)
{
  poly::Coeffs w{1.0};
  if (basis.is_lagrange())
  {
    for (auto t : basis.lagrange().nodes)
    {
      w = poly::times_linear(w, t);
    }
  }
  else if (basis.is_hermite())
  {
    const auto &h = basis.hermite();
    for (std::size_t i = 0; i < h.nodes.size(); ++i)
    {
      for (std::size_t j = 0; j < h.confluencies[i]; ++j)
      {
        w = poly::times_linear(w, h.nodes[i]);
      }
    }
  }
  else
  {
    throw Error(ErrorCode::UnsupportedBasis, "node polynomial needs an interpolational basis");
  }
  return poly::descending(w, w.size());
}

/// Partial-fraction weights of 1/ω(z). Lagrange: β_k in node order.
/// Hermite: node-major, and within node i the order β_{i,s_i-1}, ..., β_{i,0},
/// which is the row order of the pencil's first block column.
inline std::vector<Complex> barycentric_weights(const Basis &basis)
{
  if (basis.is_lagrange())
  {
    return lagrange_weights(basis.lagrange().nodes);
  }
  if (!basis.is_hermite())
  {
    throw Error(ErrorCode::UnsupportedBasis, "barycentric weights need an interpolational basis");
  }
  const auto &h = basis.hermite();
  detail::require_distinct(h.nodes);
  std::vector<Complex> out;
  for (std::size_t i = 0; i < h.nodes.size(); ++i)
  {
    const std::size_t s = h.confluencies[i];
    // Taylor coefficients at τ_i of g(z) = Π_{j≠i} (z - τ_j)^{s_j}, truncated
    // to order s-1, in powers of h = z - τ_i.
    poly::Coeffs g{1.0};
    for (std::size_t j = 0; j < h.nodes.size(); ++j)
    {
      if (j == i)
      {
        continue;
      }
      const Complex d = h.nodes[i] - h.nodes[j];
      for (std::size_t r = 0; r < h.confluencies[j]; ++r)
      {
        g = poly::multiply(g, {d, 1.0});
        g.resize(std::min(g.size(), s));
      }
    }
    g.resize(s);
    // Series inverse c of g: Σ_{m≤k} g_m c_{k-m} = δ_k0.
    poly::Coeffs c(s);
    c[0] = 1.0 / g[0];
    for (std::size_t k = 1; k < s; ++k)
    {
      Complex acc{};
      for (std::size_t m = 1; m <= k; ++m)
      {
        acc += g[m] * c[k - m];
      }
      c[k] = -acc / g[0];
    }
    // 1/ω = (z-τ_i)^{-s} (c_0 + c_1 h + ...), so β_{i,j} = c_{s-1-j}; emitting
    // j descending means c ascending.
    for (std::size_t m = 0; m < s; ++m)
    {
      out.push_back(c[m]);
    }
  }
  return out;
}

/// Monomial coefficients (ascending) of the k-th basis function of a
/// three-term or Bernstein basis of the given grade.
inline poly::Coeffs basis_function_coefficients(const Basis &basis, std::size_t k, std::size_t grade)
{
  if (basis.is_three_term())
  {
    poly::Coeffs prev, cur{1.0};
    for (std::size_t j = 0; j < k; ++j)
    {
      const auto r = recurrence_row(basis, j);
      // φ_{j+1} = ((z - β) φ_j - γ φ_{j-1}) / α
      poly::Coeffs next = poly::times_linear(cur, r.beta);
      for (std::size_t m = 0; m < prev.size(); ++m)
      {
        next[m] -= r.gamma * prev[m];
      }
      for (auto &v : next)
      {
        v /= r.alpha;
      }
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }
  if (basis.is_bernstein())
  {
    poly::Coeffs c{poly::binomial(grade, k)};
    for (std::size_t j = 0; j < k; ++j)
    {
      c = poly::multiply(c, {0.0, 1.0});
    }
    for (std::size_t j = 0; j < grade - k; ++j)
    {
      c = poly::multiply(c, {1.0, -1.0});
    }
    return c;
  }
  throw Error(ErrorCode::UnsupportedBasis, "monomial expansion needs a three-term or Bernstein basis");
}

/// Change-of-basis matrix Φ mapping descending monomials to the pencil's
/// right-null-vector functions.
///   three-term: rows φ_{ℓ-1}, ..., φ_0                       (ℓ × ℓ)
///   Bernstein:  rows ψ_k = C(ℓ,k+1) z^{ℓ-1-k} (1-z)^k       (ℓ × ℓ)
///   Lagrange:   row ω, then rows ℓ_0, ..., ℓ_ℓ              ((ℓ+2) × (ℓ+2))
inline CMatrix null_vector_basis_matrix(const Basis &basis, std::size_t grade)
{
  if (basis.is_three_term())
  {
    if (grade == 0)
    {
      throw Error(ErrorCode::GradeTooSmall, "grade must be at least 1");
    }
    CMatrix phi(grade, grade);
    for (std::size_t r = 0; r < grade; ++r)
    {
      const auto c = poly::descending(basis_function_coefficients(basis, grade - 1 - r, grade), grade);
      for (std::size_t j = 0; j < grade; ++j)
      {
        phi(r, j) = c[j];
      }
    }
    return phi;
  }
  if (basis.is_bernstein())
  {
    if (grade == 0)
    {
      throw Error(ErrorCode::GradeTooSmall, "grade must be at least 1");
    }
    CMatrix phi(grade, grade);
    for (std::size_t k = 0; k < grade; ++k)
    {
      poly::Coeffs c{poly::binomial(grade, k + 1)};
      for (std::size_t j = 0; j + 1 + k < grade; ++j)
      {
        c = poly::multiply(c, {0.0, 1.0});
      }
      for (std::size_t j = 0; j < k; ++j)
      {
        c = poly::multiply(c, {1.0, -1.0});
      }
      const auto d = poly::descending(c, grade);
      for (std::size_t j = 0; j < grade; ++j)
      {
        phi(k, j) = d[j];
      }
    }
    return phi;
  }
  if (basis.is_lagrange())
  {
    const auto &tau = basis.lagrange().nodes;
    const std::size_t size = tau.size() + 1;
    CMatrix phi(size, size);
    const auto omega = node_polynomial(basis);
    for (std::size_t j = 0; j < size; ++j)
    {
      phi(0, j) = omega[j];
    }
    const auto w = lagrange_weights(tau);
    for (std::size_t k = 0; k < tau.size(); ++k)
    {
      poly::Coeffs c{w[k]};
      for (std::size_t j = 0; j < tau.size(); ++j)
      {
        if (j != k)
        {
          c = poly::times_linear(c, tau[j]);
        }
      }
      const auto d = poly::descending(c, size);
      for (std::size_t j = 0; j < size; ++j)
      {
        phi(k + 1, j) = d[j];
      }
    }
    return phi;
  }
  throw Error(ErrorCode::UnsupportedBasis, "no change-of-basis matrix for the Hermite basis");
}

}  // namespace linpencil
