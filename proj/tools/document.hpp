// Copyright 2026 The linpencil Authors
// SPDX-License-Identifier: Apache-2.0
//
// JSON encoding of polynomials, matrices and complex numbers.
//
//   {
//     "basis": {"kind": "newton", "nodes": [1, 0.5, [0, 1]]},
//     "n": 2,
//     "grade": 3,
//     "coefficients": [ [[a, b], [c, d]], ... ]      three-term, bernstein
//     "samples":      [ M_0, M_1, ... ]              lagrange
//     "hermite_samples": [ [M_00, M_01], [M_10] ]    hermite
//   }
//
// Complex entries are [re, im]; a bare number is read as a real entry.
// "shift" applies to the shifted and taylor kinds; "recurrence" to custom,
// as {"alpha": [...], "beta": [...], "gamma": [...]}.

#pragma once

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "linpencil/linpencil.hpp"

namespace linpencil::cli
{

using Json = nlohmann::json;

/// Malformed input: bad JSON, wrong types, inconsistent sizes.
class SchemaError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

inline Json read_json_file(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw SchemaError("cannot open " + path);
  }
  try
  {
    return Json::parse(in);
  }
  catch (const Json::parse_error &e)
  {
    throw SchemaError(path + ": " + e.what());
  }
}

inline Complex complex_from_json(const Json &j, const std::string &where)
{
  if (j.is_number())
  {
    return j.get<double>();
  }
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
  {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw SchemaError(where + ": expected a number or [re, im]");
}

inline Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

inline std::vector<Complex> complex_list(const Json &j, const std::string &where)
{
  if (!j.is_array())
  {
    throw SchemaError(where + ": expected an array");
  }
  std::vector<Complex> out;
  for (std::size_t k = 0; k < j.size(); ++k)
  {
    out.push_back(complex_from_json(j[k], where + "[" + std::to_string(k) + "]"));
  }
  return out;
}

inline Json to_json(const std::vector<Complex> &v)
{
  Json a = Json::array();
  for (auto z : v)
  {
    a.push_back(to_json(z));
  }
  return a;
}

inline CMatrix matrix_from_json(const Json &j, const std::string &where)
{
  if (j.is_number() || (j.is_array() && j.size() == 2 && j[0].is_number()))
  {
    return CMatrix(1, 1, complex_from_json(j, where));
  }
  if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
  {
    throw SchemaError(where + ": expected a non-empty array of rows");
  }
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].size();
  std::vector<Complex> entries;
  entries.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
  {
    if (!j[r].is_array() || j[r].size() != cols)
    {
      throw SchemaError(where + ": ragged matrix at row " + std::to_string(r));
    }
    for (std::size_t c = 0; c < cols; ++c)
    {
      entries.push_back(complex_from_json(j[r][c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
    }
  }
  try
  {
    return CMatrix(rows, cols, std::move(entries));
  }
  catch (const Error &e)
  {
    throw SchemaError(where + ": " + e.what());
  }
}

inline Json to_json(const CMatrix &m)
{
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
  {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
    {
      row.push_back(to_json(m(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::vector<CMatrix> matrix_list(const Json &j, const std::string &where)
{
  if (!j.is_array() || j.empty())
  {
    throw SchemaError(where + ": expected a non-empty array of matrices");
  }
  std::vector<CMatrix> out;
  for (std::size_t k = 0; k < j.size(); ++k)
  {
    out.push_back(matrix_from_json(j[k], where + "[" + std::to_string(k) + "]"));
  }
  return out;
}

namespace detail
{

inline std::size_t count_field(const Json &doc, const char *key)
{
  const auto &v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
  {
    throw SchemaError(std::string("\"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

inline Basis basis_from_json(const Json &b, std::size_t coefficient_count)
{
  if (!b.is_object() || !b.contains("kind") || !b["kind"].is_string())
  {
    throw SchemaError("\"basis\" must be an object with a string \"kind\"");
  }
  const std::string kind = b["kind"].get<std::string>();
  auto nodes = [&]()
  {
    if (!b.contains("nodes"))
    {
      throw SchemaError(kind + " basis needs \"nodes\"");
    }
    return complex_list(b["nodes"], "basis.nodes");
  };
  auto shift = [&]() { return b.contains("shift") ? complex_from_json(b["shift"], "basis.shift") : Complex{}; };

  if (kind == "monomial")
  {
    return Basis::monomial();
  }
  if (kind == "shifted")
  {
    return Basis::shifted_monomial(shift());
  }
  if (kind == "taylor")
  {
    return Basis::taylor(shift());
  }
  if (kind == "chebyshev")
  {
    return Basis::chebyshev();
  }
  if (kind == "legendre")
  {
    return Basis::legendre();
  }
  if (kind == "newton")
  {
    return Basis::newton(nodes());
  }
  if (kind == "bernstein")
  {
    if (coefficient_count == 0)
    {
      throw SchemaError("bernstein basis needs coefficients");
    }
    return Basis::bernstein(coefficient_count - 1);
  }
  if (kind == "lagrange")
  {
    return Basis::lagrange(nodes());
  }
  if (kind == "hermite")
  {
    if (!b.contains("confluencies") || !b["confluencies"].is_array())
    {
      throw SchemaError("hermite basis needs an array \"confluencies\"");
    }
    std::vector<std::size_t> s;
    for (const auto &v : b["confluencies"])
    {
      if (!v.is_number_integer() || v.get<long long>() < 0)
      {
        throw SchemaError("confluencies must be non-negative integers");
      }
      s.push_back(v.get<std::size_t>());
    }
    return Basis::hermite(nodes(), std::move(s));
  }
  if (kind == "custom")
  {
    if (!b.contains("recurrence") || !b["recurrence"].is_object())
    {
      throw SchemaError("custom basis needs a \"recurrence\" object");
    }
    const auto &r = b["recurrence"];
    if (!r.contains("alpha") || !r.contains("beta") || !r.contains("gamma"))
    {
      throw SchemaError("recurrence needs \"alpha\", \"beta\" and \"gamma\"");
    }
    const auto a = complex_list(r["alpha"], "recurrence.alpha");
    const auto be = complex_list(r["beta"], "recurrence.beta");
    const auto g = complex_list(r["gamma"], "recurrence.gamma");
    if (a.size() != be.size() || a.size() != g.size())
    {
      throw SchemaError("recurrence arrays differ in length");
    }
    std::vector<RecurrenceRow> rows;
    for (std::size_t k = 0; k < a.size(); ++k)
    {
      rows.push_back({a[k], be[k], g[k]});
    }
    return Basis::custom(std::move(rows));
  }
  throw SchemaError("unknown basis kind \"" + kind + "\"");
}

inline Json basis_to_json(const Basis &basis)
{
  Json b{{"kind", basis.name()}};
  if (basis.is_three_term())
  {
    const auto &t = basis.three_term();
    if (t.kind == ThreeTermKind::ShiftedMonomial || t.kind == ThreeTermKind::Taylor)
    {
      b["shift"] = to_json(t.shift);
    }
    if (t.kind == ThreeTermKind::Newton)
    {
      b["nodes"] = to_json(t.nodes);
    }
    if (t.kind == ThreeTermKind::Custom)
    {
      std::vector<Complex> a, be, g;
      for (const auto &r : t.rows)
      {
        a.push_back(r.alpha);
        be.push_back(r.beta);
        g.push_back(r.gamma);
      }
      b["recurrence"] = {{"alpha", to_json(a)}, {"beta", to_json(be)}, {"gamma", to_json(g)}};
    }
  }
  else if (basis.is_lagrange())
  {
    b["nodes"] = to_json(basis.lagrange().nodes);
  }
  else if (basis.is_hermite())
  {
    b["nodes"] = to_json(basis.hermite().nodes);
    b["confluencies"] = basis.hermite().confluencies;
  }
  return b;
}

}  // namespace detail

/// Basis only (for documents that carry no payload, e.g. for `bary`).
inline Basis basis_from_document(const Json &doc)
{
  if (!doc.is_object() || !doc.contains("basis"))
  {
    throw SchemaError("document needs a \"basis\" object");
  }
  std::size_t count = 0;
  if (doc.contains("coefficients") && doc["coefficients"].is_array())
  {
    count = doc["coefficients"].size();
  }
  else if (doc.contains("grade"))
  {
    count = detail::count_field(doc, "grade") + 1;
  }
  return detail::basis_from_json(doc["basis"], count);
}

/// Schema violations throw SchemaError; violations of library invariants
/// (duplicate nodes, bad confluency counts, ...) throw linpencil::Error.
inline MatrixPolynomial polynomial_from_json(const Json &doc)
{
  if (!doc.is_object())
  {
    throw SchemaError("document must be a JSON object");
  }
  const int payloads = static_cast<int>(doc.contains("coefficients")) + static_cast<int>(doc.contains("samples")) +
                       static_cast<int>(doc.contains("hermite_samples"));
  if (payloads != 1)
  {
    throw SchemaError("exactly one of \"coefficients\", \"samples\", \"hermite_samples\" is required");
  }
  const Basis basis = basis_from_document(doc);

  std::optional<MatrixPolynomial> p;
  if (doc.contains("coefficients"))
  {
    auto c = matrix_list(doc["coefficients"], "coefficients");
    if (basis.is_interpolational())
    {
      throw SchemaError(basis.name() + " basis takes samples, not coefficients");
    }
    p = MatrixPolynomial::from_coefficients(basis, std::move(c));
  }
  else if (doc.contains("samples"))
  {
    if (!basis.is_lagrange())
    {
      throw SchemaError("\"samples\" needs a lagrange basis");
    }
    p = MatrixPolynomial::from_samples(basis, matrix_list(doc["samples"], "samples"));
  }
  else
  {
    if (!basis.is_hermite())
    {
      throw SchemaError("\"hermite_samples\" needs a hermite basis");
    }
    const auto &h = doc["hermite_samples"];
    if (!h.is_array())
    {
      throw SchemaError("\"hermite_samples\" must be an array of arrays");
    }
    std::vector<std::vector<CMatrix>> rho;
    for (std::size_t i = 0; i < h.size(); ++i)
    {
      rho.push_back(matrix_list(h[i], "hermite_samples[" + std::to_string(i) + "]"));
    }
    p = MatrixPolynomial::from_hermite(basis, std::move(rho));
  }
  if (doc.contains("n") && detail::count_field(doc, "n") != p->n())
  {
    throw SchemaError("\"n\" is " + std::to_string(detail::count_field(doc, "n")) + " but the matrices are " +
                      std::to_string(p->n()) + " x " + std::to_string(p->n()));
  }
  if (doc.contains("grade") && detail::count_field(doc, "grade") != p->grade())
  {
    throw SchemaError("\"grade\" is " + std::to_string(detail::count_field(doc, "grade")) +
                      " but the data implies grade " + std::to_string(p->grade()));
  }
  return std::move(*p);
}

inline Json to_json(const MatrixPolynomial &p)
{
  Json doc{{"basis", detail::basis_to_json(p.basis())}, {"n", p.n()}, {"grade", p.grade()}};
  std::visit(
      [&](const auto &pl)
      {
        using T = std::decay_t<decltype(pl)>;
        if constexpr (std::is_same_v<T, MatrixPolynomial::Coefficients>)
        {
          Json a = Json::array();
          for (const auto &m : pl.p)
          {
            a.push_back(to_json(m));
          }
          doc["coefficients"] = std::move(a);
        }
        else if constexpr (std::is_same_v<T, MatrixPolynomial::Samples>)
        {
          Json a = Json::array();
          for (const auto &m : pl.rho)
          {
            a.push_back(to_json(m));
          }
          doc["samples"] = std::move(a);
        }
        else
        {
          Json a = Json::array();
          for (const auto &node : pl.rho)
          {
            Json b = Json::array();
            for (const auto &m : node)
            {
              b.push_back(to_json(m));
            }
            a.push_back(std::move(b));
          }
          doc["hermite_samples"] = std::move(a);
        }
      },
      p.payload());
  return doc;
}

}  // namespace linpencil::cli
