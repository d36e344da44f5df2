// Copyright 2026 The linpencil Authors
// SPDX-License-Identifier: Apache-2.0
//
// Subcommands of the linpencil tool. Each writes one JSON document to `out`
// and diagnostics to `err`, and returns the process exit code:
//
//   0  success
//   2  unreadable file, malformed JSON, schema violation, bad arguments
//   3  construction error reported by the library
//   4  eigenvalue iteration did not converge
//   5  a verification residual exceeded --tol

#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "document.hpp"
#include "linpencil/linpencil.hpp"

namespace linpencil::cli
{

enum ExitCode : int
{
  kOk = 0,
  kSchema = 2,
  kConstruction = 3,
  kNoConvergence = 4,
  kVerificationFailed = 5,
};

struct Options
{
  double tol = 1e-8;
  std::size_t samples = 10;
  std::uint64_t seed = 0;
  bool pretty = false;
  double radius = 2.0;
  double residual_cutoff = 1e-6;
};

inline void emit(std::ostream &out, const Json &j, const Options &o)
{
  out << (o.pretty ? j.dump(2) : j.dump()) << '\n';
}

inline Json pencil_json(const CompanionPencil &pc, const GeneralizedStandardTriple &t)
{
  return {{"N", pc.size()},   {"n", pc.n},         {"grade", pc.ell},   {"basis", pc.basis.name()},
          {"C1", to_json(pc.c1)}, {"C0", to_json(pc.c0)}, {"X", to_json(t.x)}, {"Y", to_json(t.y)}};
}

inline int cmd_pencil(const std::string &file, const Options &o, std::ostream &out)
{
  const auto p = polynomial_from_json(read_json_file(file));
  const auto pc = build_pencil(p);
  emit(out, pencil_json(pc, make_triple(pc)), o);
  return kOk;
}

inline int cmd_eig(const std::string &file, const Options &o, std::ostream &out)
{
  const auto p = polynomial_from_json(read_json_file(file));
  const auto res = generalized_eigenvalues(p, o.seed);
  Json finite = Json::array(), residuals = Json::array(), spurious = Json::array();
  for (const auto &f : res.finite)
  {
    if (f.residual <= o.residual_cutoff)
    {
      finite.push_back(to_json(f.lambda));
      residuals.push_back(f.residual);
    }
    else
    {
      spurious.push_back({{"lambda", to_json(f.lambda)}, {"magnitude", std::abs(f.lambda)}, {"residual", f.residual}});
    }
  }
  emit(out,
       {{"N", res.finite.size() + res.infinite_count},
        {"finite", std::move(finite)},
        {"residuals", std::move(residuals)},
        {"spurious", std::move(spurious)},
        {"infinite_count", res.infinite_count},
        {"shift", to_json(res.shift_used)},
        {"residual_cutoff", o.residual_cutoff}},
       o);
  return kOk;
}

inline int cmd_verify(const std::string &file, const Options &o, std::ostream &out)
{
  const auto p = polynomial_from_json(read_json_file(file));
  const auto pc = build_pencil(p);
  const auto t = make_triple(pc);
  std::mt19937_64 rng(o.seed);
  const auto zs = sample_points(pc, o.samples, o.radius, rng);
  const double r = verify_triple(t, p, zs);
  const bool ok = r <= o.tol;
  emit(out,
       {{"residual", r},
        {"samples", zs.size()},
        {"points", to_json(zs)},
        {"tol", o.tol},
        {"determinant_scale", to_json(determinant_scale(pc))},
        {"passed", ok}},
       o);
  return ok ? kOk : kVerificationFailed;
}

inline CMatrix coupling_from_file(const std::string &file, std::size_t n)
{
  if (file.empty())
  {
    return CMatrix(n, n);
  }
  const Json j = read_json_file(file);
  const CMatrix c = matrix_from_json(j.is_object() && j.contains("C") ? j["C"] : j, "C");
  if (c.rows() != n || c.cols() != n)
  {
    throw SchemaError("C must be " + std::to_string(n) + " x " + std::to_string(n));
  }
  return c;
}

inline int cmd_alglin(const std::string &file_a, const std::string &file_b, const std::string &file_c,
                      const Options &o, std::ostream &out)
{
  const auto a = polynomial_from_json(read_json_file(file_a));
  const auto b = polynomial_from_json(read_json_file(file_b));
  if (a.n() != b.n())
  {
    throw Error(ErrorCode::DimensionMismatch, "A and B have different block sizes");
  }
  const CMatrix c = coupling_from_file(file_c, a.n());
  const auto al = build_algebraic(make_triple(build_pencil(a)), make_triple(build_pencil(b)), c);

  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> u(-o.radius, o.radius);
  std::vector<Complex> zs;
  for (std::size_t tries = 0; zs.size() < o.samples && tries < 100 * o.samples; ++tries)
  {
    const Complex z(u(rng), u(rng));
    if (std::abs(determinant(evaluate_algebraic(a, b, c, z))) > 1e-10)
    {
      zs.push_back(z);
    }
  }
  const auto check = verify_algebraic(al, a, b, c, zs);
  const bool ok = check.spread <= o.tol;
  emit(out,
       {{"DH", to_json(al.dh)},
        {"EH", to_json(al.eh)},
        {"na", al.na},
        {"nb", al.nb},
        {"n", al.n},
        {"spread", check.spread},
        {"kappa", to_json(check.kappa)},
        {"tol", o.tol},
        {"passed", ok}},
       o);
  return ok ? kOk : kVerificationFailed;
}

inline int cmd_equiv(const std::string &file, const Options &o, std::ostream &out)
{
  const auto p = polynomial_from_json(read_json_file(file));
  const auto pair = equivalence(p);
  const auto pc = build_pencil(p);
  const double dev = verify_equivalence(pair, pc);
  const double scale = std::max({1.0, max_abs(pc.c0), max_abs(pc.c1)});
  const bool ok = dev <= o.tol * scale;
  emit(out,
       {{"E", to_json(pair.e)},
        {"F", to_json(pair.f)},
        {"direction", to_string(pair.direction)},
        {"C1_monomial", to_json(pair.monomial.c1)},
        {"C0_monomial", to_json(pair.monomial.c0)},
        {"deviation", dev},
        {"tol", o.tol},
        {"passed", ok}},
       o);
  return ok ? kOk : kVerificationFailed;
}

inline int cmd_bary(const std::string &file, const Options &o, std::ostream &out)
{
  const Basis basis = basis_from_document(read_json_file(file));
  Json j{{"basis", basis.name()},
         {"weights", to_json(barycentric_weights(basis))},
         {"node_polynomial", to_json(node_polynomial(basis))}};
  if (basis.is_hermite())
  {
    j["layout"] = "node-major; within a node, derivative index descending";
  }
  emit(out, j, o);
  return kOk;
}

/// Entry point shared by main() and the tests.
inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Companion pencils and generalized standard triples for matrix polynomials", "linpencil"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--tol", o.tol, "Verification tolerance")->check(CLI::PositiveNumber);
  app.add_option("--samples", o.samples, "Number of random sample points")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Seed for sample points and eigenvalue shifts");
  app.add_flag("--pretty", o.pretty, "Indent JSON output");

  std::string input, input_b, input_c;
  auto *pencil = app.add_subcommand("pencil", "Build the companion pencil and X, Y");
  auto *eig = app.add_subcommand("eig", "Generalized eigenvalues with residuals");
  auto *verify = app.add_subcommand("verify", "Check X(zC1-C0)^{-1}Y P(z) = I at random points");
  auto *alglin = app.add_subcommand("alglin", "Pencil for z A(z) B(z) + C");
  auto *equiv = app.add_subcommand("equiv", "Strict equivalence to the monomial companion pencil");
  auto *bary = app.add_subcommand("bary", "Barycentric weights of an interpolational basis");
  for (auto *sub : {pencil, eig, verify, equiv, bary})
  {
    sub->add_option("file", input, "Polynomial document (JSON)")->required();
  }
  eig->add_option("--residual-cutoff", o.residual_cutoff,
                  "Finite eigenvalues with a larger residual are listed as spurious");
  verify->add_option("--radius", o.radius, "Sample disk radius")->check(CLI::PositiveNumber);
  alglin->add_option("a", input, "Document for A")->required();
  alglin->add_option("b", input_b, "Document for B")->required();
  alglin->add_option("--c", input_c, "JSON matrix C (default zero)");

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::CallForHelp &)
  {
    out << app.help();
    return kOk;
  }
  catch (const CLI::ParseError &e)
  {
    err << "linpencil: " << e.what() << '\n';
    return kSchema;
  }

  try
  {
    if (pencil->parsed())
    {
      return cmd_pencil(input, o, out);
    }
    if (eig->parsed())
    {
      return cmd_eig(input, o, out);
    }
    if (verify->parsed())
    {
      return cmd_verify(input, o, out);
    }
    if (alglin->parsed())
    {
      return cmd_alglin(input, input_b, input_c, o, out);
    }
    if (equiv->parsed())
    {
      return cmd_equiv(input, o, out);
    }
    return cmd_bary(input, o, out);
  }
  catch (const SchemaError &e)
  {
    err << "linpencil: " << e.what() << '\n';
    return kSchema;
  }
  catch (const Json::exception &e)
  {
    err << "linpencil: " << e.what() << '\n';
    return kSchema;
  }
  catch (const Error &e)
  {
    err << "linpencil: " << e.what() << '\n';
    return e.code() == ErrorCode::NoConvergence ? kNoConvergence : kConstruction;
  }
}

}  // namespace linpencil::cli
