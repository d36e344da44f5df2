// Copyright 2026 The linpencil Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"

namespace linpencil::cli
{
namespace
{

const std::string kData = LINPENCIL_DATA_DIR;

struct Outcome
{
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome invoke(std::vector<std::string> args)
{
  args.insert(args.begin(), "linpencil");
  std::vector<const char *> argv;
  for (const auto &a : args)
  {
    argv.push_back(a.c_str());
  }
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string &name) { return kData + "/" + name; }

std::string temp_file(const std::string &name, const std::string &content)
{
  const auto path = std::filesystem::temp_directory_path() / ("linpencil_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

TEST(CliPencil, NewtonDocument)
{
  const auto r = invoke({"pencil", data("newton.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.err.empty());
  const auto j = r.json();
  EXPECT_EQ(j["N"], 6);
  EXPECT_NEAR(j["C1"][0][0][0].get<double>(), 17.2, 1e-14);
  EXPECT_NEAR(j["C1"][0][1][0].get<double>(), -12.2, 1e-14);
  EXPECT_NEAR(j["C1"][1][1][0].get<double>(), -9.6, 1e-14);
  EXPECT_NEAR(j["C0"][0][0][0].get<double>(), -557.0 / 20, 1e-12);
  EXPECT_EQ(j["X"].size(), 2u);
  EXPECT_EQ(j["Y"].size(), 6u);
}

TEST(CliPencil, RoundTripIsExact)
{
  const auto p = polynomial_from_json(read_json_file(data("bernstein_singular.json")));
  const auto pc = build_pencil(p);
  const auto j = invoke({"pencil", data("bernstein_singular.json")}).json();
  EXPECT_EQ(matrix_from_json(j["C1"], "C1"), pc.c1);
  EXPECT_EQ(matrix_from_json(j["C0"], "C0"), pc.c0);
  EXPECT_EQ(matrix_from_json(j["X"], "X"), make_triple(pc).x);
}

TEST(CliPencil, DocumentRoundTrip)
{
  for (const char *name : {"newton.json", "hermite_matrix.json", "lagrange_identity.json", "complex_taylor.json"})
  {
    const auto p = polynomial_from_json(read_json_file(data(name)));
    const auto q = polynomial_from_json(Json::parse(to_json(p).dump()));
    EXPECT_EQ(build_pencil(p).c0, build_pencil(q).c0) << name;
    EXPECT_EQ(q.basis().name(), p.basis().name());
  }
}

TEST(CliPencil, ExitCodes)
{
  const auto malformed = invoke({"pencil", data("malformed.json")});
  EXPECT_EQ(malformed.code, 2);
  EXPECT_TRUE(malformed.out.empty());
  const auto dup = invoke({"pencil", data("lagrange_duplicate.json")});
  EXPECT_EQ(dup.code, 3);
  EXPECT_NE(dup.err.find("duplicate node"), std::string::npos);
  EXPECT_EQ(invoke({"pencil", data("no_such_file.json")}).code, 2);
  EXPECT_EQ(invoke({"pencil"}).code, 2);
  EXPECT_EQ(invoke({"frobnicate", data("newton.json")}).code, 2);
  EXPECT_EQ(invoke({"--tol", "-1", "verify", data("newton.json")}).code, 2);
}

TEST(CliSchema, Violations)
{
  const auto unknown = temp_file("unknown.json", R"({"basis":{"kind":"hermit"},"samples":[1]})");
  EXPECT_EQ(invoke({"pencil", unknown}).code, 2);
  const auto wrong_n = temp_file("wrong_n.json", R"({"basis":{"kind":"monomial"},"n":2,"coefficients":[1,2]})");
  EXPECT_EQ(invoke({"pencil", wrong_n}).code, 2);
  const auto wrong_grade =
      temp_file("wrong_grade.json", R"({"basis":{"kind":"monomial"},"grade":3,"coefficients":[1,2]})");
  EXPECT_EQ(invoke({"pencil", wrong_grade}).code, 2);
  const auto two_payloads =
      temp_file("two.json", R"({"basis":{"kind":"lagrange","nodes":[0]},"samples":[1],"coefficients":[1]})");
  EXPECT_EQ(invoke({"pencil", two_payloads}).code, 2);
  const auto bad_entry = temp_file("bad_entry.json", R"({"basis":{"kind":"monomial"},"coefficients":[1,"x"]})");
  EXPECT_EQ(invoke({"pencil", bad_entry}).code, 2);
  const auto bad_conf = temp_file(
      "bad_conf.json", R"({"basis":{"kind":"hermite","nodes":[0,1],"confluencies":[1,2]},"hermite_samples":[[1],[1]]})");
  EXPECT_EQ(invoke({"pencil", bad_conf}).code, 3);
  const auto grade0 = temp_file("grade0.json", R"({"basis":{"kind":"monomial"},"coefficients":[1]})");
  EXPECT_EQ(invoke({"pencil", grade0}).code, 3);
}

TEST(CliSchema, RealShorthandAndComplexPairs)
{
  const auto doc = temp_file("shorthand.json", R"({"basis":{"kind":"shifted","shift":[0,1]},"coefficients":[[[1]],[[[0,2]]]]})");
  const auto j = invoke({"pencil", doc}).json();
  // pencil z*(2i) - (i*2i - 1)... C1 = P1/α, C0 = β P1/α - P0
  EXPECT_NEAR(j["C1"][0][0][1].get<double>(), 2.0, 1e-15);
  EXPECT_NEAR(j["C0"][0][0][0].get<double>(), -3.0, 1e-15);
}

TEST(CliEig, ScalarQuadratic)
{
  const auto r = invoke({"eig", data("quadratic.json")});
  ASSERT_EQ(r.code, 0);
  const auto j = r.json();
  ASSERT_EQ(j["finite"].size(), 2u);
  EXPECT_NEAR(j["finite"][0][1].get<double>(), -1.0, 1e-12);
  EXPECT_NEAR(j["finite"][1][1].get<double>(), 1.0, 1e-12);
  EXPECT_EQ(j["infinite_count"], 0);
}

TEST(CliEig, LagrangeIdentityHasNoFiniteEigenvalues)
{
  const auto j = invoke({"eig", data("lagrange_identity.json")}).json();
  EXPECT_TRUE(j["finite"].empty());
  EXPECT_EQ(j["N"], 8);
  EXPECT_GE(j["infinite_count"].get<int>() + static_cast<int>(j["spurious"].size()), 4);
}

TEST(CliEig, HermiteConstantMagnitudes)
{
  const auto j = invoke({"eig", data("hermite_constant.json")}).json();
  for (const auto &s : j["spurious"])
  {
    EXPECT_GT(s["magnitude"].get<double>(), 10.0);
  }
  EXPECT_TRUE(j["finite"].empty());
}

TEST(CliEig, SeedIsDeterministic)
{
  EXPECT_EQ(invoke({"--seed", "5", "eig", data("newton.json")}).out,
            invoke({"--seed", "5", "eig", data("newton.json")}).out);
}

TEST(CliVerify, BernsteinMonic)
{
  const auto r = invoke({"--samples", "12", "verify", data("bernstein_monic.json")});
  ASSERT_EQ(r.code, 0);
  const auto j = r.json();
  EXPECT_LE(j["residual"].get<double>(), 1e-9);
  EXPECT_EQ(j["samples"], 12);
  EXPECT_TRUE(j["passed"].get<bool>());
}

TEST(CliVerify, AllDocumentsPass)
{
  for (const char *name : {"newton.json", "chebyshev.json", "bernstein_singular.json", "lagrange_identity.json",
                           "hermite_constant.json", "hermite_matrix.json", "complex_taylor.json"})
  {
    EXPECT_EQ(invoke({"verify", data(name)}).code, 0) << name;
  }
}

TEST(CliVerify, ToleranceFailureExitsFive)
{
  const auto r = invoke({"--tol", "1e-300", "verify", data("newton.json")});
  EXPECT_EQ(r.code, 5);
  EXPECT_FALSE(r.json()["passed"].get<bool>());
}

TEST(CliAlglin, ScalarOracle)
{
  const auto r = invoke({"alglin", data("quadratic.json"), data("quadratic_plus_two.json"), "--c", data("coupling_three.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.json();
  EXPECT_LE(j["spread"].get<double>(), 1e-8);
  EXPECT_EQ(j["DH"].size(), 5u);
  EXPECT_NEAR(j["EH"][0][4][0].get<double>(), -3.0, 1e-15);
}

TEST(CliAlglin, DefaultCouplingAndMismatch)
{
  EXPECT_EQ(invoke({"alglin", data("quadratic.json"), data("quadratic_plus_two.json")}).code, 0);
  EXPECT_EQ(invoke({"alglin", data("quadratic.json"), data("newton.json")}).code, 3);
}

TEST(CliEquiv, BernsteinGolden)
{
  const auto r = invoke({"equiv", data("bernstein_equiv.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto e = matrix_from_json(r.json()["E"], "E");
  const CMatrix golden{{1, 11.0 / 4, 7.0 / 6, 1.0 / 4}, {0, 1.0 / 4, 0, 0}, {0, 1.0 / 4, 1.0 / 6, 0}, {0, 1.0 / 4, 1.0 / 3, 1.0 / 4}};
  EXPECT_LT(max_abs(e - golden), 1e-12);
  EXPECT_EQ(r.json()["direction"], "to_monomial");
}

TEST(CliEquiv, LagrangeAndUnsupported)
{
  EXPECT_EQ(invoke({"equiv", data("lagrange_equiv.json")}).code, 0);
  EXPECT_EQ(invoke({"equiv", data("hermite_matrix.json")}).code, 3);
}

TEST(CliBary, HermiteWeights)
{
  const auto j = invoke({"bary", data("hermite_constant.json")}).json();
  const std::vector<double> w{1.0 / 6, -25.0 / 36, 32.0 / 27, -32.0 / 9, 1.0 / 3, 11.0 / 9, 331.0 / 108};
  ASSERT_EQ(j["weights"].size(), w.size());
  for (std::size_t k = 0; k < w.size(); ++k)
  {
    EXPECT_NEAR(j["weights"][k][0].get<double>(), w[k], 1e-12);
  }
  EXPECT_EQ(invoke({"bary", data("newton.json")}).code, 3);
}

TEST(CliOutput, PrettyAndHelp)
{
  const auto pretty = invoke({"--pretty", "bary", data("hermite_constant.json")});
  EXPECT_NE(pretty.out.find("\n  "), std::string::npos);
  const auto trailing = invoke({"bary", data("hermite_constant.json"), "--pretty"});
  EXPECT_EQ(trailing.code, 0);
  EXPECT_EQ(trailing.out, pretty.out);
  const auto help = invoke({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("verify"), std::string::npos);
}

}  // namespace
}  // namespace linpencil::cli
