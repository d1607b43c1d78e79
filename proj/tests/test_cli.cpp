// Copyright 2026 The IrrepForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "irrepforge/serialization.hpp"

namespace irrepforge {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json invoke_json(std::vector<std::string> args) {
  const auto r = invoke(std::move(args));
  EXPECT_EQ(r.code, 0) << r.err;
  return Json::parse(r.out);
}

TEST(Cli, Dim) { EXPECT_EQ(invoke_json({"dim", "-n", "3", "-K", "1,1"}), Json::parse(R"({"dimension": 8})")); }

TEST(Cli, DmatrixZeroAnglesIsIdentity) {
  const Json j = invoke_json({"dmatrix", "-n", "2", "-K", "1", "--angles", "1:0,0,0"});
  EXPECT_EQ(matrix_from_json(j["matrix"]), ComplexMatrix::Identity(2, 2));
}

TEST(Cli, CanonicalAdjoint) {
  const Json j = invoke_json({"canonical", "-n", "3", "-K", "1,1"});
  ASSERT_EQ(j["states"].size(), 8u);
  int zero_weight = 0;
  for (const auto& s : j["states"]) {
    const auto st = s.get<CanonicalState>();
    if (st.label.weights.at(3) == Weight{0, 0}) ++zero_weight;
  }
  EXPECT_EQ(zero_weight, 2);
}

TEST(Cli, BasisRoundTrip) {
  const auto r = invoke({"basis", "-n", "3", "-K", "2,1"});
  ASSERT_EQ(r.code, 0);
  const auto table = Json::parse(r.out).get<VertexTable>();
  EXPECT_EQ(table.state_count(), 15u);
  EXPECT_EQ(Json(table).dump() + "\n", r.out);
}

TEST(Cli, CanonicalRoundTrip) {
  const auto r = invoke({"canonical", "-n", "4", "-K", "1,0,1", "--chain", "1,2,4;2,4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  const auto basis = canonical_basis(4, IrrepLabel({1, 0, 1}), SubalgebraChain::from_levels(4, {{1, 2, 4}, {2, 4}}));
  ASSERT_EQ(j["states"].size(), basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a) {
    const auto s = j["states"][a].get<CanonicalState>();
    EXPECT_EQ(s.state, basis.states[a].state);
    EXPECT_EQ(s.label, basis.states[a].label);
  }
}

TEST(Cli, DfunSymbolicAndNumericRoundTrip) {
  const Json sym = invoke_json({"dfun", "-n", "3", "-K", "1,1", "--row", "3", "--col", "4", "--symbolic"});
  const auto d = sym["d"].get<DPolynomial>();
  EXPECT_EQ(Json(d), sym["d"]);
  const auto row = sym["row"].get<CanonicalLabel>();
  const auto col = sym["col"].get<CanonicalLabel>();
  const auto basis = canonical_basis(3, IrrepLabel({1, 1}), SubalgebraChain::canonical(3));
  EXPECT_EQ(d, d_function_symbolic(basis, row, col));

  const std::string angles = "1:0.3,1.2,-0.4;2:1.0,0.5,2.0";
  const Json num = invoke_json({"dfun", "-n", "3", "-K", "1,1", "--row", "3", "--col", "4", "--angles", angles});
  const std::vector<EulerFactor> f{{1, 0.3, 1.2, -0.4}, {2, 1.0, 0.5, 2.0}};
  const auto value = d.evaluate(build_unitary(3, f));
  EXPECT_NEAR(num["value"][0].get<double>(), value.real(), 1e-12);
  EXPECT_NEAR(num["value"][1].get<double>(), value.imag(), 1e-12);
}

TEST(Cli, MatrixFileInput) {
  const auto path = std::filesystem::temp_directory_path() / "irrepforge_cli_matrix.json";
  std::mt19937_64 rng(73);
  const ComplexMatrix V = random_special_unitary(3, rng);
  std::ofstream(path) << matrix_to_json(V).dump();
  const Json j = invoke_json({"dmatrix", "-n", "3", "-K", "1,0", "--matrix", path.string()});
  const auto D = matrix_from_json(j["matrix"]);
  const auto basis = canonical_basis(3, IrrepLabel({1, 0}), SubalgebraChain::canonical(3));
  EXPECT_EQ(D, d_matrix(basis, V));
  std::filesystem::remove(path);
}

TEST(Cli, GtPatterns) {
  const Json j = invoke_json({"gt", "-n", "3", "-K", "1,1"});
  ASSERT_EQ(j["patterns"].size(), 8u);
  for (const auto& p : j["patterns"]) EXPECT_EQ(p["pattern"]["rows"][0], Json::parse("[2,1,0]"));
  EXPECT_EQ(invoke({"gt", "-n", "3", "-K", "1,1", "--chain", "1,3"}).code, cli::kExitEngine);
}

TEST(Cli, PrettyOutput) {
  const auto r = invoke({"dim", "-n", "4", "-K", "1,1,1", "--pretty"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "dimension 64\n");
  EXPECT_NE(invoke({"canonical", "-n", "3", "-K", "1,1", "--pretty"}).out.find("K2=(0)"), std::string::npos);
}

TEST(Cli, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "irrepforge_cli_out.json";
  const auto r = invoke({"dim", "-n", "2", "-K", "4", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_EQ(Json::parse(in), Json::parse(R"({"dimension": 5})"));
  std::filesystem::remove(path);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"dim", "-n", "3", "-K", "1,1", "--bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"dim", "-n", "3"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"dim", "-n", "3", "-K", "1,x"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"dmatrix", "-n", "2", "-K", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"dmatrix", "-n", "2", "-K", "1", "--symbolic", "--angles", "1:0,0,0"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"dmatrix", "-n", "2", "-K", "1", "--angles", "1:0,0"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"verify", "nonsense"}).code, cli::kExitUsage);
  const auto r = invoke({"dim", "-n", "3", "-K", "1,1", "--bogus"});
  EXPECT_FALSE(r.err.empty());
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, HelpExitsCleanly) { EXPECT_EQ(invoke({"--help"}).code, cli::kExitOk); }

TEST(Cli, EngineErrors) {
  EXPECT_EQ(invoke({"canonical", "-n", "3", "-K", "1,1", "--chain", "2,4"}).code, cli::kExitEngine);
  EXPECT_EQ(invoke({"dim", "-n", "3", "-K", "1,1,1"}).code, cli::kExitEngine);
  EXPECT_EQ(invoke({"dim", "-n", "3", "-K", "1,-1"}).code, cli::kExitEngine);
  EXPECT_EQ(invoke({"dmatrix", "-n", "3", "-K", "1,0", "--angles", "3:0,0,0"}).code, cli::kExitEngine);
  EXPECT_EQ(invoke({"dmatrix", "-n", "3", "-K", "1,0", "--matrix", "/nonexistent/file.json"}).code,
            cli::kExitEngine);
  EXPECT_EQ(invoke({"dfun", "-n", "3", "-K", "1,0", "--row", "7", "--symbolic"}).code, cli::kExitEngine);
}

TEST(Cli, BosonCap) {
  EXPECT_EQ(invoke({"dim", "-n", "3", "-K", "20,3"}).code, cli::kExitEngine);
  setenv("IRREPFORGE_MAX_BOSONS", "40", 1);
  EXPECT_EQ(invoke_json({"dim", "-n", "3", "-K", "20,3"})["dimension"], dimension(3, IrrepLabel({20, 3})));
  setenv("IRREPFORGE_MAX_BOSONS", "2", 1);
  EXPECT_EQ(invoke({"dim", "-n", "3", "-K", "1,1"}).code, cli::kExitEngine);
  unsetenv("IRREPFORGE_MAX_BOSONS");
}

TEST(Cli, VerifyScopesAndDeterminism) {
  const auto a = invoke({"verify", "dimension"});
  EXPECT_EQ(a.code, 0) << a.out;
  const Json j = Json::parse(a.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["checks"].size(), 21u);

  const auto first = invoke({"verify", "--seed", "7"});
  const auto second = invoke({"verify", "--seed", "7"});
  EXPECT_EQ(first.code, 0);
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(Json::parse(first.out)["seed"], 7);

  const auto unitarity = invoke({"verify", "unitarity", "--pretty"});
  EXPECT_NE(unitarity.out.find("[PASS] unitarity"), std::string::npos);
  EXPECT_EQ(unitarity.out.find("[FAIL]"), std::string::npos);
}

TEST(Cli, DeterministicOutputs) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"canonical", "-n", "3", "-K", "2,2"},
           {"dmatrix", "-n", "3", "-K", "1,1", "--symbolic"},
           {"dmatrix", "-n", "4", "-K", "1,0,1", "--angles", "1:1,2,3;2:0.5,0.25,1;3:2,1,0"}}) {
    EXPECT_EQ(invoke(args).out, invoke(args).out);
  }
}

}  // namespace
}  // namespace irrepforge
