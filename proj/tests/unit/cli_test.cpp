// Copyright 2026 The sparse-vqe Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cstdlib>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

namespace svqe::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(SVQE_TEST_DATA_DIR) + "/" + name; }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override { unsetenv("SPARSE_VQE_SEED"); }
  void TearDown() override { unsetenv("SPARSE_VQE_SEED"); }
};

TEST_F(CliTest, DecomposePauliX) {
  const auto r = invoke({"decompose", data("pauli_x.json"), "--gamma", "1e-3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["L"], 11);
  EXPECT_EQ(j["term_count"], 44);
  EXPECT_EQ(j["measured_error"], 0.0);
}

TEST_F(CliTest, BadInputsExitTwo) {
  const auto mirrored = invoke({"decompose", data("mirrored.json")});
  EXPECT_EQ(mirrored.code, kExitBadInput);
  EXPECT_NE(mirrored.err.find("mirrors"), std::string::npos) << mirrored.err;
  EXPECT_EQ(invoke({"decompose", data("unclosed.json")}).code, kExitBadInput);
  EXPECT_EQ(invoke({"decompose", data("missing.json")}).code, kExitBadInput);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitBadInput);
  EXPECT_EQ(invoke({"decompose", data("pauli_x.json"), "--gamma", "-1"}).code, kExitBadInput);
}

TEST_F(CliTest, VerifyPasses) {
  EXPECT_EQ(invoke({"verify", data("sparse3.json")}).code, kExitOk);
  EXPECT_EQ(invoke({"verify", data("hopping.json")}).code, kExitOk);
}

TEST_F(CliTest, SampledEstimateNeedsSeed) {
  const auto r = invoke({"estimate", data("pauli_x.json"), "--shots", "100"});
  EXPECT_EQ(r.code, kExitBadInput);
  EXPECT_NE(r.err.find("SPARSE_VQE_SEED"), std::string::npos);
}

TEST_F(CliTest, EstimateIsByteIdenticalPerSeed) {
  const std::vector<std::string> args{"estimate", data("sparse3.json"), "--shots", "500",
                                      "--seed", "17", "--theta", "0.1,0.2,0.3,0.4,0.5,0.6"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  auto other = args;
  other[5] = "18";
  EXPECT_NE(invoke(other).out, a.out);
}

TEST_F(CliTest, EnvironmentSeedMatchesFlag) {
  const auto flagged = invoke({"estimate", data("sparse3.json"), "--shots", "300", "--seed", "5"});
  setenv("SPARSE_VQE_SEED", "5", 1);
  const auto env = invoke({"estimate", data("sparse3.json"), "--shots", "300"});
  ASSERT_EQ(env.code, kExitOk) << env.err;
  EXPECT_EQ(flagged.out, env.out);
  setenv("SPARSE_VQE_SEED", "five", 1);
  EXPECT_EQ(invoke({"estimate", data("sparse3.json"), "--shots", "300"}).code, kExitBadInput);
}

TEST_F(CliTest, ExactEstimateAgreesAcrossModes) {
  const auto direct = invoke({"estimate", data("sparse3.json"), "--exact", "--mode", "direct"});
  const auto oracle = invoke({"estimate", data("sparse3.json"), "--exact", "--mode", "oracle"});
  ASSERT_EQ(direct.code, kExitOk) << direct.err;
  ASSERT_EQ(oracle.code, kExitOk) << oracle.err;
  const auto a = nlohmann::json::parse(direct.out)["estimate"][0].get<double>();
  const auto b = nlohmann::json::parse(oracle.out)["estimate"][0].get<double>();
  EXPECT_NEAR(a, b, 1e-12);
}

TEST_F(CliTest, VqeStreamsEvaluationsThenSummary) {
  const auto r = invoke({"vqe", data("hopping.json"), "--gamma", "1.5", "--exact", "--seed", "1",
                         "--ansatz", data("ansatz_ry2.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string line, last;
  int count = 0;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    last = line;
    ++count;
  }
  const auto summary = nlohmann::json::parse(last);
  EXPECT_TRUE(summary["summary"].get<bool>());
  EXPECT_EQ(summary["evaluations"].get<int>(), count - 1);
  EXPECT_NEAR(summary["best_energy"].get<double>(), -1.0, 1e-6);
}

}  // namespace
}  // namespace svqe::cli
