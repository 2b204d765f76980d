// Copyright 2026 The ncprobe Authors
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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "ncprobe/cli.hpp"

namespace ncprobe {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::vector<const char *> argv{"ncprobe"};
    for (const auto &a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("ncprobe_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string &name, const json &doc) {
        const auto path = dir_ / name;
        std::ofstream(path) << doc.dump();
        return path.string();
    }

    static json loop_config(double lambda = 0.05) {
        return {{"mechanical", {{"mass_kg", 1e-7}, {"omega_m_rad_s", 6.283185307179586e5}}},
                {"deformation", {{"theta", 1.0}, {"omega", 0.4}}},
                {"pulse", {{"lambda1", lambda}, {"lambda2", lambda}, {"cycles", 1}, {"n_photon", 4.0}, {"runs", 1}}}};
    }

    fs::path dir_;
};

TEST_F(CliTest, FeasibilityPresetA) {
    const auto r = invoke({"feasibility", "--scenario", "paper-a"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = json::parse(r.out);
    EXPECT_DOUBLE_EQ(doc["delta_phi"].get<double>(), 1e-4);
    EXPECT_EQ(doc["scenario"]["name"], "paper-a");
    EXPECT_TRUE(doc["note"].is_null());
}

TEST_F(CliTest, FeasibilityNeedsExactlyOneSource) {
    EXPECT_EQ(invoke({"feasibility"}).code, cli::kUsage);
    EXPECT_EQ(invoke({"feasibility", "--scenario", "paper-z"}).code, cli::kUsage);
}

TEST_F(CliTest, CommutatorsUndeformed) {
    const auto r = invoke({"commutators", "--theta", "0", "--omega", "0"});
    ASSERT_EQ(r.code, 0) << r.err;
    for (const auto &[name, value] : json::parse(r.out)["residuals"].items()) {
        EXPECT_LE(value.get<double>(), 1e-13) << name;
    }
}

TEST_F(CliTest, CommutatorsWithoutMarginFailTolerance) {
    const auto r = invoke({"commutators", "--theta", "0.3", "--omega", "0.2", "--dim", "8", "--margin", "0"});
    EXPECT_EQ(r.code, cli::kTolerance);
    EXPECT_FALSE(r.out.empty());
}

TEST_F(CliTest, VerifyLoopPasses) {
    const auto cfg = write("loop.json", loop_config());
    const auto r = invoke({"verify-loop", "--config", cfg, "--dim", "16", "--n-max", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    std::size_t count = 0;
    for (std::string line; std::getline(in, line); ++count) {
        const auto doc = json::parse(line);
        EXPECT_EQ(doc["n"].get<std::size_t>(), count);
        for (const char *key : {"extracted_phase", "predicted_phase", "identity_residual", "leakage"}) {
            EXPECT_TRUE(doc.contains(key)) << key;
        }
        EXPECT_LE(doc["phase_error"].get<double>(), 1e-8);
    }
    EXPECT_EQ(count, 3u);
}

TEST_F(CliTest, VerifyLoopManyCycles) {
    auto doc = loop_config();
    doc["pulse"]["cycles"] = 5;
    const auto r = invoke({"verify-loop", "--config", write("loop5.json", doc), "--dim", "16", "--n-max", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
}

TEST_F(CliTest, VerifyLoopZeroCycles) {
    auto doc = loop_config();
    doc["pulse"]["cycles"] = 0;
    const auto r = invoke({"verify-loop", "--config", write("loop0.json", doc)});
    EXPECT_EQ(r.code, cli::kConfig);
    EXPECT_NE(r.err.find("cycles >= 1"), std::string::npos);
}

TEST_F(CliTest, VerifyLoopTruncation) {
    const auto r = invoke({"verify-loop", "--config", write("big.json", loop_config(0.4)), "--dim", "8"});
    EXPECT_EQ(r.code, cli::kTruncation);
    EXPECT_NE(r.err.find("dim_per_mode"), std::string::npos);
}

TEST_F(CliTest, PhaseKeys) {
    auto doc = loop_config();
    const auto r = invoke({"phase", "--config", write("phase.json", doc)});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto out = json::parse(r.out);
    for (const char *key : {"gamma", "theta_complex", "theta_magnitude", "mean_field_qm", "mean_field_deformed"}) {
        EXPECT_TRUE(out.contains(key)) << key;
    }
}

TEST_F(CliTest, OracleAgrees) {
    const auto r = invoke({"oracle", "--config", write("oracle.json", loop_config()), "--photon-cutoff", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto out = json::parse(r.out);
    EXPECT_LE(out["relative_error"].get<double>(), 1e-9);
    EXPECT_GT(out["photon_sum"]["cutoff_used"].get<int>(), 3);
}

TEST_F(CliTest, OracleInfeasible) {
    auto doc = loop_config();
    doc["pulse"]["n_photon"] = 1e6;
    const auto r = invoke({"oracle", "--config", write("huge.json", doc)});
    EXPECT_EQ(r.code, cli::kConfig);
    EXPECT_NE(r.err.find("closed form"), std::string::npos);
}

TEST_F(CliTest, OracleNeedsIsotropicPulse) {
    auto doc = loop_config();
    doc["pulse"]["lambda2"] = 0.01;
    EXPECT_EQ(invoke({"oracle", "--config", write("aniso.json", doc)}).code, cli::kConfig);
}

TEST_F(CliTest, UsageErrors) {
    EXPECT_EQ(invoke({}).code, cli::kUsage);
    EXPECT_EQ(invoke({"phase", "--bogus"}).code, cli::kUsage);
    EXPECT_EQ(invoke({"commutators", "--theta", "x", "--omega", "0"}).code, cli::kUsage);
    EXPECT_EQ(invoke({"--help"}).code, cli::kOk);
}

TEST_F(CliTest, ConfigErrors) {
    auto doc = loop_config();
    doc["pulse"]["lamda1"] = 0.1;
    EXPECT_EQ(invoke({"phase", "--config", write("typo.json", doc)}).code, cli::kConfig);
    EXPECT_EQ(invoke({"phase", "--config", (dir_ / "missing.json").string()}).code, cli::kConfig);
    EXPECT_EQ(invoke({"commutators", "--theta", "-1", "--omega", "0"}).code, cli::kConfig);
}

TEST_F(CliTest, OutRedirects) {
    const auto path = (dir_ / "report.json").string();
    const auto r = invoke({"feasibility", "--scenario", "paper-b", "--out", path});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    const auto doc = json::parse(in);
    EXPECT_EQ(doc["scenario"]["name"], "paper-b");
}

TEST_F(CliTest, Idempotent) {
    const auto a = invoke({"feasibility", "--scenario", "paper-a"});
    const auto b = invoke({"feasibility", "--scenario", "paper-a"});
    EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, SweepCsv) {
    const auto grid = write("grid.json", {{"axes", {{{"path", "cavity.finesse"}, {"values", {0.1, 1.0, 1e5}}}}}});
    const auto path = (dir_ / "sweep.csv").string();
    const auto r = invoke({"sweep", "--scenario", "paper-a", "--grid", grid, "--out", path});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream in(path);
    std::size_t rows = 0;
    for (std::string line; std::getline(in, line);) ++rows;
    EXPECT_EQ(rows, 4u);
}

TEST_F(CliTest, SweepRejectsInvalidGrid) {
    const auto grid = write("grid.json", {{"axes", {{{"path", "cavity.finesse"}, {"values", {0.1, -1.0}}}}}});
    const auto r = invoke({"sweep", "--scenario", "paper-a", "--grid", grid});
    EXPECT_EQ(r.code, cli::kConfig);
    EXPECT_NE(r.err.find("cavity.finesse"), std::string::npos);
}

TEST_F(CliTest, SweepFromConfig) {
    json doc = loop_config();
    doc["cavity"] = {{"finesse", 0.1}, {"wavelength_m", 1.064e-6}};
    doc["pulse"].erase("lambda1");
    doc["pulse"].erase("lambda2");
    const auto grid = write("grid.json", {{"axes", {{{"path", "pulse.runs"}, {"values", {1, 100}}}}}});
    const auto r = invoke({"sweep", "--config", write("cfg.json", doc), "--grid", grid});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("scenario_name,", 0), 0u);
}

}  // namespace
}  // namespace ncprobe
