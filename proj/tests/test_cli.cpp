// Copyright 2026 The mspt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = -1;
  std::string output;
};

Outcome cli(const std::string& args) {
  const fs::path log = fs::temp_directory_path() / "mspt_cli_test.log";
  const std::string cmd = std::string("\"") + MSPT_CLI_PATH + "\" " + args + " > \"" + log.string() + "\" 2>&1";
  const int status = std::system(cmd.c_str());
  Outcome o;
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(log);
  std::stringstream ss;
  ss << in.rdbuf();
  o.output = ss.str();
  return o;
}

fs::path write_scenario(const std::string& name, const std::string& text) {
  const fs::path p = fs::temp_directory_path() / ("mspt_cli_" + name + ".yaml");
  std::ofstream(p) << text;
  return p;
}

fs::path fresh_dir(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / ("mspt_cli_out_" + name);
  fs::remove_all(d);
  return d;
}

const std::string kBase = R"(model:
  type: jc
  regime: strong
  params: {omega_c: 1000, omega_a: 1000, g: 1, kappa: 0.1, pump: 0.01}
initial_state: excited-atom
order: 1
time_grid: {stop: 2, points: 5, unit: g}
)";

std::string with(std::string s, const std::string& from, const std::string& to) {
  s.replace(s.find(from), from.size(), to);
  return s;
}

TEST(Cli, ListsBundledScenarios) {
  const auto o = cli("list");
  EXPECT_EQ(o.code, 0);
  for (const char* n : {"jc_sc_fig2", "jc_sc_coherence_fig3", "jc_wc_fig4", "jc_sc_tracedist_fig5",
                        "jc_wc_tracedist_fig6", "commuting_exactness"})
    EXPECT_NE(o.output.find(n), std::string::npos) << n;
}

TEST(Cli, ValidatesBundledScenario) { EXPECT_EQ(cli("validate --scenario jc_wc_fig4").code, 0); }

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli("").code, 1);
  EXPECT_EQ(cli("run").code, 1);
  EXPECT_EQ(cli("frobnicate").code, 1);
}

TEST(Cli, RunWritesArtifacts) {
  const auto out = fresh_dir("ok");
  const auto o = cli("run --scenario " + write_scenario("ok", kBase).string() + " --out " + out.string());
  ASSERT_EQ(o.code, 0) << o.output;
  for (const char* f : {"level_0.csv", "level_s1.csv", "level_1.csv", "reference.csv", "populations.svg",
                        "coherence.svg", "trace_distance.svg", "manifest.yaml"})
    EXPECT_TRUE(fs::exists(out / f)) << f;
}

TEST(Cli, NegativeOrderIsParseErrorWithoutOutputs) {
  const auto out = fresh_dir("neg");
  const auto o = cli("run --scenario " + write_scenario("neg", with(kBase, "order: 1", "order: -1")).string() +
                     " --out " + out.string());
  EXPECT_EQ(o.code, 2) << o.output;
  EXPECT_NE(o.output.find("order"), std::string::npos);
  EXPECT_NE(o.output.find("line 6"), std::string::npos) << o.output;
  EXPECT_FALSE(fs::exists(out));
}

TEST(Cli, OrderOverrideOutOfRangeIsParseError) {
  EXPECT_EQ(cli("validate --scenario jc_sc_fig2 --order -1").code, 2);
  EXPECT_EQ(cli("validate --scenario jc_sc_fig2 --levels 0,s3").code, 2);
  EXPECT_EQ(cli("validate --scenario jc_sc_fig2 --tolerance nonsense=1").code, 2);
}

TEST(Cli, MissingFileIsParseError) { EXPECT_EQ(cli("validate --scenario /nonexistent/x.yaml").code, 2); }

TEST(Cli, DimensionMismatch) {
  const auto o = cli("validate --scenario " +
                     write_scenario("dim", with(kBase, "excited-atom", "[[1, 0], [0, 0]]")).string());
  EXPECT_EQ(o.code, 3) << o.output;
}

TEST(Cli, DefectiveGenerator) {
  const std::string text = R"(model:
  type: custom
  dim: 2
  L0:
    superoperator: [[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, -1, 0], [0, 0, 0, -2]]
initial_state: maximally-mixed
order: 1
time_grid: {stop: 1, points: 3}
outputs: [csv]
reference: {method: none}
)";
  const auto out = fresh_dir("defective");
  const auto o = cli("run --scenario " + write_scenario("defective", text).string() + " --out " + out.string());
  EXPECT_EQ(o.code, 4) << o.output;
  EXPECT_FALSE(fs::exists(out / "manifest.yaml"));
}

TEST(Cli, PolynomialSecularTerm) {
  const std::string text = R"(model:
  type: custom
  dim: 2
  L0:
    hamiltonian: [[0.5, 0], [0, -0.5]]
  L1:
    - channels: [{rate: 0.1, operator: [[1, 0], [0, -1]]}]
      signal: [{coeff: 1, rate: 0, power: 1}]
initial_state: maximally-mixed
order: 1
time_grid: {stop: 1, points: 3}
)";
  const auto o = cli("run --scenario " + write_scenario("secular", text).string() + " --out " +
                     fresh_dir("secular").string());
  EXPECT_EQ(o.code, 5) << o.output;
}

TEST(Cli, UnwritableOutputIsIoError) {
  const fs::path blocker = fs::temp_directory_path() / "mspt_cli_blocker";
  fs::remove_all(blocker);
  std::ofstream(blocker) << "file";
  const auto o = cli("run --scenario " + write_scenario("io", kBase).string() + " --out " + (blocker / "sub").string());
  EXPECT_EQ(o.code, 7) << o.output;
}

TEST(Cli, OrderOverrideDropsHigherLevels) {
  const auto out = fresh_dir("override");
  ASSERT_EQ(cli("run --scenario jc_sc_fig2 --order 0 --no-plots --out " + out.string()).code, 0);
  EXPECT_TRUE(fs::exists(out / "level_0.csv"));
  EXPECT_FALSE(fs::exists(out / "level_1.csv"));
  EXPECT_FALSE(fs::exists(out / "populations.svg"));
}

TEST(Cli, ManifestReRunIsByteIdentical) {
  const auto a = fresh_dir("rerun_a"), b = fresh_dir("rerun_b");
  ASSERT_EQ(cli("run --scenario " + write_scenario("rerun", kBase).string() + " --out " + a.string()).code, 0);
  ASSERT_EQ(cli("run --scenario " + (a / "manifest.yaml").string() + " --out " + b.string()).code, 0);
  for (const char* f : {"level_s1.csv", "reference.csv"}) {
    std::ifstream fa(a / f), fb(b / f);
    std::stringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    EXPECT_EQ(sa.str(), sb.str()) << f;
  }
}

}  // namespace
