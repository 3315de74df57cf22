// Copyright 2026 The symplecta Authors
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

#include "symplecta/cli.hpp"

using namespace symplecta;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / "symplecta-cli-test" / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

int run(std::vector<std::string> args, std::string* errors = nullptr) {
  args.insert(args.begin(), "symplecta");
  std::vector<char*> argv;
  for (auto& s : args) argv.push_back(s.data());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  if (errors) *errors = err.str();
  return code;
}

std::string write_config(const fs::path& dir, const std::string& body) {
  std::string path = (dir / "config.json").string();
  write_text_file(path, body);
  return path;
}

}  // namespace

TEST(Config, Defaults) {
  RunConfig c = parse_config("{}");
  EXPECT_EQ(c.n, 1);
  EXPECT_EQ(c.N, 32);
  EXPECT_EQ(c.T, 0.5 * Mat::Identity(2, 2));
  EXPECT_EQ(c.suites, std::vector<std::string>{"verify-core"});
  EXPECT_EQ(c.bounds.coarse_N, 32);
  EXPECT_EQ(c.bounds.fine_N, 48);
}

TEST(Config, FullDocument) {
  RunConfig c = parse_config(R"({
    // comments are allowed
    "n": 1, "N": 16, "T": [[0, 0], [0, 1]], "seed": 99, "route": "both",
    "suite": ["quantize", "norms"], "json": true, "trials": 5,
    "tolerances": {"kato": 1e-5},
    "bounds": {"fine_N": 24, "mu": 1.5},
    "symbols": [{"kind": "constant", "value": 2}, {"kind": "hermite_gaussian", "hermite": [1, 0]}]
  })");
  EXPECT_EQ(c.N, 16);
  EXPECT_EQ(c.seed, 99u);
  EXPECT_EQ(c.suites.size(), 2u);
  EXPECT_TRUE(c.json);
  EXPECT_EQ(c.tol.kato, 1e-5);
  EXPECT_EQ(c.bounds.fine_N, 24);
  EXPECT_EQ(c.bounds.mu, 1.5);
  ASSERT_EQ(c.symbols.size(), 2u);
  EXPECT_TRUE(c.symbols[0].constant);
  EXPECT_EQ(c.symbols[1].spec.kind, SymbolKind::hermite_gaussian);
}

TEST(Config, Rejections) {
  for (const char* bad : {"[1]", "{", R"({"nope": 1})", R"({"N": 15})", R"({"T": [[1, 2], [3]]})",
                          R"({"T": [[1, 2, 3], [4, 5, 6]]})", R"({"route": "magic"})", R"({"tolerances": {"kato": -1}})",
                          R"({"symbols": [{"kind": "triangle"}]})", R"({"bounds": {"mu": 1.0}})", R"({"seed": -3})"})
    EXPECT_THROW(parse_config(bad), ConfigError) << bad;
}

TEST(Config, SuiteLists) {
  EXPECT_EQ(parse_suite_list("norms, bounds"), (std::vector<std::string>{"norms", "bounds"}));
  EXPECT_TRUE(parse_suite_list("").empty());
  EXPECT_THROW(check_suites({}), ConfigError);
  EXPECT_THROW(check_suites({"verify-everything"}), ConfigError);
}

TEST(Cli, ExitCodes) {
  auto dir = scratch("exit");
  EXPECT_EQ(run({"--out", (dir / "default").string()}), 0);
  EXPECT_TRUE(fs::exists(dir / "default" / "report.csv"));
  EXPECT_EQ(run({"--suite", "", "--out", dir.string()}), 2);
  EXPECT_EQ(run({"--unknown-flag"}), 2);
  EXPECT_EQ(run({"--config", (dir / "missing.json").string()}), 2);
  EXPECT_EQ(run({"--config", write_config(dir, R"({"T": [[1, 0, 0], [0, 1, 0]]})")}), 2);
  std::string err;
  EXPECT_EQ(run({"--config", write_config(dir, R"({"T": [[0, 1], [-1, 0]]})"), "--out", (dir / "gate").string()}, &err), 1);
  EXPECT_NE(err.find("nondegeneracy-witness"), std::string::npos);
  EXPECT_NE(read_text_file((dir / "gate" / "report.csv").string()).find("prop-gate"), std::string::npos);
  EXPECT_EQ(run({"--help"}), 0);
}

TEST(Cli, TightToleranceFailsWithExitOne) {
  auto dir = scratch("tight");
  auto cfg = write_config(dir, R"({"tolerances": {"orthogonality": 1e-30, "theorem_n4": 1e-30}})");
  EXPECT_EQ(run({"--config", cfg, "--out", dir.string()}), 1);
}

TEST(Cli, QuantizeConstantIsIdentityAndDeterministic) {
  auto dir = scratch("quantize");
  auto cfg = write_config(dir, R"({"suite": "quantize", "symbols": [{"kind": "constant"}]})");
  ASSERT_EQ(run({"--config", cfg, "--out", (dir / "a").string()}), 0);
  ASSERT_EQ(run({"--config", cfg, "--out", (dir / "b").string()}), 0);
  OperatorMatrix A = read_operator((dir / "a" / "operator-synthesis.txt").string());
  EXPECT_LE(max_abs(A.entries - CMat::Identity(32, 32)), 1e-9);
  for (const char* f : {"operator-synthesis.txt", "operator-provenance.json", "report.csv"})
    EXPECT_EQ(read_text_file((dir / "a" / f).string()), read_text_file((dir / "b" / f).string())) << f;
}

TEST(Cli, QuantizeRoutesAgree) {
  auto dir = scratch("routes");
  auto cfg = write_config(dir, R"({"N": 64, "T": [[0, 0], [0, 1]], "suite": "quantize", "route": "both",
                                    "symbols": [{"kind": "gaussian", "covariance": [[1.6, 0.2], [0.2, 1.7]]}]})");
  ASSERT_EQ(run({"--config", cfg, "--out", dir.string()}), 0);
  CMat K = read_operator((dir / "operator-kernel.txt").string()).entries;
  CMat S = read_operator((dir / "operator-synthesis.txt").string()).entries;
  EXPECT_LE(rel_frobenius(K, S), 1e-7);
  auto prov = nlohmann::json::parse(read_text_file((dir / "operator-provenance.json").string()));
  EXPECT_EQ(prov["route"], "both");
  EXPECT_EQ(prov["checksums"]["operator-kernel.txt"], hex64(fnv1a(read_text_file((dir / "operator-kernel.txt").string()))));
}

TEST(Cli, KernelRouteNeedsBlockDiagonalT) {
  auto dir = scratch("kernel");
  auto cfg = write_config(dir, R"({"T": [[0.2, 0.5], [-0.3, 0.8]], "suite": "quantize", "route": "kernel"})");
  EXPECT_EQ(run({"--config", cfg, "--out", dir.string()}), 2);
  EXPECT_FALSE(theta_tau_of(suite_T()[4], 1).has_value());
  auto tt = theta_tau_of(suite_T()[3], 1);
  ASSERT_TRUE(tt.has_value());
  EXPECT_EQ(tt->first(0, 0), 0.7);
  EXPECT_EQ(tt->second(0, 0), 0.3);
}

TEST(Cli, JsonMirrorMatchesCsvRows) {
  auto dir = scratch("json");
  ASSERT_EQ(run({"--suite", "verify-kato", "--json", "--seed", "3", "--out", dir.string()}), 0);
  auto j = nlohmann::json::parse(read_text_file((dir / "report.json").string()));
  auto csv = split_lines(read_text_file((dir / "report.csv").string()));
  ASSERT_EQ(j["rows"].size() + 1, csv.size());
  EXPECT_EQ(j["provenance"]["seed"], "3");
  EXPECT_EQ(csv[0], "quantity,p,q,value,bound,ratio,pass");
  for (std::size_t i = 0; i < j["rows"].size(); ++i)
    EXPECT_EQ(csv[i + 1].substr(0, csv[i + 1].find(',')), j["rows"][i]["quantity"].get<std::string>());
}
