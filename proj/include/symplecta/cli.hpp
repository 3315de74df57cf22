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


#pragma once

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <json.hpp>

#include "symplecta/suites.hpp"

namespace symplecta {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A symbol entry of the config: either a constant or a sampled SymbolSpec.
struct SymbolEntry {
  bool constant = false;
  cplx value = 1.0;
  SymbolSpec spec;
};

struct RunConfig {
  int n = 1;
  int N = 32;
  Mat T = 0.5 * Mat::Identity(2, 2);
  std::vector<SymbolEntry> symbols;
  std::vector<std::string> suites{"verify-core"};
  std::uint64_t seed = 7;
  std::string route = "synthesis";
  std::string out = ".";
  bool json = false;
  int trials = 100;
  Tolerances tol;
  BoundSettings bounds;
  bool fine_N_set = false;
};

inline const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> names{"verify-core", "verify-kato", "norms", "quantize", "bounds"};
  return names;
}

namespace detail {

using Json = nlohmann::json;

inline void check_keys(const Json& j, const std::vector<std::string>& allowed, const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
      throw ConfigError("unknown key '" + it.key() + "' in " + where);
}

inline double number(const Json& j, const std::string& what) {
  if (!j.is_number()) throw ConfigError(what + " must be a number");
  return j.get<double>();
}

inline int integer(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw ConfigError(what + " must be an integer");
  return j.get<int>();
}

inline Vec vector(const Json& j, int size, const std::string& what) {
  if (!j.is_array() || static_cast<int>(j.size()) != size)
    throw ConfigError(what + " must be a list of " + std::to_string(size) + " numbers");
  Vec v(size);
  for (int i = 0; i < size; ++i) v[i] = number(j[i], what);
  return v;
}

inline Mat matrix(const Json& j, int size, const std::string& what) {
  if (!j.is_array() || static_cast<int>(j.size()) != size)
    throw ConfigError(what + " must have " + std::to_string(size) + " rows");
  Mat m(size, size);
  for (int r = 0; r < size; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != size)
      throw ConfigError(what + " row " + std::to_string(r) + " must have " + std::to_string(size) + " entries");
    for (int c = 0; c < size; ++c) m(r, c) = number(j[r][c], what);
  }
  return m;
}

inline SymbolEntry symbol(const Json& j, int dim) {
  if (!j.is_object()) throw ConfigError("symbol entries must be objects");
  check_keys(j, {"kind", "value", "center", "covariance", "modulation", "amplitude", "hermite", "chirp", "poly", "path"},
             "symbol");
  SymbolEntry e;
  const std::string kind = j.value("kind", "gaussian");
  if (kind == "constant") {
    e.constant = true;
    if (j.contains("value")) e.value = number(j["value"], "symbol value");
    return e;
  }
  static const std::map<std::string, SymbolKind> kinds{{"gaussian", SymbolKind::gaussian},
                                                       {"hermite_gaussian", SymbolKind::hermite_gaussian},
                                                       {"polynomial_gaussian", SymbolKind::polynomial_gaussian},
                                                       {"chirp_gaussian", SymbolKind::chirp_gaussian},
                                                       {"file", SymbolKind::file}};
  auto it = kinds.find(kind);
  if (it == kinds.end()) throw ConfigError("unknown symbol kind '" + kind + "'");
  SymbolSpec& s = e.spec;
  s.kind = it->second;
  if (j.contains("center")) s.center = vector(j["center"], dim, "symbol center");
  if (j.contains("covariance")) s.covariance = matrix(j["covariance"], dim, "symbol covariance");
  if (j.contains("modulation")) s.modulation = vector(j["modulation"], dim, "symbol modulation");
  if (j.contains("chirp")) s.chirp = matrix(j["chirp"], dim, "symbol chirp");
  if (j.contains("amplitude")) s.amplitude = number(j["amplitude"], "symbol amplitude");
  if (j.contains("hermite")) {
    if (!j["hermite"].is_array()) throw ConfigError("hermite must be a list of orders");
    for (const auto& h : j["hermite"]) s.hermite.push_back(integer(h, "hermite order"));
  }
  if (j.contains("poly")) {
    if (!j["poly"].is_array()) throw ConfigError("poly must be a list of terms");
    for (const auto& t : j["poly"]) {
      if (!t.is_object() || !t.contains("coeff") || !t.contains("powers"))
        throw ConfigError("poly terms need coeff and powers");
      PolyTerm term;
      term.coeff = number(t["coeff"], "poly coeff");
      for (const auto& p : t["powers"]) term.powers.push_back(integer(p, "poly power"));
      s.poly.push_back(term);
    }
  }
  if (s.kind == SymbolKind::file) {
    if (!j.contains("path") || !j["path"].is_string()) throw ConfigError("file symbols need a path");
    s.path = j["path"].get<std::string>();
  }
  return e;
}

inline void positive(double v, const std::string& what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError(what + " must be positive");
}

}  // namespace detail

inline std::vector<std::string> parse_suite_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  return out;
}

inline void check_suites(const std::vector<std::string>& suites) {
  if (suites.empty()) throw ConfigError("no suite selected");
  for (const auto& s : suites)
    if (std::find(known_suites().begin(), known_suites().end(), s) == known_suites().end())
      throw ConfigError("unknown suite '" + s + "'");
}

inline RunConfig parse_config(const std::string& text) {
  using detail::Json;
  Json j;
  try {
    j = Json::parse(text, nullptr, true, true);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be an object");
  detail::check_keys(j, {"n", "N", "T", "symbols", "suite", "seed", "route", "out", "json", "trials", "tolerances", "bounds"},
                     "config");
  RunConfig c;
  if (j.contains("n")) c.n = detail::integer(j["n"], "n");
  if (j.contains("N")) c.N = detail::integer(j["N"], "N");
  if (c.n < 1) throw ConfigError("n must be at least 1");
  if (c.N < 4 || c.N % 2 != 0) throw ConfigError("N must be even and at least 4");
  c.T = 0.5 * Mat::Identity(2 * c.n, 2 * c.n);
  if (j.contains("T")) c.T = detail::matrix(j["T"], 2 * c.n, "T");
  if (j.contains("symbols")) {
    if (!j["symbols"].is_array()) throw ConfigError("symbols must be a list");
    for (const auto& s : j["symbols"]) c.symbols.push_back(detail::symbol(s, 2 * c.n));
  }
  if (j.contains("suite")) {
    const Json& s = j["suite"];
    if (s.is_string()) {
      c.suites = parse_suite_list(s.get<std::string>());
    } else if (s.is_array()) {
      c.suites.clear();
      for (const auto& x : s) {
        if (!x.is_string()) throw ConfigError("suite entries must be strings");
        c.suites.push_back(x.get<std::string>());
      }
    } else {
      throw ConfigError("suite must be a string or a list of strings");
    }
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) throw ConfigError("seed must be a non-negative integer");
    c.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("route")) {
    if (!j["route"].is_string()) throw ConfigError("route must be a string");
    c.route = j["route"].get<std::string>();
  }
  if (c.route != "synthesis" && c.route != "kernel" && c.route != "both")
    throw ConfigError("route must be synthesis, kernel or both");
  if (j.contains("out")) {
    if (!j["out"].is_string()) throw ConfigError("out must be a string");
    c.out = j["out"].get<std::string>();
  }
  if (j.contains("json")) {
    if (!j["json"].is_boolean()) throw ConfigError("json must be true or false");
    c.json = j["json"].get<bool>();
  }
  if (j.contains("trials")) c.trials = detail::integer(j["trials"], "trials");
  if (c.trials < 1) throw ConfigError("trials must be positive");
  if (j.contains("tolerances")) {
    const Json& t = j["tolerances"];
    if (!t.is_object()) throw ConfigError("tolerances must be an object");
    std::map<std::string, double*> fields{{"cocycle", &c.tol.cocycle},
                                          {"fourier", &c.tol.fourier},
                                          {"self_reciprocal", &c.tol.self_reciprocal},
                                          {"theorem_n4", &c.tol.theorem_n4},
                                          {"route", &c.tol.route},
                                          {"orthogonality", &c.tol.orthogonality},
                                          {"recover", &c.tol.recover},
                                          {"kato", &c.tol.kato},
                                          {"scalar", &c.tol.scalar},
                                          {"positivity", &c.tol.positivity},
                                          {"majorization", &c.tol.majorization},
                                          {"chirp", &c.tol.chirp}};
    for (auto it = t.begin(); it != t.end(); ++it) {
      auto f = fields.find(it.key());
      if (f == fields.end()) throw ConfigError("unknown tolerance '" + it.key() + "'");
      *f->second = detail::number(it.value(), "tolerance " + it.key());
      detail::positive(*f->second, "tolerance " + it.key());
    }
  }
  c.bounds.coarse_N = c.N;
  c.bounds.fine_N = c.N + 16;
  if (j.contains("bounds")) {
    const Json& b = j["bounds"];
    if (!b.is_object()) throw ConfigError("bounds must be an object");
    detail::check_keys(b, {"coarse_N", "fine_N", "family_size", "freeze_factor", "drift", "cordes_drift", "cordes_t", "mu",
                           "sobolev_s"},
                       "bounds");
    if (b.contains("coarse_N")) c.bounds.coarse_N = detail::integer(b["coarse_N"], "bounds.coarse_N");
    if (b.contains("fine_N")) c.bounds.fine_N = detail::integer(b["fine_N"], "bounds.fine_N");
    if (b.contains("family_size")) c.bounds.family_size = detail::integer(b["family_size"], "bounds.family_size");
    if (b.contains("freeze_factor")) c.bounds.freeze_factor = detail::number(b["freeze_factor"], "bounds.freeze_factor");
    if (b.contains("drift")) c.bounds.drift = detail::number(b["drift"], "bounds.drift");
    if (b.contains("cordes_drift")) c.bounds.cordes_drift = detail::number(b["cordes_drift"], "bounds.cordes_drift");
    if (b.contains("cordes_t")) c.bounds.cordes_t = detail::number(b["cordes_t"], "bounds.cordes_t");
    if (b.contains("mu")) c.bounds.mu = detail::number(b["mu"], "bounds.mu");
    if (b.contains("sobolev_s")) c.bounds.sobolev_s = detail::number(b["sobolev_s"], "bounds.sobolev_s");
    for (int N : {c.bounds.coarse_N, c.bounds.fine_N})
      if (N < 4 || N % 2 != 0) throw ConfigError("bounds grid sizes must be even and at least 4");
    if (c.bounds.family_size < 1) throw ConfigError("bounds.family_size must be positive");
    for (double v : {c.bounds.freeze_factor, c.bounds.drift, c.bounds.cordes_drift}) detail::positive(v, "bounds setting");
    if (c.bounds.cordes_t <= 1.0) throw ConfigError("bounds.cordes_t must exceed 1");
    if (c.bounds.mu <= 1.0) throw ConfigError("bounds.mu must exceed 1");
  }
  c.bounds.seed = c.seed;
  c.bounds.n15_trials = c.trials;
  return c;
}

inline std::string matrix_text(const Mat& m) {
  std::string out = "[";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    out += r ? ",[" : "[";
    for (Eigen::Index c = 0; c < m.cols(); ++c) out += (c ? "," : "") + fmt_short(m(r, c));
    out += "]";
  }
  return out + "]";
}

inline GridFunction config_symbol(const RunConfig& c, std::size_t k) {
  const Grid g = make_grid(c.n, c.N);
  if (c.symbols.empty()) {
    SymbolSpec s;
    s.covariance = Mat::Identity(2 * c.n, 2 * c.n);
    return sample_symbol(s, g);
  }
  const SymbolEntry& e = c.symbols.at(k);
  return e.constant ? constant_function(g, e.value) : sample_symbol(e.spec, g);
}

// The kernel route needs T = diag(tau, theta) in n x n blocks.
inline std::optional<std::pair<Mat, Mat>> theta_tau_of(const Mat& T, int n) {
  if (max_abs(T.topRightCorner(n, n)) > 0.0 || max_abs(T.bottomLeftCorner(n, n)) > 0.0) return std::nullopt;
  return std::make_pair(Mat(T.bottomRightCorner(n, n)), Mat(T.topLeftCorner(n, n)));
}

struct QuantizeOutput {
  std::vector<std::pair<std::string, std::string>> files;
  NormReport report;
};

inline QuantizeOutput cmd_quantize(const RunConfig& c) {
  QuantizeOutput q;
  auto ctx = context_for(c.T, c.N);
  GridFunction a = config_symbol(c, 0);
  std::map<std::string, OperatorMatrix> ops;
  if (c.route == "synthesis" || c.route == "both") ops["synthesis"] = quantize_T(ctx, a);
  if (c.route == "kernel" || c.route == "both") {
    auto tt = theta_tau_of(c.T, c.n);
    if (!tt) throw ConfigError("route kernel needs a block-diagonal T = diag(tau, theta)");
    ops["kernel"] = quantize_theta_tau_kernel(tt->first, tt->second, a);
  }
  nlohmann::ordered_json prov;
  prov["route"] = c.route;
  prov["n"] = c.n;
  prov["N"] = c.N;
  prov["T"] = matrix_text(c.T);
  prov["seed"] = c.seed;
  prov["symbol_checksum"] = hex64(fnv1a(grid_function_text(a)));
  prov["symbol_provenance"] = a.provenance;
  nlohmann::ordered_json files = nlohmann::ordered_json::object();
  for (const auto& [route, op] : ops) {
    std::string name = "operator-" + route + ".txt";
    std::string body = operator_text(op);
    files[name] = hex64(fnv1a(body));
    q.files.emplace_back(name, body);
    double finite = op.entries.allFinite() ? 0.0 : 1.0;
    q.report.rows.push_back(residual_row("cmd-quantize", "non-finite-entries[" + route + "]", finite, 0.5));
  }
  prov["checksums"] = files;
  if (ops.size() == 2) {
    double dist = rel_frobenius(ops["kernel"].entries, ops["synthesis"].entries);
    prov["route_distance"] = fmt_short(dist);
    q.report.rows.push_back(residual_row("prop-synthesis", "kernel-vs-synthesis-file-distance", dist, c.tol.route));
  }
  q.files.emplace_back("operator-provenance.json", prov.dump(2) + "\n");
  return q;
}

struct RunResult {
  int code = 0;
  NormReport report;
  std::vector<std::pair<std::string, std::string>> files;
};

// Runs the selected suites and collects every output file in memory.
inline RunResult run_suites(const RunConfig& c) {
  RunResult r;
  check_suites(c.suites);
  NormReport& rep = r.report;
  std::string suites;
  for (const auto& s : c.suites) suites += (suites.empty() ? "" : ",") + s;
  rep.provenance = {{"tool", "symplecta 1.0.0"}, {"suite", suites},          {"n", std::to_string(c.n)},
                    {"N", std::to_string(c.N)},  {"T", matrix_text(c.T)},    {"seed", std::to_string(c.seed)},
                    {"route", c.route}};
  const bool needs_context =
      std::any_of(c.suites.begin(), c.suites.end(), [](const std::string& s) { return s != "norms"; });
  if (needs_context) {
    auto gate = nondegeneracy_gate(make_space(c.n), c.T);
    if (!gate.nondegenerate) {
      rep.rows.push_back(make_row("prop-gate", "nondegeneracy-witness=" + witness_text(*gate.kernel_witness),
                                  std::nan(""), std::nan(""), std::abs(gate.detS), 0.0, false));
      r.files.emplace_back("report.csv", report_csv(rep));
      if (c.json) r.files.emplace_back("report.json", report_json(rep));
      r.code = 1;
      return r;
    }
  }
  for (const auto& s : c.suites) {
    if (s == "verify-core") {
      rep.append(verify_core_suite(c.T, c.N, c.seed, c.tol).rows);
    } else if (s == "verify-kato") {
      rep.append(kato_suite(c.T, c.N, c.seed, c.trials, c.tol).rows);
    } else if (s == "norms") {
      rep.append(norms_suite(c.seed, c.tol).rows);
    } else if (s == "bounds") {
      BoundSettings b = c.bounds;
      rep.provenance.emplace_back("frozen_constant", fmt_short(b.freeze_factor) + "x calibration member 0 at N=" +
                                                         std::to_string(b.fine_N));
      rep.provenance.emplace_back("refinement", std::to_string(b.coarse_N) + "->" + std::to_string(b.fine_N));
      rep.provenance.emplace_back("mu", fmt_short(b.mu));
      rep.append(bound_suite({{"config", c.T}}, b).rows);
      rep.append(n15_suite(context_for(c.T, c.N), c.seed, c.trials, c.tol).rows);
    } else if (s == "quantize") {
      auto q = cmd_quantize(c);
      rep.append(q.report.rows);
      r.files.insert(r.files.end(), q.files.begin(), q.files.end());
    }
  }
  r.files.emplace_back("report.csv", report_csv(rep));
  if (c.json) r.files.emplace_back("report.json", report_json(rep));
  r.code = rep.all_pass() ? 0 : 1;
  return r;
}

inline int run_cli(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"symplecta: phase-space quantization verification suites"};
  std::string config_path, suite, out_dir;
  std::uint64_t seed = 0;
  bool json = false;
  app.add_option("--config", config_path, "JSON run configuration");
  auto* suite_opt = app.add_option("--suite", suite, "suite name(s), comma separated");
  auto* out_opt = app.add_option("--out", out_dir, "output directory");
  auto* seed_opt = app.add_option("--seed", seed, "random seed");
  app.add_flag("--json", json, "also write report.json");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  RunResult result;
  std::string dir;
  try {
    RunConfig c = config_path.empty() ? parse_config("{}") : parse_config(read_text_file(config_path));
    if (*suite_opt) c.suites = parse_suite_list(suite);
    if (*out_opt) c.out = out_dir;
    if (*seed_opt) {
      c.seed = seed;
      c.bounds.seed = seed;
    }
    c.json = c.json || json;
    check_suites(c.suites);
    dir = c.out;
    result = run_suites(c);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const ArgumentError& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  }
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    err << "error: cannot create " << dir << "\n";
    return 2;
  }
  for (const auto& [name, body] : result.files) {
    std::string path = (std::filesystem::path(dir) / name).string();
    try {
      write_text_file(path, body);
    } catch (const ArgumentError& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
  }
  for (const auto& row : result.report.rows)
    if (!row.pass) err << "FAIL " << row.label() << " value=" << fmt_short(row.value) << " bound=" << fmt_short(row.bound) << "\n";
  int passed = 0;
  for (const auto& row : result.report.rows) passed += row.pass ? 1 : 0;
  out << (result.code == 0 ? "PASS" : "FAIL") << " " << passed << "/" << result.report.rows.size() << " rows, report in "
      << dir << "\n";
  return result.code;
}

}  // namespace symplecta
