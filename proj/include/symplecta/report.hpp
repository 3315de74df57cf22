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

#include <json.hpp>

#include "symplecta/io.hpp"

namespace symplecta {

// One line of a norm/residual report.  The anchor names the statement checked
// (for example "thm-n15-b") and prefixes the quantity column.
struct NormRow {
  std::string anchor;
  std::string quantity;
  double p = std::nan("");
  double q = std::nan("");
  double value = 0.0;
  double bound = 0.0;
  double ratio = 0.0;
  bool pass = false;

  std::string label() const { return anchor + ":" + quantity; }
};

struct NormReport {
  std::vector<std::pair<std::string, std::string>> provenance;
  std::vector<NormRow> rows;

  bool all_pass() const {
    for (const auto& r : rows)
      if (!r.pass) return false;
    return true;
  }
  void append(const std::vector<NormRow>& more) { rows.insert(rows.end(), more.begin(), more.end()); }
};

inline NormRow make_row(std::string anchor, std::string quantity, double p, double q, double value, double bound,
                        bool pass) {
  NormRow r{std::move(anchor), std::move(quantity), p, q, value, bound, 0.0, pass};
  r.ratio = bound != 0.0 ? value / bound : (value == 0.0 ? 0.0 : kInf);
  return r;
}

inline std::string exponent_text(double p) { return std::isnan(p) ? "-" : fmt_short(p); }

inline std::string report_csv(const NormReport& rep) {
  std::string out = "quantity,p,q,value,bound,ratio,pass\n";
  for (const auto& r : rep.rows) {
    out += r.label() + "," + exponent_text(r.p) + "," + exponent_text(r.q) + "," + fmt_short(r.value) + "," +
           fmt_short(r.bound) + "," + fmt_short(r.ratio) + "," + (r.pass ? "true" : "false") + "\n";
  }
  return out;
}

inline nlohmann::ordered_json json_number(double v) {
  if (std::isfinite(v)) return v;
  return fmt_short(v);
}

inline std::string report_json(const NormReport& rep) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json prov = nlohmann::ordered_json::object();
  for (const auto& [k, v] : rep.provenance) prov[k] = v;
  j["provenance"] = prov;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rep.rows) {
    nlohmann::ordered_json row;
    row["quantity"] = r.label();
    row["p"] = exponent_text(r.p);
    row["q"] = exponent_text(r.q);
    row["value"] = json_number(r.value);
    row["bound"] = json_number(r.bound);
    row["ratio"] = json_number(r.ratio);
    row["pass"] = r.pass;
    j["rows"].push_back(row);
  }
  return j.dump(2) + "\n";
}

}  // namespace symplecta
