// Copyright 2026 The Strucres Authors.
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

#include "strucres/document.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace strucres {

using nlohmann::json;

namespace {

using RawStar = std::pair<std::int64_t, std::int64_t>;

std::string describe(const std::vector<DocumentIssue>& issues) {
  std::string out;
  for (const auto& issue : issues) {
    if (!out.empty()) out += "\n";
    if (issue.line) out += "line " + std::to_string(*issue.line) + ": ";
    if (!issue.path.empty()) out += issue.path + ": ";
    out += issue.message;
  }
  return out;
}

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(
                 std::count(text.begin(), text.begin() + offset, '\n'));
}

class Parser {
 public:
  explicit Parser(std::vector<DocumentIssue>& issues) : issues_(issues) {}

  void issue(std::string path, std::string message) {
    issues_.push_back({std::move(path), std::move(message), std::nullopt});
  }

  std::optional<std::int64_t> integer(const json& j, const std::string& path) {
    if (!j.is_number_integer()) {
      issue(path, "expected an integer");
      return std::nullopt;
    }
    return j.get<std::int64_t>();
  }

  // A list of [row, col] pairs; entries with the wrong shape are reported
  // and skipped.
  std::vector<RawStar> pairs(const json& j, const std::string& path) {
    std::vector<RawStar> out;
    if (!j.is_array()) {
      issue(path, "expected a list of [row, col] pairs");
      return out;
    }
    for (std::size_t i = 0; i < j.size(); ++i) {
      const std::string at = path + "[" + std::to_string(i) + "]";
      const json& e = j[i];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer()) {
        issue(at, "expected a [row, col] pair of integers");
        continue;
      }
      out.emplace_back(e[0].get<std::int64_t>(), e[1].get<std::int64_t>());
    }
    return out;
  }

  // Range- and duplicate-checks raw stars and builds the pattern.
  StructuredMatrix matrix(const std::vector<RawStar>& raw, std::size_t rows,
                          std::size_t cols, const std::string& path) {
    StructuredMatrix m(rows, cols);
    std::set<RawStar> seen;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      const std::string at = path + "[" + std::to_string(i) + "]";
      auto [r, c] = raw[i];
      if (r < 1 || static_cast<std::size_t>(r) > rows || c < 1 ||
          static_cast<std::size_t>(c) > cols) {
        issue(at, "star [" + std::to_string(r) + ", " + std::to_string(c) +
                      "] outside " + std::to_string(rows) + "x" +
                      std::to_string(cols));
        continue;
      }
      if (!seen.insert(raw[i]).second) {
        issue(at, "duplicate star [" + std::to_string(r) + ", " +
                      std::to_string(c) + "]");
        continue;
      }
      m.add_star(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1));
    }
    return m;
  }

  StateSet states(const json& j, std::size_t n, const std::string& path) {
    StateSet out;
    if (!j.is_array()) {
      issue(path, "expected a list of state indices");
      return out;
    }
    for (std::size_t i = 0; i < j.size(); ++i) {
      const std::string at = path + "[" + std::to_string(i) + "]";
      auto v = integer(j[i], at);
      if (!v) continue;
      if (*v < 1 || static_cast<std::size_t>(*v) > n) {
        issue(at, "state " + std::to_string(*v) + " outside 1.." +
                      std::to_string(n));
        continue;
      }
      if (!out.insert(static_cast<std::size_t>(*v - 1)).second)
        issue(at, "duplicate state " + std::to_string(*v));
    }
    return out;
  }

 private:
  std::vector<DocumentIssue>& issues_;
};

std::size_t max_col(const std::vector<RawStar>& raw) {
  std::int64_t best = 0;
  for (auto [r, c] : raw) best = std::max(best, c);
  return static_cast<std::size_t>(std::max<std::int64_t>(best, 0));
}

json star_list(const StructuredMatrix& m) {
  json out = json::array();
  for (const Star& s : m.stars()) out.push_back({s.row + 1, s.col + 1});
  return out;
}

json state_list(const StateSet& s) {
  json out = json::array();
  for (std::size_t v : s) out.push_back(v + 1);
  return out;
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "schema_version", "n",     "defender_inputs", "attacker_inputs",
      "modes",          "x_def", "x_att",           "K_att",
      "K_def"};
  return keys;
}

}  // namespace

bool operator==(const SystemDocument& lhs, const SystemDocument& rhs) {
  if (lhs.schema_version != rhs.schema_version) return false;
  if (lhs.system.x_def != rhs.system.x_def ||
      lhs.system.x_att != rhs.system.x_att)
    return false;
  if (lhs.system.modes.size() != rhs.system.modes.size()) return false;
  for (std::size_t k = 0; k < lhs.system.modes.size(); ++k) {
    const Mode& a = lhs.system.modes[k];
    const Mode& b = rhs.system.modes[k];
    if (!(a.a == b.a && a.b_def == b.b_def && a.b_att == b.b_att)) return false;
  }
  return lhs.k_att == rhs.k_att && lhs.k_def == rhs.k_def;
}

DocumentError::DocumentError(std::vector<DocumentIssue> issues)
    : std::runtime_error(describe(issues)), issues_(std::move(issues)) {}

SystemDocument parse_system(std::string_view text) {
  std::vector<DocumentIssue> issues;
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    issues.push_back({"", e.what(), line_of_offset(text, e.byte)});
    throw DocumentError(std::move(issues));
  }
  if (!root.is_object()) {
    issues.push_back({"", "top level must be a JSON object", std::nullopt});
    throw DocumentError(std::move(issues));
  }

  Parser p(issues);
  for (const auto& [key, value] : root.items())
    if (!known_keys().contains(key)) p.issue(key, "unknown field");

  SystemDocument doc;
  if (!root.contains("schema_version") || !root["schema_version"].is_string()) {
    p.issue("schema_version", "missing or not a string");
  } else {
    doc.schema_version = root["schema_version"].get<std::string>();
    if (doc.schema_version.rfind("1.", 0) != 0)
      p.issue("schema_version",
              "unsupported version '" + doc.schema_version + "'");
  }

  std::size_t n = 0;
  if (!root.contains("n")) {
    p.issue("n", "missing");
  } else if (auto v = p.integer(root["n"], "n")) {
    if (*v < 1)
      p.issue("n", "must be at least 1");
    else
      n = static_cast<std::size_t>(*v);
  }

  if (!root.contains("modes") || !root["modes"].is_array() ||
      root["modes"].empty()) {
    p.issue("modes", "expected a non-empty list of modes");
  }
  if (!issues.empty()) throw DocumentError(std::move(issues));

  struct RawMode {
    std::vector<RawStar> a, b_def, b_att;
  };
  std::vector<RawMode> raw_modes;
  std::size_t d = 0;
  std::size_t att = 0;
  const json& modes = root["modes"];
  for (std::size_t k = 0; k < modes.size(); ++k) {
    const std::string at = "modes[" + std::to_string(k) + "]";
    RawMode raw;
    if (!modes[k].is_object()) {
      p.issue(at, "expected an object with A, B_def and B_att");
      raw_modes.push_back(raw);
      continue;
    }
    for (const auto& [key, value] : modes[k].items())
      if (key != "A" && key != "B_def" && key != "B_att")
        p.issue(at + "." + key, "unknown field");
    if (!modes[k].contains("A"))
      p.issue(at + ".A", "missing");
    else
      raw.a = p.pairs(modes[k]["A"], at + ".A");
    if (modes[k].contains("B_def"))
      raw.b_def = p.pairs(modes[k]["B_def"], at + ".B_def");
    if (modes[k].contains("B_att"))
      raw.b_att = p.pairs(modes[k]["B_att"], at + ".B_att");
    d = std::max(d, max_col(raw.b_def));
    att = std::max(att, max_col(raw.b_att));
    raw_modes.push_back(std::move(raw));
  }

  auto declared_count = [&](const char* key, std::size_t inferred) {
    if (!root.contains(key)) return inferred;
    auto v = p.integer(root[key], key);
    if (!v) return inferred;
    if (*v < 0) {
      p.issue(key, "must be non-negative");
      return inferred;
    }
    return static_cast<std::size_t>(*v);
  };
  d = declared_count("defender_inputs", d);
  att = declared_count("attacker_inputs", att);

  SwitchedPartitionedSystem& sys = doc.system;
  sys.x_def = root.contains("x_def") ? p.states(root["x_def"], n, "x_def")
                                     : StateSet{};
  sys.x_att = root.contains("x_att") ? p.states(root["x_att"], n, "x_att")
                                     : StateSet{};
  for (std::size_t s : sys.x_att)
    if (sys.x_def.contains(s))
      p.issue("x_att", "state " + std::to_string(s + 1) +
                           " is also in x_def (sets must be disjoint)");

  for (std::size_t k = 0; k < raw_modes.size(); ++k) {
    const std::string at = "modes[" + std::to_string(k) + "]";
    const RawMode& raw = raw_modes[k];
    Mode mode{p.matrix(raw.a, n, n, at + ".A"),
              p.matrix(raw.b_def, n, d, at + ".B_def"),
              p.matrix(raw.b_att, n, att, at + ".B_att")};
    for (std::size_t i = 0; i < raw.b_def.size(); ++i) {
      auto [r, c] = raw.b_def[i];
      if (r >= 1 && static_cast<std::size_t>(r) <= n &&
          !sys.x_def.contains(static_cast<std::size_t>(r - 1)))
        p.issue(at + ".B_def[" + std::to_string(i) + "]",
                "defender input drives state " + std::to_string(r) +
                    " which is not in x_def");
    }
    for (std::size_t i = 0; i < raw.b_att.size(); ++i) {
      auto [r, c] = raw.b_att[i];
      if (r >= 1 && static_cast<std::size_t>(r) <= n &&
          !sys.x_att.contains(static_cast<std::size_t>(r - 1)))
        p.issue(at + ".B_att[" + std::to_string(i) + "]",
                "attacker input drives state " + std::to_string(r) +
                    " which is not in x_att");
    }
    sys.modes.push_back(std::move(mode));
  }

  if (root.contains("K_att"))
    doc.k_att = p.matrix(p.pairs(root["K_att"], "K_att"), att, n, "K_att");
  if (root.contains("K_def"))
    doc.k_def = p.matrix(p.pairs(root["K_def"], "K_def"), d, n, "K_def");

  if (!issues.empty()) throw DocumentError(std::move(issues));
  return doc;
}

SystemDocument load_system(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw DocumentError({{"", "cannot open " + path.string(), std::nullopt}});
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_system(buffer.str());
}

std::string serialize_system(const SystemDocument& doc) {
  json root;
  root["schema_version"] = doc.schema_version;
  root["n"] = doc.state_count();
  root["defender_inputs"] = doc.system.defender_inputs();
  root["attacker_inputs"] = doc.system.attacker_inputs();
  json modes = json::array();
  for (const Mode& m : doc.system.modes) {
    modes.push_back({{"A", star_list(m.a)},
                     {"B_def", star_list(m.b_def)},
                     {"B_att", star_list(m.b_att)}});
  }
  root["modes"] = std::move(modes);
  root["x_def"] = state_list(doc.system.x_def);
  root["x_att"] = state_list(doc.system.x_att);
  if (doc.k_att) root["K_att"] = star_list(*doc.k_att);
  if (doc.k_def) root["K_def"] = star_list(*doc.k_def);
  return root.dump(2) + "\n";
}

StructuredMatrix parse_star_list(std::string_view text, std::size_t rows,
                                 std::size_t cols, std::string_view key) {
  std::vector<DocumentIssue> issues;
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    issues.push_back({"", e.what(), line_of_offset(text, e.byte)});
    throw DocumentError(std::move(issues));
  }
  Parser p(issues);
  const std::string path(key);
  const json* list = &root;
  if (root.is_object()) {
    if (!root.contains(path)) {
      p.issue(path, "missing");
      throw DocumentError(std::move(issues));
    }
    list = &root[path];
  }
  StructuredMatrix m = p.matrix(p.pairs(*list, path), rows, cols, path);
  if (!issues.empty()) throw DocumentError(std::move(issues));
  return m;
}

}  // namespace strucres
