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

#ifndef STRUCRES_REPORT_HPP
#define STRUCRES_REPORT_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "strucres/bipartite.hpp"
#include "strucres/matching.hpp"
#include "strucres/numeric_oracle.hpp"
#include "strucres/resilience.hpp"

namespace strucres {

/// Names the left vertex of a bipartite view for output.
using LeftLabeler = std::function<std::string(const LeftOrigin&)>;

std::string state_label(std::size_t state);

/// Views built from a digraph: block 0 is x_j, block 1 is u_j.
LeftLabeler digraph_left_labels();
/// Concatenated switched views: A blocks are "x_j@mode k", then defender
/// columns "u_def j@mode k", then attacker columns.
LeftLabeler switched_left_labels(std::size_t mode_count);

nlohmann::json matching_json(const Matching& m, const BipartiteView& view,
                             const LeftLabeler& label);
nlohmann::json verdict_json(const Verdict& v, const BipartiteView& view,
                            const LeftLabeler& label);
nlohmann::json controllability_json(const ControllabilityReport& r,
                                    const BipartiteView& view,
                                    const LeftLabeler& label);
nlohmann::json min_design_json(const MinDesignReport& r,
                               const BipartiteView& view);
nlohmann::json diagnostics_json(const std::vector<DosDiagnostic>& diags);
nlohmann::json sfi_json(const SfiReport& r);
nlohmann::json oracle_json(const OracleReport& r);

std::string render_verdict(const std::string& title, const Verdict& v,
                           const BipartiteView& view, const LeftLabeler& label);
std::string render_controllability(const ControllabilityReport& r);
std::string render_min_design(const MinDesignReport& r);
std::string render_diagnostics(const std::vector<DosDiagnostic>& diags);
std::string render_sfi(const SfiReport& r);
std::string render_oracle(const OracleReport& r);

}  // namespace strucres

#endif  // STRUCRES_REPORT_HPP
