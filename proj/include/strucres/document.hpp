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

#ifndef STRUCRES_DOCUMENT_HPP
#define STRUCRES_DOCUMENT_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "strucres/structured_matrix.hpp"
#include "strucres/system.hpp"

namespace strucres {

inline constexpr std::string_view kSchemaVersion = "1.0";

/// A system description file: one or more modes sharing n, the defender and
/// attacker state sets, and optional feedback patterns.
///
/// On disk this is UTF-8 JSON with one-based [row, col] star pairs:
///
///   {
///     "schema_version": "1.0",
///     "n": 7,
///     "defender_inputs": 2,
///     "attacker_inputs": 0,
///     "modes": [{"A": [[1, 3], ...], "B_def": [[3, 1]], "B_att": []}],
///     "x_def": [1, 2, 3, 5],
///     "x_att": [4, 6, 7],
///     "K_att": [[1, 7]],
///     "K_def": []
///   }
///
/// The input counts are optional when reading and default to the largest
/// column index used by the corresponding blocks.
struct SystemDocument {
  std::string schema_version{kSchemaVersion};
  SwitchedPartitionedSystem system;
  std::optional<StructuredMatrix> k_att;  // attacker_inputs x n
  std::optional<StructuredMatrix> k_def;  // defender_inputs x n

  std::size_t state_count() const { return system.state_count(); }
  bool single_mode() const { return system.modes.size() == 1; }

  friend bool operator==(const SystemDocument& lhs, const SystemDocument& rhs);
};

struct DocumentIssue {
  /// Field path such as "modes[0].A[3]", or "" for whole-document problems.
  std::string path;
  std::string message;
  /// Line of a syntax error, when known.
  std::optional<std::size_t> line;
};

class DocumentError : public std::runtime_error {
 public:
  explicit DocumentError(std::vector<DocumentIssue> issues);
  const std::vector<DocumentIssue>& issues() const { return issues_; }

 private:
  std::vector<DocumentIssue> issues_;
};

/// Parses and validates a document; throws DocumentError listing every
/// problem found.
SystemDocument parse_system(std::string_view text);

/// Reads a file and parses it.
SystemDocument load_system(const std::filesystem::path& path);

/// Canonical JSON (stars sorted row-major, two-space indent).
std::string serialize_system(const SystemDocument& doc);

/// A feedback pattern given on its own: either a bare star list or an
/// object with a `key` member (e.g. "K_att").
StructuredMatrix parse_star_list(std::string_view text, std::size_t rows,
                                 std::size_t cols, std::string_view key);

}  // namespace strucres

#endif  // STRUCRES_DOCUMENT_HPP
