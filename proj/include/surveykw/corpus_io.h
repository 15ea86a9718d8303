// Copyright 2026 The surveykw Authors.
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

// Survey corpus loading: responses, exclusion words and run configuration.

#ifndef SURVEYKW_CORPUS_IO_H_
#define SURVEYKW_CORPUS_IO_H_

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace surveykw {

// One survey answer. `id` is the 0-based data-row order in the input file.
struct SurveyResponse {
  int id = 0;
  std::string raw_text;
  std::string clean_text;
};

// Selects the response text column, by header name or by 0-based index.
// Index selectors treat every row as data; name selectors consume the first
// row as the header.
class ColumnSelector {
 public:
  explicit ColumnSelector(std::string name) : value_(std::move(name)) {}
  explicit ColumnSelector(int index) : value_(index) {}

  // All-digit strings become index selectors, anything else a name.
  static ColumnSelector Parse(std::string_view text);

  bool is_index() const { return std::holds_alternative<int>(value_); }
  int index() const { return std::get<int>(value_); }
  const std::string& name() const { return std::get<std::string>(value_); }
  std::string ToString() const;

 private:
  std::variant<std::string, int> value_;
};

// Parses response rows from delimiter-separated bytes. A UTF-8 BOM is
// stripped; cells are otherwise kept byte-for-byte. Rows shorter than the
// selected column yield an empty response.
std::vector<SurveyResponse> ParseResponses(std::string_view bytes,
                                           char delimiter,
                                           const ColumnSelector& column);

// Loads a .csv or .tsv responses file.
std::vector<SurveyResponse> LoadResponses(const std::filesystem::path& path,
                                          const ColumnSelector& column);

// Writes a single-column responses file with header `column_name`. Reading it
// back with that name reproduces (id, raw_text).
void WriteResponses(const std::filesystem::path& path,
                    std::span<const SurveyResponse> responses,
                    std::string_view column_name);

// Lowercased words that may never appear in a keyword: domain acronyms, the
// survey's target word and the organization name.
class ExclusionList {
 public:
  ExclusionList() = default;

  // Lowercases and trims `word`; blank input is ignored.
  void Add(std::string_view word);

  bool Contains(std::string_view word) const;
  bool empty() const { return entries_.empty(); }
  size_t size() const { return entries_.size(); }
  const std::set<std::string>& entries() const { return entries_; }

 private:
  std::set<std::string> entries_;
};

// Parses acronym-file text: one entry per line, blank lines and lines
// starting with '#' ignored.
ExclusionList ParseExclusions(std::string_view text);

// Builds the exclusion list from an optional acronym file plus the target
// word and organization name. With no inputs the list is empty.
ExclusionList LoadExclusions(
    const std::optional<std::filesystem::path>& acronym_path,
    const std::optional<std::string>& target_word,
    const std::optional<std::string>& org_name);

struct RunConfig {
  ColumnSelector text_column{0};
  std::optional<std::string> target_word;
  std::optional<std::string> org_name;
  std::optional<std::filesystem::path> acronym_path;
  int min_single_occur = 3;
  int no_limit_strength = 2;
  bool emit_full_runs = false;
  int tfidf_top_k = 3;
  std::filesystem::path output_dir = ".";

  // Throws InputError when a numeric field is out of range.
  void Validate() const;
};

// Parses flat `key = value` lines. '#' starts a comment line; surrounding
// whitespace and matching quotes around the value are removed. Throws
// InputError naming the line for lines without '='.
std::map<std::string, std::string> ParseKeyValueConfig(std::string_view text);

// Lowercase ASCII copy, locale independent.
std::string AsciiLower(std::string_view text);

// Copy without leading/trailing ASCII whitespace.
std::string_view TrimWhitespace(std::string_view text);

}  // namespace surveykw

#endif  // SURVEYKW_CORPUS_IO_H_
