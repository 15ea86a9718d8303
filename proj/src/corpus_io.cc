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

#include "surveykw/corpus_io.h"

#include <algorithm>
#include <charconv>

#include "surveykw/csv.h"
#include "surveykw/errors.h"

namespace surveykw {

std::string AsciiLower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string_view TrimWhitespace(std::string_view text) {
  constexpr std::string_view kSpace = " \t\r\n\f\v";
  size_t begin = text.find_first_not_of(kSpace);
  if (begin == std::string_view::npos) return {};
  size_t end = text.find_last_not_of(kSpace);
  return text.substr(begin, end - begin + 1);
}

ColumnSelector ColumnSelector::Parse(std::string_view text) {
  text = TrimWhitespace(text);
  bool digits = !text.empty() &&
                std::all_of(text.begin(), text.end(),
                            [](char c) { return c >= '0' && c <= '9'; });
  if (digits) {
    int index = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                     index);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw InputError("column index out of range: " + std::string(text));
    }
    return ColumnSelector(index);
  }
  return ColumnSelector(std::string(text));
}

std::string ColumnSelector::ToString() const {
  return is_index() ? std::to_string(index()) : name();
}

std::vector<SurveyResponse> ParseResponses(std::string_view bytes,
                                           char delimiter,
                                           const ColumnSelector& column) {
  std::vector<CsvRow> rows = ParseDelimited(StripBom(bytes), delimiter);

  size_t first_data_row = 0;
  size_t column_index = 0;
  if (column.is_index()) {
    column_index = static_cast<size_t>(column.index());
    size_t width = rows.empty() ? 0 : rows.front().size();
    if (!rows.empty() && column_index >= width) {
      throw InputError("text column index " + std::to_string(column_index) +
                       " out of range: row 1 has " + std::to_string(width) +
                       " column(s)");
    }
  } else {
    if (rows.empty()) {
      throw InputError("text column \"" + column.name() +
                       "\" not found: file has no header row");
    }
    const CsvRow& header = rows.front();
    auto it = std::find_if(header.begin(), header.end(),
                           [&](const std::string& cell) {
                             return TrimWhitespace(cell) == column.name();
                           });
    if (it == header.end()) {
      throw InputError("text column \"" + column.name() +
                       "\" not found in header");
    }
    column_index = static_cast<size_t>(it - header.begin());
    first_data_row = 1;
  }

  std::vector<SurveyResponse> responses;
  responses.reserve(rows.size() - first_data_row);
  for (size_t r = first_data_row; r < rows.size(); ++r) {
    SurveyResponse response;
    response.id = static_cast<int>(responses.size());
    if (column_index < rows[r].size()) {
      response.raw_text = std::move(rows[r][column_index]);
    }
    responses.push_back(std::move(response));
  }
  return responses;
}

std::vector<SurveyResponse> LoadResponses(const std::filesystem::path& path,
                                          const ColumnSelector& column) {
  if (!std::filesystem::exists(path)) {
    throw InputError("responses file not found: " + path.string());
  }
  std::string bytes = ReadFileBytes(path);
  try {
    return ParseResponses(bytes, DelimiterForPath(path), column);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void WriteResponses(const std::filesystem::path& path,
                    std::span<const SurveyResponse> responses,
                    std::string_view column_name) {
  char delimiter = DelimiterForPath(path);
  std::string out;
  AppendRow({std::string(column_name)}, delimiter, &out);
  for (const SurveyResponse& response : responses) {
    // A lone empty field would be written as a blank line, which reads back
    // as an empty cell anyway; quote it to keep the file self-explanatory.
    if (response.raw_text.empty()) {
      out.append("\"\"\n");
    } else {
      AppendRow({response.raw_text}, delimiter, &out);
    }
  }
  WriteFileBytes(path, out);
}

void ExclusionList::Add(std::string_view word) {
  std::string entry = AsciiLower(TrimWhitespace(word));
  if (!entry.empty()) entries_.insert(std::move(entry));
}

bool ExclusionList::Contains(std::string_view word) const {
  return entries_.find(AsciiLower(word)) != entries_.end();
}

ExclusionList ParseExclusions(std::string_view text) {
  ExclusionList list;
  text = StripBom(text);
  while (!text.empty()) {
    size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view()
                                         : text.substr(eol + 1);
    line = TrimWhitespace(line);
    if (line.empty() || line.front() == '#') continue;
    list.Add(line);
  }
  return list;
}

ExclusionList LoadExclusions(
    const std::optional<std::filesystem::path>& acronym_path,
    const std::optional<std::string>& target_word,
    const std::optional<std::string>& org_name) {
  ExclusionList list;
  if (acronym_path) list = ParseExclusions(ReadFileBytes(*acronym_path));
  if (target_word) list.Add(*target_word);
  if (org_name) list.Add(*org_name);
  return list;
}

void RunConfig::Validate() const {
  if (min_single_occur < 1) {
    throw InputError("--min-single-occur must be >= 1, got " +
                     std::to_string(min_single_occur));
  }
  if (no_limit_strength < 2) {
    throw InputError("--no-limit-strength must be >= 2, got " +
                     std::to_string(no_limit_strength));
  }
  if (tfidf_top_k < 1) {
    throw InputError("--top-k must be >= 1, got " +
                     std::to_string(tfidf_top_k));
  }
}

std::map<std::string, std::string> ParseKeyValueConfig(std::string_view text) {
  std::map<std::string, std::string> values;
  text = StripBom(text);
  int line_number = 0;
  while (!text.empty()) {
    size_t eol = text.find('\n');
    std::string_view line = TrimWhitespace(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view()
                                         : text.substr(eol + 1);
    ++line_number;
    if (line.empty() || line.front() == '#') continue;
    size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw InputError("config line " + std::to_string(line_number) +
                       ": expected key = value");
    }
    std::string key(TrimWhitespace(line.substr(0, eq)));
    std::string_view value = TrimWhitespace(line.substr(eq + 1));
    if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') &&
        value.back() == value.front()) {
      value = value.substr(1, value.size() - 2);
    }
    if (key.empty()) {
      throw InputError("config line " + std::to_string(line_number) +
                       ": empty key");
    }
    values[key] = std::string(value);
  }
  return values;
}

}  // namespace surveykw
