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

#include "surveykw/output_files.h"

#include <algorithm>
#include <map>
#include <set>

#include "surveykw/csv.h"
#include "surveykw/errors.h"

namespace surveykw {
namespace {

std::string JoinDistinct(const std::vector<std::string>& words) {
  std::set<std::string> distinct(words.begin(), words.end());
  std::string joined;
  for (const std::string& word : distinct) {
    if (!joined.empty()) joined.push_back(';');
    joined.append(word);
  }
  return joined;
}

}  // namespace

std::string FormatPerResponseCsv(std::span<const SurveyResponse> responses,
                                 std::span<const ResponseKeywords> keywords) {
  std::map<int, const ResponseKeywords*> by_id;
  for (const ResponseKeywords& response : keywords) {
    by_id[response.response_id] = &response;
  }
  std::vector<const SurveyResponse*> ordered;
  for (const SurveyResponse& response : responses) ordered.push_back(&response);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const SurveyResponse* a, const SurveyResponse* b) {
                     return a->id < b->id;
                   });

  std::string out;
  AppendRow({"response_id", "response_text", "keyword", "adjectives"}, ',',
            &out);
  for (const SurveyResponse* response : ordered) {
    std::string id = std::to_string(response->id);
    auto it = by_id.find(response->id);
    if (it == by_id.end() || it->second->entries.empty()) {
      AppendRow({id, response->clean_text, "", ""}, ',', &out);
      continue;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    for (const KeywordEntry& entry : it->second->entries) {
      rows.emplace_back(entry.keyword.Text(), JoinDistinct(entry.adjectives));
    }
    std::sort(rows.begin(), rows.end());
    for (const auto& [keyword, adjectives] : rows) {
      AppendRow({id, response->clean_text, keyword, adjectives}, ',', &out);
    }
  }
  return out;
}

std::string FormatSummaryCsv(const CorpusKeywordSummary& summary) {
  std::string out;
  AppendRow({"keyword", "response_frequency", "adjective_frequencies"}, ',',
            &out);
  for (const SummaryRow& row : summary.rows) {
    std::string adjectives;
    for (const auto& [adjective, count] : row.adjective_frequencies) {
      if (!adjectives.empty()) adjectives.push_back(';');
      adjectives.append(adjective + ":" + std::to_string(count));
    }
    AppendRow({row.keyword, std::to_string(row.response_frequency), adjectives},
              ',', &out);
  }
  return out;
}

KeywordSets ParsePerResponseCsv(std::string_view text) {
  std::vector<CsvRow> rows = ParseDelimited(StripBom(text), ',');
  if (rows.empty()) throw InputError("keyword file is empty");
  const CsvRow& header = rows.front();
  auto column = [&](std::string_view name) {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) {
      throw InputError("keyword file has no \"" + std::string(name) +
                       "\" column");
    }
    return static_cast<size_t>(it - header.begin());
  };
  size_t id_column = column("response_id");
  size_t keyword_column = column("keyword");

  KeywordSets sets;
  for (size_t i = 1; i < rows.size(); ++i) {
    const CsvRow& row = rows[i];
    if (row.size() == 1 && row[0].empty()) continue;
    if (row.size() <= std::max(id_column, keyword_column)) {
      throw InputError("keyword file record " + std::to_string(i + 1) +
                       " has " + std::to_string(row.size()) + " fields");
    }
    const std::string& id_text = row[id_column];
    if (id_text.empty() ||
        !std::all_of(id_text.begin(), id_text.end(),
                     [](char c) { return c >= '0' && c <= '9'; })) {
      throw InputError("keyword file record " + std::to_string(i + 1) +
                       ": response_id \"" + id_text + "\" is not an integer");
    }
    std::set<std::string>& keywords = sets[std::stoi(id_text)];
    if (!row[keyword_column].empty()) keywords.insert(row[keyword_column]);
  }
  return sets;
}

KeywordSets ReadPerResponseFile(const std::filesystem::path& path) {
  return ParsePerResponseCsv(ReadFileBytes(path));
}

double KeywordCoverage(std::span<const ResponseKeywords> keywords) {
  if (keywords.empty()) return 0;
  size_t covered = std::count_if(
      keywords.begin(), keywords.end(),
      [](const ResponseKeywords& r) { return !r.entries.empty(); });
  return 100.0 * static_cast<double>(covered) /
         static_cast<double>(keywords.size());
}

}  // namespace surveykw
