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

// Output files of a keyword run: per-response keywords ("file A") and the
// corpus summary ("file B"), both CSV and sorted canonically.

#ifndef SURVEYKW_OUTPUT_FILES_H_
#define SURVEYKW_OUTPUT_FILES_H_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "surveykw/corpus_io.h"
#include "surveykw/eval_metrics.h"
#include "surveykw/keyword_extractor.h"

namespace surveykw {

inline constexpr char kPerResponseFile[] = "keywords_per_response.csv";
inline constexpr char kSummaryFile[] = "keywords_summary.csv";

// Columns response_id, response_text, keyword, adjectives. One row per
// (response, keyword), ordered by response id then keyword; a response
// without keywords gets a single row with an empty keyword so readers see
// the whole response universe. Adjectives are the distinct attached lemmas,
// ';'-joined.
std::string FormatPerResponseCsv(std::span<const SurveyResponse> responses,
                                 std::span<const ResponseKeywords> keywords);

// Columns keyword, response_frequency, adjective_frequencies, where the last
// holds "adjective:count" pairs joined by ';'.
std::string FormatSummaryCsv(const CorpusKeywordSummary& summary);

// Reads file A back into per-response keyword sets.
KeywordSets ParsePerResponseCsv(std::string_view text);
KeywordSets ReadPerResponseFile(const std::filesystem::path& path);

// Percentage of responses with at least one keyword; 0 for no responses.
double KeywordCoverage(std::span<const ResponseKeywords> keywords);

}  // namespace surveykw

#endif  // SURVEYKW_OUTPUT_FILES_H_
