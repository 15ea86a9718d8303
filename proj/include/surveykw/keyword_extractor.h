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

// Noun-run keyword extraction with adjective modifiers.
//
// Every maximal run of noun-tagged tokens in a response yields its single
// nouns and its adjacent noun pairs (and, optionally, the whole run when it
// is three or more nouns long). Candidates are counted over the whole
// corpus, then kept when they are multiword (strength >= no_limit_strength)
// or frequent enough (occurrences >= min_single_occur), and dropped when any
// word is excluded. Each kept occurrence picks up the run of adjectives
// immediately before it.

#ifndef SURVEYKW_KEYWORD_EXTRACTOR_H_
#define SURVEYKW_KEYWORD_EXTRACTOR_H_

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "surveykw/analyzer.h"
#include "surveykw/corpus_io.h"

namespace surveykw {

struct Keyword {
  std::vector<std::string> words;  // lemmas
  int occurrences = 0;             // corpus-wide candidate occurrences

  int strength() const { return static_cast<int>(words.size()); }
  // Words joined by single spaces.
  std::string Text() const;
};

// One candidate occurrence covering tokens [begin, end).
struct CandidateOccurrence {
  std::vector<std::string> words;
  int begin = 0;
  int end = 0;
};

struct KeywordEntry {
  Keyword keyword;
  std::vector<std::string> adjectives;  // sorted multiset of lemmas
};

struct ResponseKeywords {
  int response_id = 0;
  std::vector<KeywordEntry> entries;  // sorted by keyword text
};

struct SummaryRow {
  std::string keyword;
  int response_frequency = 0;
  // Sorted by count descending, then adjective.
  std::vector<std::pair<std::string, int>> adjective_frequencies;
};

// Rows sorted by (response_frequency desc, keyword).
struct CorpusKeywordSummary {
  std::vector<SummaryRow> rows;
};

struct ExtractionOptions {
  int min_single_occur = 3;
  int no_limit_strength = 2;
  bool emit_full_runs = false;

  static ExtractionOptions FromConfig(const RunConfig& config);
};

struct ExtractionResult {
  std::vector<ResponseKeywords> per_response;
  CorpusKeywordSummary summary;
};

bool IsNounTag(std::string_view tag);
bool IsAdjectiveTag(std::string_view tag);

// Candidates of one response in token order: for each noun run, its single
// nouns, then adjacent pairs, then the full run when enabled and n >= 3.
std::vector<CandidateOccurrence> ExtractCandidates(
    std::span<const Token> tokens, bool emit_full_runs);

// Whether a candidate with `occurrences` corpus occurrences survives the
// strength/occurrence filter and the exclusion list.
bool PassesFilter(std::span<const std::string> words, int occurrences,
                  const ExtractionOptions& options,
                  const ExclusionList& exclusions);

// Applies PassesFilter to corpus-wide candidate counts keyed by keyword
// text. Result is ordered by keyword text.
std::vector<Keyword> FilterCandidates(
    const std::map<std::string, int>& occurrence_counts,
    const ExtractionOptions& options, const ExclusionList& exclusions);

// Lemmas of the adjective run ending right before token `span_begin`, in
// text order.
std::vector<std::string> AttachAdjectives(std::span<const Token> tokens,
                                          int span_begin);

// Two-pass extraction over an analyzed corpus. Output order is canonical
// and independent of `workers`.
ExtractionResult ExtractKeywords(std::span<const AnalyzedResponse> corpus,
                                 const ExtractionOptions& options,
                                 const ExclusionList& exclusions,
                                 int workers = 1);

// Aggregates per-response keywords into response and adjective frequencies.
CorpusKeywordSummary Summarize(std::span<const ResponseKeywords> responses);

}  // namespace surveykw

#endif  // SURVEYKW_KEYWORD_EXTRACTOR_H_
