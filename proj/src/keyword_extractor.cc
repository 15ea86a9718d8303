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

#include "surveykw/keyword_extractor.h"

#include <algorithm>
#include <set>

#include "surveykw/parallel.h"

namespace surveykw {
namespace {

std::string JoinWords(std::span<const std::string> words) {
  std::string text;
  for (size_t i = 0; i < words.size(); ++i) {
    if (i > 0) text.push_back(' ');
    text.append(words[i]);
  }
  return text;
}

std::vector<std::string> Lemmas(std::span<const Token> tokens, int begin,
                                int end) {
  std::vector<std::string> words;
  words.reserve(end - begin);
  for (int i = begin; i < end; ++i) words.push_back(tokens[i].lemma);
  return words;
}

}  // namespace

std::string Keyword::Text() const { return JoinWords(words); }

ExtractionOptions ExtractionOptions::FromConfig(const RunConfig& config) {
  ExtractionOptions options;
  options.min_single_occur = config.min_single_occur;
  options.no_limit_strength = config.no_limit_strength;
  options.emit_full_runs = config.emit_full_runs;
  return options;
}

bool IsNounTag(std::string_view tag) {
  return !tag.empty() && tag.front() == 'N';
}

bool IsAdjectiveTag(std::string_view tag) {
  return tag == "JJ" || tag == "JJR" || tag == "JJS";
}

std::vector<CandidateOccurrence> ExtractCandidates(
    std::span<const Token> tokens, bool emit_full_runs) {
  std::vector<CandidateOccurrence> candidates;
  const int n = static_cast<int>(tokens.size());
  int i = 0;
  while (i < n) {
    if (!IsNounTag(tokens[i].pos)) {
      ++i;
      continue;
    }
    int run_begin = i;
    while (i < n && IsNounTag(tokens[i].pos)) ++i;
    int run_end = i;

    for (int t = run_begin; t < run_end; ++t) {
      candidates.push_back({Lemmas(tokens, t, t + 1), t, t + 1});
    }
    for (int t = run_begin; t + 1 < run_end; ++t) {
      candidates.push_back({Lemmas(tokens, t, t + 2), t, t + 2});
    }
    if (emit_full_runs && run_end - run_begin >= 3) {
      candidates.push_back(
          {Lemmas(tokens, run_begin, run_end), run_begin, run_end});
    }
  }
  return candidates;
}

bool PassesFilter(std::span<const std::string> words, int occurrences,
                  const ExtractionOptions& options,
                  const ExclusionList& exclusions) {
  int strength = static_cast<int>(words.size());
  if (strength < options.no_limit_strength &&
      occurrences < options.min_single_occur) {
    return false;
  }
  if (exclusions.empty()) return true;
  for (const std::string& word : words) {
    if (exclusions.Contains(word)) return false;
  }
  return strength == 1 || !exclusions.Contains(JoinWords(words));
}

std::vector<Keyword> FilterCandidates(
    const std::map<std::string, int>& occurrence_counts,
    const ExtractionOptions& options, const ExclusionList& exclusions) {
  std::vector<Keyword> kept;
  for (const auto& [text, count] : occurrence_counts) {
    Keyword keyword;
    size_t start = 0;
    while (true) {
      size_t space = text.find(' ', start);
      keyword.words.push_back(text.substr(start, space - start));
      if (space == std::string::npos) break;
      start = space + 1;
    }
    keyword.occurrences = count;
    if (PassesFilter(keyword.words, count, options, exclusions)) {
      kept.push_back(std::move(keyword));
    }
  }
  return kept;
}

std::vector<std::string> AttachAdjectives(std::span<const Token> tokens,
                                          int span_begin) {
  int first = span_begin;
  while (first > 0 && IsAdjectiveTag(tokens[first - 1].pos)) --first;
  std::vector<std::string> adjectives;
  for (int i = first; i < span_begin; ++i) {
    adjectives.push_back(tokens[i].lemma);
  }
  return adjectives;
}

ExtractionResult ExtractKeywords(std::span<const AnalyzedResponse> corpus,
                                 const ExtractionOptions& options,
                                 const ExclusionList& exclusions,
                                 int workers) {
  // Pass 1: candidates per response, then corpus-wide occurrence counts.
  std::vector<std::vector<CandidateOccurrence>> candidates(corpus.size());
  ParallelFor(corpus.size(), workers, [&](size_t i) {
    candidates[i] = ExtractCandidates(corpus[i].tokens, options.emit_full_runs);
  });
  std::map<std::string, int> counts;
  for (const auto& response_candidates : candidates) {
    for (const CandidateOccurrence& candidate : response_candidates) {
      ++counts[JoinWords(candidate.words)];
    }
  }

  std::map<std::string, Keyword> kept;
  for (Keyword& keyword : FilterCandidates(counts, options, exclusions)) {
    std::string text = keyword.Text();
    kept.emplace(std::move(text), std::move(keyword));
  }

  // Pass 2: keep, dedupe per response and attach adjectives.
  ExtractionResult result;
  result.per_response.resize(corpus.size());
  ParallelFor(corpus.size(), workers, [&](size_t i) {
    std::map<std::string, KeywordEntry> entries;
    for (const CandidateOccurrence& candidate : candidates[i]) {
      auto it = kept.find(JoinWords(candidate.words));
      if (it == kept.end()) continue;
      auto [slot, inserted] = entries.try_emplace(it->first);
      if (inserted) slot->second.keyword = it->second;
      std::vector<std::string> adjectives =
          AttachAdjectives(corpus[i].tokens, candidate.begin);
      slot->second.adjectives.insert(slot->second.adjectives.end(),
                                     adjectives.begin(), adjectives.end());
    }
    ResponseKeywords& out = result.per_response[i];
    out.response_id = corpus[i].id;
    out.entries.reserve(entries.size());
    for (auto& [text, entry] : entries) {
      std::sort(entry.adjectives.begin(), entry.adjectives.end());
      out.entries.push_back(std::move(entry));
    }
  });

  result.summary = Summarize(result.per_response);
  return result;
}

CorpusKeywordSummary Summarize(std::span<const ResponseKeywords> responses) {
  struct Tally {
    int responses = 0;
    std::map<std::string, int> adjectives;
  };
  std::map<std::string, Tally> tallies;
  for (const ResponseKeywords& response : responses) {
    std::set<std::string> seen;
    for (const KeywordEntry& entry : response.entries) {
      std::string text = entry.keyword.Text();
      if (!seen.insert(text).second) continue;
      Tally& tally = tallies[text];
      ++tally.responses;
      std::set<std::string> distinct(entry.adjectives.begin(),
                                     entry.adjectives.end());
      for (const std::string& adjective : distinct) ++tally.adjectives[adjective];
    }
  }

  CorpusKeywordSummary summary;
  summary.rows.reserve(tallies.size());
  for (auto& [text, tally] : tallies) {
    SummaryRow row;
    row.keyword = text;
    row.response_frequency = tally.responses;
    row.adjective_frequencies.assign(tally.adjectives.begin(),
                                     tally.adjectives.end());
    std::stable_sort(row.adjective_frequencies.begin(),
                     row.adjective_frequencies.end(),
                     [](const auto& a, const auto& b) {
                       return a.second > b.second;
                     });
    summary.rows.push_back(std::move(row));
  }
  std::stable_sort(summary.rows.begin(), summary.rows.end(),
                   [](const SummaryRow& a, const SummaryRow& b) {
                     return a.response_frequency > b.response_frequency;
                   });
  return summary;
}

}  // namespace surveykw
