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

#include "surveykw/tfidf.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "surveykw/csv.h"
#include "surveykw/parallel.h"
#include "surveykw/text_cleaning.h"

namespace surveykw {

StopwordSet ParseStopwords(std::string_view text) {
  StopwordSet stopwords;
  text = StripBom(text);
  while (!text.empty()) {
    size_t eol = text.find('\n');
    std::string_view line = TrimWhitespace(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view()
                                         : text.substr(eol + 1);
    if (line.empty() || line.front() == '#') continue;
    stopwords.insert(AsciiLower(NormalizeApostrophes(line)));
  }
  return stopwords;
}

StopwordSet LoadStopwords(const std::filesystem::path& path) {
  return ParseStopwords(ReadFileBytes(path));
}

bool IsAlphabeticToken(std::string_view token) {
  std::string normalized = NormalizeApostrophes(token);
  if (normalized.empty()) return false;
  auto is_letter = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           static_cast<unsigned char>(c) >= 0x80;
  };
  if (!is_letter(normalized.front()) || !is_letter(normalized.back())) {
    return false;
  }
  return std::all_of(normalized.begin(), normalized.end(), [&](char c) {
    return is_letter(c) || c == '-' || c == '\'';
  }) && !IsPunctuationToken(normalized);
}

TfIdfModel BuildTfIdfModel(std::span<const AnalyzedResponse> corpus,
                           const StopwordSet& stopwords,
                           const ExclusionList& exclusions) {
  TfIdfModel model;
  model.n_docs = static_cast<int>(corpus.size());
  for (const AnalyzedResponse& response : corpus) {
    std::map<std::string, int>& tf = model.per_response_tf[response.id];
    for (const Token& token : response.tokens) {
      if (!IsAlphabeticToken(token.surface)) continue;
      std::string surface = AsciiLower(NormalizeApostrophes(token.surface));
      if (stopwords.count(surface) || stopwords.count(token.lemma)) continue;
      if (exclusions.Contains(surface) || exclusions.Contains(token.lemma)) {
        continue;
      }
      ++tf[token.lemma];
    }
    for (const auto& [term, count] : tf) ++model.document_frequency[term];
  }
  return model;
}

double TfIdfScore(const TfIdfModel& model, int response_id,
                  std::string_view term) {
  auto response = model.per_response_tf.find(response_id);
  if (response == model.per_response_tf.end()) {
    throw std::invalid_argument("unknown response id " +
                                std::to_string(response_id));
  }
  auto tf = response->second.find(std::string(term));
  if (tf == response->second.end()) {
    throw std::invalid_argument("term \"" + std::string(term) +
                                "\" does not occur in response " +
                                std::to_string(response_id));
  }
  int df = model.document_frequency.at(tf->first);
  return tf->second * std::log(static_cast<double>(model.n_docs) / df);
}

std::vector<ResponseKeywords> ExtractTopK(const TfIdfModel& model, int k,
                                          int workers) {
  std::map<std::string, int> corpus_frequency;
  for (const auto& [id, tf] : model.per_response_tf) {
    for (const auto& [term, count] : tf) corpus_frequency[term] += count;
  }

  std::vector<const std::pair<const int, std::map<std::string, int>>*> rows;
  rows.reserve(model.per_response_tf.size());
  for (const auto& row : model.per_response_tf) rows.push_back(&row);

  std::vector<ResponseKeywords> result(rows.size());
  ParallelFor(rows.size(), workers, [&](size_t i) {
    const auto& [id, tf] = *rows[i];
    std::vector<std::pair<double, std::string>> scored;
    scored.reserve(tf.size());
    for (const auto& [term, count] : tf) {
      scored.emplace_back(TfIdfScore(model, id, term), term);
    }
    size_t keep = std::min<size_t>(scored.size(), std::max(k, 0));
    std::partial_sort(scored.begin(), scored.begin() + keep, scored.end(),
                      [](const auto& a, const auto& b) {
                        if (a.first != b.first) return a.first > b.first;
                        return a.second < b.second;
                      });
    ResponseKeywords& out = result[i];
    out.response_id = id;
    for (size_t j = 0; j < keep; ++j) {
      KeywordEntry entry;
      entry.keyword.words = {scored[j].second};
      entry.keyword.occurrences = corpus_frequency.at(scored[j].second);
      out.entries.push_back(std::move(entry));
    }
    std::sort(out.entries.begin(), out.entries.end(),
              [](const KeywordEntry& a, const KeywordEntry& b) {
                return a.keyword.words < b.keyword.words;
              });
  });
  return result;
}

}  // namespace surveykw
