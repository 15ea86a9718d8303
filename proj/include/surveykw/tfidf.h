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

// TF-IDF keyword baseline: unigram lemmas scored with raw term frequency
// times natural-log inverse document frequency, top k per response.

#ifndef SURVEYKW_TFIDF_H_
#define SURVEYKW_TFIDF_H_

#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "surveykw/analyzer.h"
#include "surveykw/corpus_io.h"
#include "surveykw/keyword_extractor.h"

namespace surveykw {

using StopwordSet = std::set<std::string>;

// One lowercase word per line; '#' comments and blank lines ignored.
StopwordSet ParseStopwords(std::string_view text);
StopwordSet LoadStopwords(const std::filesystem::path& path);

struct TfIdfModel {
  int n_docs = 0;
  std::map<std::string, int> document_frequency;
  // Every response has an entry, possibly empty.
  std::map<int, std::map<std::string, int>> per_response_tf;
};

// True for tokens made of letters with optional inner hyphens/apostrophes.
bool IsAlphabeticToken(std::string_view token);

// Candidate terms are lemmas of alphabetic tokens whose surface and lemma
// are neither stopwords nor excluded.
TfIdfModel BuildTfIdfModel(std::span<const AnalyzedResponse> corpus,
                           const StopwordSet& stopwords,
                           const ExclusionList& exclusions);

// tf(term, response) * ln(n_docs / df(term)). Throws std::invalid_argument
// when the term does not occur in the response.
double TfIdfScore(const TfIdfModel& model, int response_id,
                  std::string_view term);

// Per response, the k best terms by (score desc, term asc). Adjectives are
// never attached; Keyword::occurrences is the term's corpus frequency.
std::vector<ResponseKeywords> ExtractTopK(const TfIdfModel& model, int k,
                                          int workers = 1);

}  // namespace surveykw

#endif  // SURVEYKW_TFIDF_H_
