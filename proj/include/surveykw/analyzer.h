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

// Linguistic preprocessing of whole responses: clean, tokenize, tag and
// lemmatize.

#ifndef SURVEYKW_ANALYZER_H_
#define SURVEYKW_ANALYZER_H_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "surveykw/corpus_io.h"
#include "surveykw/lemmatizer.h"
#include "surveykw/pos_tagger.h"

namespace surveykw {

struct Token {
  std::string surface;
  std::string pos;
  std::string lemma;
  int index = 0;
};

struct AnalyzedResponse {
  int id = 0;
  std::vector<Token> tokens;
};

// Read-only after loading; safe to share between threads.
struct LinguisticResources {
  TaggerResources tagger;
  LemmaResources lemmas;

  // Loads lexicon.tsv, suffix_rules.tsv and lemma/ from `data_dir`.
  static LinguisticResources LoadFromDirectory(
      const std::filesystem::path& data_dir);
};

// Data directory used when none is given: $SURVEYKW_DATA_DIR if set,
// otherwise the directory configured at build time.
std::filesystem::path DefaultDataDirectory();

std::vector<Token> AnalyzeText(std::string_view clean_text,
                               const LinguisticResources& resources);

// Fills each response's clean_text and returns its analysis, in input
// order. Work is split across `workers` threads.
std::vector<AnalyzedResponse> AnalyzeCorpus(
    std::span<SurveyResponse> responses, const LinguisticResources& resources,
    int workers = 1);

}  // namespace surveykw

#endif  // SURVEYKW_ANALYZER_H_
