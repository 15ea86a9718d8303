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

#include "surveykw/analyzer.h"

#include <cstdlib>

#include "surveykw/parallel.h"
#include "surveykw/text_cleaning.h"

#ifndef SURVEYKW_DEFAULT_DATA_DIR
#define SURVEYKW_DEFAULT_DATA_DIR "data"
#endif

namespace surveykw {

LinguisticResources LinguisticResources::LoadFromDirectory(
    const std::filesystem::path& data_dir) {
  LinguisticResources resources;
  resources.tagger = TaggerResources::Load(data_dir / "lexicon.tsv",
                                           data_dir / "suffix_rules.tsv");
  resources.lemmas = LemmaResources::LoadFromDirectory(data_dir / "lemma");
  return resources;
}

std::filesystem::path DefaultDataDirectory() {
  if (const char* env = std::getenv("SURVEYKW_DATA_DIR"); env && *env) {
    return env;
  }
  return SURVEYKW_DEFAULT_DATA_DIR;
}

std::vector<Token> AnalyzeText(std::string_view clean_text,
                               const LinguisticResources& resources) {
  std::vector<std::string> words = Tokenize(clean_text);
  std::vector<TaggedWord> tagged = PosTag(words, resources.tagger);
  std::vector<Token> tokens;
  tokens.reserve(tagged.size());
  for (size_t i = 0; i < tagged.size(); ++i) {
    Token token;
    token.lemma = Lemmatize(tagged[i].first, tagged[i].second,
                            resources.lemmas);
    token.surface = std::move(tagged[i].first);
    token.pos = std::move(tagged[i].second);
    token.index = static_cast<int>(i);
    tokens.push_back(std::move(token));
  }
  return tokens;
}

std::vector<AnalyzedResponse> AnalyzeCorpus(
    std::span<SurveyResponse> responses, const LinguisticResources& resources,
    int workers) {
  std::vector<AnalyzedResponse> analyzed(responses.size());
  ParallelFor(responses.size(), workers, [&](size_t i) {
    SurveyResponse& response = responses[i];
    response.clean_text = CleanText(response.raw_text);
    analyzed[i].id = response.id;
    analyzed[i].tokens = AnalyzeText(response.clean_text, resources);
  });
  return analyzed;
}

}  // namespace surveykw
