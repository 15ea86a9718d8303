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

#include <gtest/gtest.h>

#include "surveykw/corpus_io.h"
#include "testing/generators.h"

namespace surveykw {
namespace {

const LinguisticResources& Resources() {
  static const LinguisticResources resources =
      LinguisticResources::LoadFromDirectory(testing::LinguisticDataDir());
  return resources;
}

TEST(AnalyzeTextTest, FixtureThirdResponse) {
  auto tokens = AnalyzeText(
      "You can further your studies, have an internal training centre",
      Resources());
  std::vector<std::string> surfaces, tags, lemmas;
  for (const Token& token : tokens) {
    surfaces.push_back(token.surface);
    tags.push_back(token.pos);
    lemmas.push_back(token.lemma);
  }
  EXPECT_EQ(surfaces,
            (std::vector<std::string>{"You", "can", "further", "your",
                                      "studies", ",", "have", "an",
                                      "internal", "training", "centre"}));
  EXPECT_EQ(tags[4], "NNS");
  EXPECT_EQ(lemmas[4], "study");
  EXPECT_EQ(tags[8], "JJ");
  EXPECT_EQ(tags[9], "NN");
  EXPECT_EQ(tags[10], "NN");
  EXPECT_NE(tags[2][0], 'N');  // "further" must not start a noun run
}

TEST(AnalyzeTextTest, EmptyText) {
  EXPECT_TRUE(AnalyzeText("", Resources()).empty());
}

TEST(AnalyzeCorpusTest, FillsCleanTextAndKeepsOrder) {
  std::vector<SurveyResponse> responses(2);
  responses[0].id = 0;
  responses[0].raw_text = "- fibre\n- service";
  responses[1].id = 1;
  responses[1].raw_text = "";
  auto analyzed = AnalyzeCorpus(responses, Resources(), 2);
  ASSERT_EQ(analyzed.size(), 2u);
  EXPECT_EQ(responses[0].clean_text, "fibre service");
  EXPECT_EQ(analyzed[0].id, 0);
  EXPECT_EQ(analyzed[0].tokens.size(), 2u);
  EXPECT_TRUE(analyzed[1].tokens.empty());
}

TEST(AnalyzePropertyTest, TokenInvariantsAndWorkerIndependence) {
  testing::Generator gen(31);
  std::vector<SurveyResponse> responses(200);
  for (size_t i = 0; i < responses.size(); ++i) {
    responses[i].id = static_cast<int>(i);
    responses[i].raw_text = gen.ResponseText(25);
  }
  std::vector<SurveyResponse> copy = responses;
  auto one = AnalyzeCorpus(responses, Resources(), 1);
  auto many = AnalyzeCorpus(copy, Resources(), 7);
  ASSERT_EQ(one.size(), many.size());
  for (size_t r = 0; r < one.size(); ++r) {
    ASSERT_EQ(one[r].tokens.size(), many[r].tokens.size());
    for (size_t i = 0; i < one[r].tokens.size(); ++i) {
      const Token& a = one[r].tokens[i];
      const Token& b = many[r].tokens[i];
      EXPECT_EQ(a.surface, b.surface);
      EXPECT_EQ(a.pos, b.pos);
      EXPECT_EQ(a.lemma, b.lemma);
      EXPECT_EQ(a.index, static_cast<int>(i));
      EXPECT_FALSE(a.surface.empty());
      EXPECT_FALSE(a.lemma.empty());
      EXPECT_EQ(a.lemma, AsciiLower(a.lemma));
      EXPECT_TRUE(IsPennTag(a.pos));
    }
  }
}

}  // namespace
}  // namespace surveykw
