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

#include "surveykw/pos_tagger.h"

#include <gtest/gtest.h>

#include "surveykw/errors.h"
#include "testing/generators.h"

namespace surveykw {
namespace {

std::vector<std::string> Tags(const std::vector<std::string>& tokens,
                              const TaggerResources& resources) {
  std::vector<std::string> tags;
  for (const TaggedWord& word : PosTag(tokens, resources)) {
    tags.push_back(word.second);
  }
  return tags;
}

const TaggerResources& Shipped() {
  static const TaggerResources resources =
      TaggerResources::Load(testing::LinguisticDataDir() / "lexicon.tsv",
                            testing::LinguisticDataDir() / "suffix_rules.tsv");
  return resources;
}

TEST(PosTagTest, ShippedLexiconTagsTrainingCentrePhrase) {
  EXPECT_EQ(Tags({"internal", "training", "centre"}, Shipped()),
            (std::vector<std::string>{"JJ", "NN", "NN"}));
}

TEST(PosTagTest, LySuffixRule) {
  TaggerResources empty;
  EXPECT_EQ(Tags({"constantly"}, empty), (std::vector<std::string>{"RB"}));
  EXPECT_EQ(Tags({"constantly"}, Shipped()), (std::vector<std::string>{"RB"}));
}

TEST(PosTagTest, UnknownWordFallsToDefault) {
  EXPECT_EQ(Tags({"zzzqx"}, Shipped()), (std::vector<std::string>{"NN"}));
}

TEST(PosTagTest, DefaultRuleOrder) {
  TaggerResources empty;
  EXPECT_EQ(Tags({"+", "42", "1,000", "walking", "jumped", "famous", "kindness",
                  "cats", "glass"},
                 empty),
            (std::vector<std::string>{"SYM", "CD", "CD", "VBG", "VBD", "JJ",
                                      "NN", "NNS", "NN"}));
}

TEST(PosTagTest, CapitalizedOnlyAwayFromSentenceStart) {
  TaggerResources empty;
  EXPECT_EQ(Tags({"Zorblat", "likes", "Qwerty", ".", "Xyzzy"}, empty),
            (std::vector<std::string>{"NN", "NNS", "NNP", "SYM", "NN"}));
}

TEST(PosTagTest, ExactCaseOverridesLowercase) {
  TaggerResources resources = TaggerResources::Parse(
      "apple\tNN\nApple\tNNP\n", "default\t-\tNN\n");
  EXPECT_EQ(Tags({"Apple", "apple", "APPLE"}, resources),
            (std::vector<std::string>{"NNP", "NN", "NN"}));
}

TEST(PosTagTest, SuffixNeedsAStem) {
  TaggerResources empty;
  // "sing" is only one character longer than "ing".
  EXPECT_EQ(Tags({"sing", "bus"}, empty),
            (std::vector<std::string>{"NN", "NNS"}));
}

TEST(TaggerResourcesTest, RejectsUnknownTagsAndMissingDefault) {
  EXPECT_THROW(TaggerResources::Parse("dog\tXX\n", "default\t-\tNN\n"),
               InputError);
  EXPECT_THROW(TaggerResources::Parse("", "suffix\ting\tVBG\n"), InputError);
}

TEST(TaggerResourcesTest, ShippedFilesMatchBuiltInRules) {
  const auto& loaded = Shipped().rules();
  const auto defaults = TaggerResources::DefaultRules();
  ASSERT_EQ(loaded.size(), defaults.size());
  for (size_t i = 0; i < loaded.size(); ++i) {
    EXPECT_EQ(loaded[i].kind, defaults[i].kind) << i;
    EXPECT_EQ(loaded[i].suffix, defaults[i].suffix) << i;
    EXPECT_EQ(loaded[i].unless, defaults[i].unless) << i;
    EXPECT_EQ(loaded[i].tag, defaults[i].tag) << i;
  }
  EXPECT_GT(Shipped().lexicon_size(), 20000u);
}

TEST(PennTagsTest, Inventory) {
  EXPECT_TRUE(IsPennTag("NN"));
  EXPECT_TRUE(IsPennTag("PRP$"));
  EXPECT_FALSE(IsPennTag("NOUN"));
}

TEST(PosTagPropertyTest, TotalAndLengthPreserving) {
  testing::Generator gen(17);
  const std::vector<std::string> pieces = {"a", "Z", "ing", "ly", ".", "'",
                                           "s", "9", "\xC3\xA9", "-", "ed"};
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<std::string> tokens(gen.Uniform(0, 15));
    for (std::string& token : tokens) {
      int n = gen.Uniform(1, 4);
      for (int i = 0; i < n; ++i) token += gen.Pick(pieces);
    }
    auto tagged = PosTag(tokens, Shipped());
    ASSERT_EQ(tagged.size(), tokens.size());
    for (size_t i = 0; i < tokens.size(); ++i) {
      EXPECT_EQ(tagged[i].first, tokens[i]);
      EXPECT_TRUE(IsPennTag(tagged[i].second)) << tagged[i].second;
    }
  }
}

}  // namespace
}  // namespace surveykw
