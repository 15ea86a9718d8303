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

#include "surveykw/text_cleaning.h"

#include <gtest/gtest.h>

#include "testing/generators.h"

namespace surveykw {
namespace {

using Tokens = std::vector<std::string>;

TEST(CleanTextTest, Bullets) {
  EXPECT_EQ(CleanText("- fibre\n- service"), "fibre service");
  EXPECT_EQ(CleanText("* pay\n\xE2\x80\xA2 benefits"), "pay benefits");
}

TEST(CleanTextTest, Enumerators) {
  EXPECT_EQ(CleanText("1. pay\n2) benefits"), "pay benefits");
  EXPECT_EQ(CleanText("10) a\n3.b"), "a 3.b");
}

TEST(CleanTextTest, PlainTextUnchanged) {
  EXPECT_EQ(CleanText("Providing services e.g. fibre to the home"),
            "Providing services e.g. fibre to the home");
}

TEST(CleanTextTest, WhitespaceCollapsesAndTrims) {
  EXPECT_EQ(CleanText("  a \t b\r\n\n c  "), "a b c");
  EXPECT_EQ(CleanText(""), "");
  EXPECT_EQ(CleanText("\n\n"), "");
}

TEST(CleanTextTest, InnerHyphensAreNotBullets) {
  EXPECT_EQ(CleanText("state-of-the-art -5 degrees"),
            "state-of-the-art -5 degrees");
}

TEST(TokenizeTest, TrailingPeriod) {
  EXPECT_EQ(Tokenize("internal training centre."),
            (Tokens{"internal", "training", "centre", "."}));
}

TEST(TokenizeTest, Empty) { EXPECT_TRUE(Tokenize("").empty()); }

TEST(TokenizeTest, LeadingPlusDetaches) {
  EXPECT_EQ(Tokenize("technologies +constantly"),
            (Tokens{"technologies", "+", "constantly"}));
}

TEST(TokenizeTest, ContractionsAndHyphensStayWhole) {
  EXPECT_EQ(Tokenize("we've got e-learning"),
            (Tokens{"we've", "got", "e-learning"}));
}

TEST(TokenizeTest, AbbreviationsStayWhole) {
  EXPECT_EQ(Tokenize("services e.g. fibre"),
            (Tokens{"services", "e.g.", "fibre"}));
  EXPECT_EQ(Tokenize("(e.g. fibre), etc."),
            (Tokens{"(", "e.g.", "fibre", ")", ",", "etc."}));
}

TEST(TokenizeTest, CommaAndRepeatedMarks) {
  EXPECT_EQ(Tokenize("studies, great!!!"),
            (Tokens{"studies", ",", "great", "!!!"}));
}

TEST(TokenizeTest, PossessiveSplits) {
  EXPECT_EQ(Tokenize("company's staff"), (Tokens{"company", "'s", "staff"}));
  EXPECT_EQ(Tokenize("it's good"), (Tokens{"it's", "good"}));
}

TEST(TokenizeTest, Quotes) {
  EXPECT_EQ(Tokenize("\"great team\""),
            (Tokens{"\"", "great", "team", "\""}));
}

TEST(PunctuationTest, Classifies) {
  EXPECT_TRUE(IsPunctuationToken("."));
  EXPECT_TRUE(IsPunctuationToken("+"));
  EXPECT_TRUE(IsPunctuationToken("\xE2\x80\x94"));  // em dash
  EXPECT_FALSE(IsPunctuationToken("a."));
  EXPECT_FALSE(IsPunctuationToken("42"));
}

TEST(NormalizeApostrophesTest, Typographic) {
  EXPECT_EQ(NormalizeApostrophes("we\xE2\x80\x99ve"), "we've");
}

// Tokenizing never loses non-space characters and never yields empty or
// space-containing tokens.
TEST(TokenizePropertyTest, PreservesCharacters) {
  testing::Generator gen(3);
  const std::vector<std::string> pieces = {
      "a", "Bc", ".", ",", "+", "'", "-", "e.g.", " ", "  ", "(", ")",
      "\xE2\x80\x99", "\xC3\xA9", "!", "1", "2.5", "s"};
  for (int trial = 0; trial < 2000; ++trial) {
    std::string text;
    int n = gen.Uniform(0, 12);
    for (int i = 0; i < n; ++i) text += gen.Pick(pieces);
    std::string clean = CleanText(text);
    std::string joined;
    for (const std::string& token : Tokenize(clean)) {
      ASSERT_FALSE(token.empty()) << text;
      ASSERT_EQ(token.find(' '), std::string::npos) << text;
      joined += token;
    }
    std::string expected;
    for (char c : clean) {
      if (c != ' ') expected += c;
    }
    EXPECT_EQ(joined, expected) << text;
  }
}

TEST(CleanTextPropertyTest, IdempotentAndSingleLine) {
  testing::Generator gen(5);
  for (int trial = 0; trial < 1000; ++trial) {
    std::string raw = gen.ResponseText(20);
    if (gen.Bernoulli(0.3)) raw = "1. " + raw + "\n2) more";
    std::string once = CleanText(raw);
    EXPECT_EQ(once.find('\n'), std::string::npos);
    EXPECT_EQ(once.find("  "), std::string::npos);
    EXPECT_EQ(CleanText(once), once) << raw;
  }
}

}  // namespace
}  // namespace surveykw
