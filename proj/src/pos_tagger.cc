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

#include <algorithm>

#include "surveykw/corpus_io.h"
#include "surveykw/csv.h"
#include "surveykw/errors.h"
#include "surveykw/text_cleaning.h"

namespace surveykw {
namespace {

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

bool IsNumeric(std::string_view token) {
  if (!token.empty() && (token.front() == '-' || token.front() == '+')) {
    token.remove_prefix(1);
  }
  if (token.empty() || !IsDigit(token.front())) return false;
  return std::all_of(token.begin(), token.end(), [](char c) {
    return IsDigit(c) || c == ',' || c == '.' || c == ':' || c == '/' ||
           c == '%' || c == '-';
  });
}

bool EndsWith(std::string_view text, std::string_view suffix) {
  return text.size() >= suffix.size() &&
         text.substr(text.size() - suffix.size()) == suffix;
}

// Splits on tabs; tolerates a trailing CR.
std::vector<std::string_view> SplitTabs(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  std::vector<std::string_view> fields;
  while (true) {
    size_t tab = line.find('\t');
    fields.push_back(line.substr(0, tab));
    if (tab == std::string_view::npos) break;
    line.remove_prefix(tab + 1);
  }
  return fields;
}

// Calls `fn(line, number)` for every non-blank line. With `comments`, lines
// starting with '#' are skipped too (the lexicon has a "#" entry).
template <typename Fn>
void ForEachLine(std::string_view text, bool comments, Fn&& fn) {
  int number = 0;
  while (!text.empty()) {
    size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view()
                                         : text.substr(eol + 1);
    ++number;
    if (TrimWhitespace(line).empty()) continue;
    if (comments && line.front() == '#') continue;
    fn(line, number);
  }
}

SuffixRule MakeRule(SuffixRule::Kind kind, std::string tag,
                    std::string suffix = "", std::string unless = "") {
  SuffixRule rule;
  rule.kind = kind;
  rule.tag = std::move(tag);
  rule.suffix = std::move(suffix);
  rule.unless = std::move(unless);
  return rule;
}

}  // namespace

const std::vector<std::string>& PennTags() {
  static const std::vector<std::string> tags = {
      "CC",  "CD",  "DT",   "EX",  "FW",  "IN",  "JJ",  "JJR", "JJS",
      "LS",  "MD",  "NN",   "NNS", "NNP", "NNPS", "PDT", "POS", "PRP",
      "PRP$", "RB", "RBR",  "RBS", "RP",  "SYM", "TO",  "UH",  "VB",
      "VBD", "VBG", "VBN",  "VBP", "VBZ", "WDT", "WP",  "WP$", "WRB",
      "$",   "#",   "``",   "''",  "(",   ")",   ",",   ".",   ":"};
  return tags;
}

bool IsPennTag(std::string_view tag) {
  const auto& tags = PennTags();
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

bool SuffixRule::Matches(std::string_view token, bool sentence_start) const {
  switch (kind) {
    case Kind::kSymbol:
      return IsPunctuationToken(token);
    case Kind::kNumeric:
      return IsNumeric(token);
    case Kind::kSuffix: {
      std::string lower = AsciiLower(token);
      // Require a stem of at least two characters so "red" is not VBD.
      if (lower.size() < suffix.size() + 2) return false;
      if (!EndsWith(lower, suffix)) return false;
      return unless.empty() || !EndsWith(lower, unless);
    }
    case Kind::kCapitalized:
      return !sentence_start && !token.empty() && token.front() >= 'A' &&
             token.front() <= 'Z';
    case Kind::kDefault:
      return true;
  }
  return false;
}

std::vector<SuffixRule> TaggerResources::DefaultRules() {
  using Kind = SuffixRule::Kind;
  std::vector<SuffixRule> rules;
  rules.push_back(MakeRule(Kind::kSymbol, "SYM"));
  rules.push_back(MakeRule(Kind::kNumeric, "CD"));
  rules.push_back(MakeRule(Kind::kSuffix, "VBG", "ing"));
  rules.push_back(MakeRule(Kind::kSuffix, "VBD", "ed"));
  for (const char* suffix : {"ous", "ful", "able", "ible", "ive", "ic", "al"}) {
    rules.push_back(MakeRule(Kind::kSuffix, "JJ", suffix));
  }
  rules.push_back(MakeRule(Kind::kSuffix, "RB", "ly"));
  for (const char* suffix : {"ness", "ment", "tion", "ity"}) {
    rules.push_back(MakeRule(Kind::kSuffix, "NN", suffix));
  }
  rules.push_back(MakeRule(Kind::kSuffix, "NNS", "s", "ss"));
  rules.push_back(MakeRule(Kind::kCapitalized, "NNP"));
  rules.push_back(MakeRule(Kind::kDefault, "NN"));
  return rules;
}

void TaggerResources::AddLexiconEntry(std::string_view word,
                                      std::string_view tag) {
  std::string key = NormalizeApostrophes(word);
  std::string lower = AsciiLower(key);
  // Lowercase spellings own the case-insensitive layer; capitalized entries
  // only fill it when no lowercase spelling exists.
  if (lower == key || lowercase_.find(lower) == lowercase_.end()) {
    lowercase_[lower] = std::string(tag);
  }
  exact_[std::move(key)] = std::string(tag);
}

void TaggerResources::SetRules(std::vector<SuffixRule> rules) {
  if (rules.empty() || rules.back().kind != SuffixRule::Kind::kDefault) {
    throw InputError("suffix rules must end with a default rule");
  }
  rules_ = std::move(rules);
}

const std::string* TaggerResources::LookupLexicon(std::string_view word) const {
  std::string key = NormalizeApostrophes(word);
  if (auto it = exact_.find(key); it != exact_.end()) return &it->second;
  if (auto it = lowercase_.find(AsciiLower(key)); it != lowercase_.end()) {
    return &it->second;
  }
  return nullptr;
}

TaggerResources TaggerResources::Parse(std::string_view lexicon_text,
                                       std::string_view rules_text) {
  TaggerResources resources;
  ForEachLine(StripBom(lexicon_text), false, [&](std::string_view line, int number) {
    std::vector<std::string_view> fields = SplitTabs(line);
    if (fields.size() != 2 || fields[0].empty()) {
      throw InputError("lexicon line " + std::to_string(number) +
                       ": expected word<TAB>TAG");
    }
    if (!IsPennTag(fields[1])) {
      throw InputError("lexicon line " + std::to_string(number) +
                       ": unknown tag " + std::string(fields[1]));
    }
    resources.AddLexiconEntry(fields[0], fields[1]);
  });

  std::vector<SuffixRule> rules;
  ForEachLine(StripBom(rules_text), true, [&](std::string_view line, int number) {
    std::vector<std::string_view> fields = SplitTabs(line);
    auto fail = [&](const std::string& why) {
      return InputError("suffix rule line " + std::to_string(number) + ": " +
                        why);
    };
    if (fields.size() != 3) throw fail("expected kind<TAB>arg<TAB>TAG");
    std::string tag(fields[2]);
    if (!IsPennTag(tag)) throw fail("unknown tag " + tag);
    std::string_view kind = fields[0];
    if (kind == "symbol") {
      rules.push_back(MakeRule(SuffixRule::Kind::kSymbol, tag));
    } else if (kind == "numeric") {
      rules.push_back(MakeRule(SuffixRule::Kind::kNumeric, tag));
    } else if (kind == "capitalized") {
      rules.push_back(MakeRule(SuffixRule::Kind::kCapitalized, tag));
    } else if (kind == "default") {
      rules.push_back(MakeRule(SuffixRule::Kind::kDefault, tag));
    } else if (kind == "suffix") {
      std::string_view arg = fields[1];
      size_t bang = arg.find('!');
      std::string suffix = AsciiLower(arg.substr(0, bang));
      std::string unless = bang == std::string_view::npos
                               ? std::string()
                               : AsciiLower(arg.substr(bang + 1));
      if (suffix.empty()) throw fail("empty suffix");
      rules.push_back(MakeRule(SuffixRule::Kind::kSuffix, tag, suffix, unless));
    } else {
      throw fail("unknown rule kind " + std::string(kind));
    }
  });
  resources.SetRules(std::move(rules));
  return resources;
}

TaggerResources TaggerResources::Load(
    const std::filesystem::path& lexicon_path,
    const std::filesystem::path& rules_path) {
  try {
    return Parse(ReadFileBytes(lexicon_path), ReadFileBytes(rules_path));
  } catch (const InputError& e) {
    throw InputError("loading tagger resources: " + std::string(e.what()));
  }
}

std::vector<TaggedWord> PosTag(std::span<const std::string> tokens,
                               const TaggerResources& resources) {
  std::vector<TaggedWord> tagged;
  tagged.reserve(tokens.size());
  bool sentence_start = true;
  for (const std::string& token : tokens) {
    std::string tag;
    if (const std::string* hit = resources.LookupLexicon(token)) {
      tag = *hit;
    } else {
      for (const SuffixRule& rule : resources.rules()) {
        if (rule.Matches(token, sentence_start)) {
          tag = rule.tag;
          break;
        }
      }
    }
    if (tag.empty()) tag = "NN";
    tagged.emplace_back(token, std::move(tag));
    sentence_start = token == "." || token == "!" || token == "?";
  }
  return tagged;
}

}  // namespace surveykw
