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

// Lexicon plus ordered-suffix-rule part-of-speech tagger over the Penn
// Treebank tag set.
//
// Lookup order for a token:
//   1. the lexicon entry spelled exactly like the token,
//   2. the lexicon entry for its lowercase form,
//   3. the first matching suffix rule.
// Rule lists always end with a default rule, so tagging is total.

#ifndef SURVEYKW_POS_TAGGER_H_
#define SURVEYKW_POS_TAGGER_H_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace surveykw {

// The fixed Penn Treebank inventory accepted in lexicons and rules.
const std::vector<std::string>& PennTags();
bool IsPennTag(std::string_view tag);

struct SuffixRule {
  enum class Kind {
    kSymbol,       // no letter or digit
    kNumeric,      // digits with , . : / % - separators
    kSuffix,       // lowercase token ends with `suffix` but not `unless`
    kCapitalized,  // capitalized and not at a sentence start
    kDefault,      // always matches
  };

  Kind kind = Kind::kDefault;
  std::string suffix;
  std::string unless;
  std::string tag;

  // `sentence_start` is true for the first token and for tokens following
  // '.', '!' or '?'.
  bool Matches(std::string_view token, bool sentence_start) const;
};

class TaggerResources {
 public:
  TaggerResources() = default;

  // Reads `word<TAB>TAG` lexicon lines and `kind<TAB>arg<TAB>TAG` rule lines.
  // Throws InputError on unknown tags or a rule list without a final
  // default rule.
  static TaggerResources Load(const std::filesystem::path& lexicon_path,
                              const std::filesystem::path& rules_path);
  static TaggerResources Parse(std::string_view lexicon_text,
                               std::string_view rules_text);

  // The built-in rule order used when no rule file is supplied.
  static std::vector<SuffixRule> DefaultRules();

  // Later entries for the same spelling replace earlier ones.
  void AddLexiconEntry(std::string_view word, std::string_view tag);
  void SetRules(std::vector<SuffixRule> rules);

  // Exact-case entry, else the lowercase layer. Returns nullptr on a miss.
  const std::string* LookupLexicon(std::string_view word) const;

  const std::vector<SuffixRule>& rules() const { return rules_; }
  size_t lexicon_size() const { return exact_.size(); }

 private:
  std::unordered_map<std::string, std::string> exact_;
  std::unordered_map<std::string, std::string> lowercase_;
  std::vector<SuffixRule> rules_ = DefaultRules();
};

using TaggedWord = std::pair<std::string, std::string>;

// Tags every token; output length always equals input length.
std::vector<TaggedWord> PosTag(std::span<const std::string> tokens,
                               const TaggerResources& resources);

}  // namespace surveykw

#endif  // SURVEYKW_POS_TAGGER_H_
