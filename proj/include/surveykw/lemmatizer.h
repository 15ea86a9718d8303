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

// WordNet "morphy"-style lemmatizer: per word class exception lists,
// ordered suffix-detachment rules and a dictionary of known lemmas.

#ifndef SURVEYKW_LEMMATIZER_H_
#define SURVEYKW_LEMMATIZER_H_

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace surveykw {

enum class PosClass { kNoun = 0, kVerb = 1, kAdjective = 2, kOther = 3 };

// N* -> noun, V* -> verb, J* -> adjective, anything else -> other.
PosClass PosClassOf(std::string_view penn_tag);

class LemmaResources {
 public:
  struct Detachment {
    std::string suffix;
    std::string replacement;
  };

  LemmaResources() = default;

  // Reads `detachment_rules.tsv` and, for each of noun/verb/adj, the
  // `<class>.exc` exception file and the `<class>.dict` lemma list.
  static LemmaResources LoadFromDirectory(const std::filesystem::path& dir);

  // `class<TAB>suffix<TAB>replacement` lines, order significant.
  void ParseDetachmentRules(std::string_view text);
  // `inflected lemma [lemma...]` lines; the first lemma is used.
  void ParseExceptions(PosClass pos, std::string_view text);
  // One lemma per line.
  void ParseDictionary(PosClass pos, std::string_view text);

  void AddRule(PosClass pos, std::string suffix, std::string replacement);
  void AddException(PosClass pos, std::string inflected, std::string lemma);
  void AddLemma(PosClass pos, std::string lemma);

  const std::vector<Detachment>& rules(PosClass pos) const;
  const std::string* FindException(PosClass pos, std::string_view word) const;
  bool IsKnownLemma(PosClass pos, std::string_view word) const;

 private:
  static size_t Slot(PosClass pos);

  std::array<std::vector<Detachment>, 3> rules_;
  std::array<std::unordered_map<std::string, std::string>, 3> exceptions_;
  std::array<std::unordered_set<std::string>, 3> dictionary_;
};

// Lemma of `surface` under `penn_tag`, always lowercase and non-empty for
// non-empty input.
//
//   1. An exception entry wins outright.
//   2. Otherwise the lowercased surface and every single-rule detachment
//      candidate are checked against the lemma dictionary; the shortest
//      known form wins (earliest on ties).
//   3. With no known form the lowercased surface is returned.
//   4. Steps 1-3 repeat on the result until it no longer changes, which
//      makes lemmatization idempotent.
// Words of the "other" class are only lowercased.
std::string Lemmatize(std::string_view surface, std::string_view penn_tag,
                      const LemmaResources& resources);

}  // namespace surveykw

#endif  // SURVEYKW_LEMMATIZER_H_
