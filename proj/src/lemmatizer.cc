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

#include "surveykw/lemmatizer.h"

#include <set>

#include "surveykw/corpus_io.h"
#include "surveykw/csv.h"
#include "surveykw/errors.h"
#include "surveykw/text_cleaning.h"

namespace surveykw {
namespace {

constexpr std::array<std::pair<PosClass, const char*>, 3> kClassNames = {{
    {PosClass::kNoun, "noun"},
    {PosClass::kVerb, "verb"},
    {PosClass::kAdjective, "adj"},
}};

PosClass ClassFromName(std::string_view name, int line_number) {
  for (const auto& [pos, class_name] : kClassNames) {
    if (name == class_name) return pos;
  }
  throw InputError("detachment rule line " + std::to_string(line_number) +
                   ": unknown word class " + std::string(name));
}

template <typename Fn>
void ForEachLine(std::string_view text, Fn&& fn) {
  text = StripBom(text);
  int number = 0;
  while (!text.empty()) {
    size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view()
                                         : text.substr(eol + 1);
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (TrimWhitespace(line).empty() || line.front() == '#') continue;
    fn(line, number);
  }
}

}  // namespace

PosClass PosClassOf(std::string_view penn_tag) {
  if (penn_tag.empty()) return PosClass::kOther;
  switch (penn_tag.front()) {
    case 'N':
      return PosClass::kNoun;
    case 'V':
      return PosClass::kVerb;
    case 'J':
      return PosClass::kAdjective;
    default:
      return PosClass::kOther;
  }
}

size_t LemmaResources::Slot(PosClass pos) {
  if (pos == PosClass::kOther) {
    throw InvariantError("lemma tables exist only for noun/verb/adj");
  }
  return static_cast<size_t>(pos);
}

void LemmaResources::AddRule(PosClass pos, std::string suffix,
                             std::string replacement) {
  rules_[Slot(pos)].push_back({std::move(suffix), std::move(replacement)});
}

void LemmaResources::AddException(PosClass pos, std::string inflected,
                                  std::string lemma) {
  inflected = AsciiLower(inflected);
  lemma = AsciiLower(lemma);
  if (inflected.empty() || lemma.empty()) return;
  // Exception targets are lemmas in their own right.
  dictionary_[Slot(pos)].insert(lemma);
  exceptions_[Slot(pos)].emplace(std::move(inflected), std::move(lemma));
}

void LemmaResources::AddLemma(PosClass pos, std::string lemma) {
  lemma = AsciiLower(lemma);
  if (!lemma.empty()) dictionary_[Slot(pos)].insert(std::move(lemma));
}

void LemmaResources::ParseDetachmentRules(std::string_view text) {
  ForEachLine(text, [&](std::string_view line, int number) {
    size_t first = line.find('\t');
    size_t second = first == std::string_view::npos
                        ? std::string_view::npos
                        : line.find('\t', first + 1);
    if (second == std::string_view::npos) {
      throw InputError("detachment rule line " + std::to_string(number) +
                       ": expected class<TAB>suffix<TAB>replacement");
    }
    PosClass pos = ClassFromName(line.substr(0, first), number);
    std::string suffix(line.substr(first + 1, second - first - 1));
    if (suffix.empty()) {
      throw InputError("detachment rule line " + std::to_string(number) +
                       ": empty suffix");
    }
    AddRule(pos, std::move(suffix), std::string(line.substr(second + 1)));
  });
}

void LemmaResources::ParseExceptions(PosClass pos, std::string_view text) {
  ForEachLine(text, [&](std::string_view line, int number) {
    size_t space = line.find(' ');
    if (space == std::string_view::npos) {
      throw InputError("exception line " + std::to_string(number) +
                       ": expected 'inflected lemma'");
    }
    std::string_view rest = line.substr(space + 1);
    AddException(pos, std::string(line.substr(0, space)),
                 std::string(rest.substr(0, rest.find(' '))));
  });
}

void LemmaResources::ParseDictionary(PosClass pos, std::string_view text) {
  ForEachLine(text, [&](std::string_view line, int) {
    AddLemma(pos, std::string(TrimWhitespace(line)));
  });
}

LemmaResources LemmaResources::LoadFromDirectory(
    const std::filesystem::path& dir) {
  LemmaResources resources;
  try {
    resources.ParseDetachmentRules(
        ReadFileBytes(dir / "detachment_rules.tsv"));
    for (const auto& [pos, name] : kClassNames) {
      std::string base(name);
      resources.ParseExceptions(pos, ReadFileBytes(dir / (base + ".exc")));
      resources.ParseDictionary(pos, ReadFileBytes(dir / (base + ".dict")));
    }
  } catch (const InputError& e) {
    throw InputError("loading lemma resources: " + std::string(e.what()));
  }
  return resources;
}

const std::vector<LemmaResources::Detachment>& LemmaResources::rules(
    PosClass pos) const {
  return rules_[Slot(pos)];
}

const std::string* LemmaResources::FindException(PosClass pos,
                                                 std::string_view word) const {
  const auto& table = exceptions_[Slot(pos)];
  auto it = table.find(std::string(word));
  return it == table.end() ? nullptr : &it->second;
}

bool LemmaResources::IsKnownLemma(PosClass pos, std::string_view word) const {
  const auto& dictionary = dictionary_[Slot(pos)];
  return dictionary.find(std::string(word)) != dictionary.end();
}

namespace {

// One morphological step: exception, else the shortest known form among the
// word and its rule detachments, else the word.
std::string LemmatizeStep(const std::string& word, PosClass pos,
                          const LemmaResources& resources) {
  if (const std::string* lemma = resources.FindException(pos, word)) {
    return *lemma;
  }

  const std::string* best = nullptr;
  std::string best_storage;
  if (resources.IsKnownLemma(pos, word)) {
    best_storage = word;
    best = &best_storage;
  }
  for (const auto& rule : resources.rules(pos)) {
    if (word.size() <= rule.suffix.size()) continue;
    if (word.compare(word.size() - rule.suffix.size(), rule.suffix.size(),
                     rule.suffix) != 0) {
      continue;
    }
    std::string candidate =
        word.substr(0, word.size() - rule.suffix.size()) + rule.replacement;
    if (candidate.empty() || !resources.IsKnownLemma(pos, candidate)) continue;
    if (best == nullptr || candidate.size() < best->size()) {
      best_storage = std::move(candidate);
      best = &best_storage;
    }
  }
  return best != nullptr ? *best : word;
}

}  // namespace

std::string Lemmatize(std::string_view surface, std::string_view penn_tag,
                      const LemmaResources& resources) {
  std::string word = AsciiLower(NormalizeApostrophes(surface));
  PosClass pos = PosClassOf(penn_tag);
  if (pos == PosClass::kOther || word.empty()) return word;
  // Iterate to a fixed point so that doubly inflected forms ("termses" ->
  // "terms" -> "term") reach the same lemma as their base.
  std::set<std::string> seen = {word};
  while (true) {
    std::string next = LemmatizeStep(word, pos, resources);
    if (next == word || !seen.insert(next).second) return next;
    word = std::move(next);
  }
}

}  // namespace surveykw
