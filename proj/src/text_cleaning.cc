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

#include <algorithm>
#include <array>

#include "surveykw/corpus_io.h"
#include "utf8.h"

namespace surveykw {
namespace {

// Abbreviations kept as one token even though they end in a period. Dotted
// initialisms ("U.S.", "a.m.") are recognized by shape instead.
constexpr std::array<std::string_view, 14> kAbbreviations = {
    "etc.",  "vs.",  "mr.",   "mrs.", "ms.",  "dr.",  "approx.",
    "incl.", "esp.", "dept.", "co.",  "ltd.", "inc.", "jr."};

// Contractions ending in 's that are not possessives.
constexpr std::array<std::string_view, 11> kNonPossessive = {
    "it's",  "he's",    "she's", "that's", "there's", "what's",
    "let's", "here's",  "who's", "where's", "how's"};

bool IsBulletGlyph(char32_t c) {
  return c == 0x2022 || c == 0x2023 || c == 0x25E6 || c == 0x25AA ||
         c == 0x00B7 || c == 0x25CF;
}

// Removes one leading bullet and one leading enumerator from a line.
std::string_view StripOneListMarker(std::string_view line) {
  auto skip_space = [](std::string_view s) {
    size_t i = 0;
    while (i < s.size()) {
      utf8::CodePoint cp = utf8::DecodeAt(s, i);
      if (!utf8::IsSpace(cp.value)) break;
      i += cp.length;
    }
    return s.substr(i);
  };
  auto space_or_end = [](std::string_view s, size_t i) {
    return i >= s.size() || utf8::IsSpace(utf8::DecodeAt(s, i).value);
  };

  line = skip_space(line);
  if (!line.empty()) {
    utf8::CodePoint first = utf8::DecodeAt(line, 0);
    if (IsBulletGlyph(first.value)) {
      line = skip_space(line.substr(first.length));
    } else if ((first.value == '-' || first.value == '*') &&
               space_or_end(line, 1)) {
      line = skip_space(line.substr(1));
    }
  }

  size_t digits = 0;
  while (digits < line.size() && line[digits] >= '0' && line[digits] <= '9') {
    ++digits;
  }
  if (digits > 0 && digits < line.size() &&
      (line[digits] == '.' || line[digits] == ')') &&
      space_or_end(line, digits + 1)) {
    line = skip_space(line.substr(digits + 1));
  }
  return line;
}

// Strips stacked markers such as "1. - " until none remain.
std::string_view StripListMarkers(std::string_view line) {
  while (true) {
    std::string_view stripped = StripOneListMarker(line);
    if (stripped == line) return line;
    line = stripped;
  }
}

bool IsDottedInitialism(std::string_view word) {
  // ([A-Za-z]\.){2,}
  if (word.size() < 4 || word.size() % 2 != 0) return false;
  for (size_t i = 0; i < word.size(); i += 2) {
    char c = word[i];
    bool letter = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
    if (!letter || word[i + 1] != '.') return false;
  }
  return true;
}

bool IsAbbreviation(std::string_view word) {
  if (IsDottedInitialism(word)) return true;
  std::string lower = AsciiLower(word);
  return std::find(kAbbreviations.begin(), kAbbreviations.end(), lower) !=
         kAbbreviations.end();
}

// Byte length of the possessive clitic at the end of `word`, or 0.
size_t PossessiveLength(std::string_view word) {
  std::string lower = AsciiLower(NormalizeApostrophes(word));
  if (std::find(kNonPossessive.begin(), kNonPossessive.end(), lower) !=
      kNonPossessive.end()) {
    return 0;
  }
  for (std::string_view apostrophe : {"'", "\xE2\x80\x99"}) {
    size_t clitic = apostrophe.size() + 1;
    if (word.size() <= clitic + 1) continue;
    std::string_view tail = word.substr(word.size() - clitic);
    if (tail.substr(0, apostrophe.size()) != apostrophe) continue;
    if (tail.back() != 's' && tail.back() != 'S') continue;
    char before = word[word.size() - clitic - 1];
    bool letter = (before >= 'a' && before <= 'z') ||
                  (before >= 'A' && before <= 'Z') ||
                  static_cast<unsigned char>(before) >= 0x80;
    if (letter) return clitic;
  }
  return 0;
}

void TokenizeChunk(std::string_view chunk, std::vector<std::string>* out) {
  // Leading punctuation, one token per run of an identical mark.
  while (!chunk.empty()) {
    utf8::CodePoint cp = utf8::DecodeAt(chunk, 0);
    if (!utf8::IsPunct(cp.value)) break;
    size_t run = cp.length;
    while (run < chunk.size()) {
      utf8::CodePoint next = utf8::DecodeAt(chunk, run);
      if (next.value != cp.value) break;
      run += next.length;
    }
    out->emplace_back(chunk.substr(0, run));
    chunk.remove_prefix(run);
  }
  if (chunk.empty()) return;

  // Trailing punctuation, peeled from the right until the remainder is a
  // known abbreviation.
  std::vector<std::string_view> trailing;
  while (!chunk.empty() && !IsAbbreviation(chunk)) {
    size_t last = chunk.size() - 1;
    while (last > 0 && (static_cast<uint8_t>(chunk[last]) & 0xC0) == 0x80) {
      --last;
    }
    utf8::CodePoint cp = utf8::DecodeAt(chunk, last);
    if (!utf8::IsPunct(cp.value)) break;
    size_t start = last;
    while (start > 0) {
      size_t prev = start - 1;
      while (prev > 0 && (static_cast<uint8_t>(chunk[prev]) & 0xC0) == 0x80) {
        --prev;
      }
      if (utf8::DecodeAt(chunk, prev).value != cp.value) break;
      start = prev;
    }
    trailing.push_back(chunk.substr(start));
    chunk = chunk.substr(0, start);
  }

  if (!chunk.empty()) {
    size_t clitic = PossessiveLength(chunk);
    if (clitic > 0) {
      out->emplace_back(chunk.substr(0, chunk.size() - clitic));
      out->emplace_back(chunk.substr(chunk.size() - clitic));
    } else {
      out->emplace_back(chunk);
    }
  }
  for (auto it = trailing.rbegin(); it != trailing.rend(); ++it) {
    out->emplace_back(*it);
  }
}

}  // namespace

std::string NormalizeApostrophes(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (size_t i = 0; i < text.size();) {
    utf8::CodePoint cp = utf8::DecodeAt(text, i);
    if (cp.value == 0x2019 || cp.value == 0x2018) {
      out.push_back('\'');
    } else {
      out.append(text.substr(i, cp.length));
    }
    i += cp.length;
  }
  return out;
}

std::string CleanText(std::string_view raw) {
  std::string joined;
  joined.reserve(raw.size());
  while (true) {
    size_t eol = raw.find_first_of("\r\n");
    std::string_view line = raw.substr(0, eol);
    std::string_view stripped = StripListMarkers(line);
    joined.append(stripped);
    if (eol == std::string_view::npos) break;
    joined.push_back(' ');
    size_t skip = (raw[eol] == '\r' && eol + 1 < raw.size() &&
                   raw[eol + 1] == '\n')
                      ? 2
                      : 1;
    raw.remove_prefix(eol + skip);
  }

  std::string out;
  out.reserve(joined.size());
  bool pending_space = false;
  for (size_t i = 0; i < joined.size();) {
    utf8::CodePoint cp = utf8::DecodeAt(joined, i);
    if (utf8::IsSpace(cp.value)) {
      pending_space = !out.empty();
    } else {
      if (pending_space) out.push_back(' ');
      pending_space = false;
      out.append(joined, i, cp.length);
    }
    i += cp.length;
  }
  return out;
}

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size()) {
      utf8::CodePoint cp = utf8::DecodeAt(text, i);
      if (!utf8::IsSpace(cp.value)) break;
      i += cp.length;
    }
    size_t start = i;
    while (i < text.size()) {
      utf8::CodePoint cp = utf8::DecodeAt(text, i);
      if (utf8::IsSpace(cp.value)) break;
      i += cp.length;
    }
    if (i > start) TokenizeChunk(text.substr(start, i - start), &tokens);
  }
  return tokens;
}

bool IsPunctuationToken(std::string_view token) {
  for (size_t i = 0; i < token.size();) {
    utf8::CodePoint cp = utf8::DecodeAt(token, i);
    if (utf8::IsWordChar(cp.value)) return false;
    i += cp.length;
  }
  return true;
}

}  // namespace surveykw
