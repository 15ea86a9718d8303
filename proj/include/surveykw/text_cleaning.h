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

#ifndef SURVEYKW_TEXT_CLEANING_H_
#define SURVEYKW_TEXT_CLEANING_H_

#include <string>
#include <string_view>
#include <vector>

namespace surveykw {

// Flattens a response to a single line. At the start of every line a bullet
// glyph ('-', '*' followed by a space, or '•') and an enumerator such as "1."
// or "2)" are removed; line breaks become spaces, whitespace runs collapse
// to one space and the result is trimmed.
std::string CleanText(std::string_view raw);

// Splits cleaned text into tokens. Whitespace separates tokens; punctuation
// at either end of a chunk is split off (a run of the same mark stays one
// token); hyphens and apostrophes inside a word stay attached. Known
// abbreviations such as "e.g." are kept whole and a trailing possessive
// "'s" becomes its own token.
std::vector<std::string> Tokenize(std::string_view text);

// True when `token` has no letter or digit.
bool IsPunctuationToken(std::string_view token);

// Replaces typographic apostrophes (U+2018, U+2019) with '\''.
std::string NormalizeApostrophes(std::string_view text);

}  // namespace surveykw

#endif  // SURVEYKW_TEXT_CLEANING_H_
