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

// Minimal UTF-8 decoding and character classes used by the text code.
// Invalid sequences decode byte-by-byte and classify as word characters.

#ifndef SURVEYKW_SRC_UTF8_H_
#define SURVEYKW_SRC_UTF8_H_

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace surveykw::utf8 {

struct CodePoint {
  char32_t value;
  size_t length;  // bytes consumed, >= 1
};

inline CodePoint DecodeAt(std::string_view text, size_t pos) {
  auto byte = [&](size_t i) { return static_cast<uint8_t>(text[i]); };
  uint8_t lead = byte(pos);
  if (lead < 0x80) return {lead, 1};
  size_t length = 0;
  char32_t value = 0;
  if ((lead & 0xE0) == 0xC0) {
    length = 2;
    value = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    length = 3;
    value = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    length = 4;
    value = lead & 0x07;
  } else {
    return {0xFFFD, 1};
  }
  if (pos + length > text.size()) return {0xFFFD, 1};
  for (size_t i = 1; i < length; ++i) {
    uint8_t cont = byte(pos + i);
    if ((cont & 0xC0) != 0x80) return {0xFFFD, 1};
    value = (value << 6) | (cont & 0x3F);
  }
  return {value, length};
}

inline bool IsSpace(char32_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v' || c == 0xA0 || (c >= 0x2000 && c <= 0x200A) ||
         c == 0x2028 || c == 0x2029 || c == 0x202F || c == 0x205F ||
         c == 0x3000;
}

// Punctuation and symbols: never part of a word's edges.
inline bool IsPunct(char32_t c) {
  if (c < 0x80) {
    bool alnum = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
                 (c >= 'A' && c <= 'Z');
    return !alnum && !IsSpace(c) && c >= 0x21;
  }
  if (c >= 0xA1 && c <= 0xBF) {
    // Feminine/masculine ordinals, micro sign, superscripts and fractions
    // behave like word characters.
    switch (c) {
      case 0xAA: case 0xB2: case 0xB3: case 0xB5: case 0xB9: case 0xBA:
      case 0xBC: case 0xBD: case 0xBE:
        return false;
      default:
        return true;
    }
  }
  if (c == 0xD7 || c == 0xF7) return true;
  if (c >= 0x200B && c <= 0x200F) return true;
  if (c >= 0x2010 && c <= 0x2027) return true;
  if (c >= 0x2030 && c <= 0x205E) return true;
  if (c >= 0x20A0 && c <= 0x20CF) return true;
  if (c >= 0x2190 && c <= 0x2BFF) return true;
  if (c >= 0x3001 && c <= 0x303F) return true;
  if (c >= 0xFE00 && c <= 0xFE0F) return true;
  if (c >= 0x1F000 && c <= 0x1FAFF) return true;
  return false;
}

inline bool IsWordChar(char32_t c) { return !IsSpace(c) && !IsPunct(c); }

}  // namespace surveykw::utf8

#endif  // SURVEYKW_SRC_UTF8_H_
