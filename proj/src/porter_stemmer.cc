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

#include "surveykw/porter_stemmer.h"

#include <algorithm>

namespace surveykw {
namespace {

// Working state for one word. The stem under consideration is b_[0..k_];
// j_ marks the end of the stem left after removing a matched suffix.
class Stemmer {
 public:
  explicit Stemmer(std::string_view word)
      : b_(word), k_(static_cast<int>(word.size()) - 1) {}

  std::string Run() {
    if (k_ <= 1) return b_;
    Step1ab();
    if (k_ > 0) {
      Step1c();
      Step2();
      Step3();
      Step4();
      Step5();
    }
    return b_.substr(0, k_ + 1);
  }

 private:
  bool IsConsonant(int i) const {
    switch (b_[i]) {
      case 'a': case 'e': case 'i': case 'o': case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !IsConsonant(i - 1);
      default:
        return true;
    }
  }

  // Number of VC sequences in b_[0..j_]: [C](VC)^m[V].
  int Measure() const {
    int n = 0;
    int i = 0;
    while (true) {
      if (i > j_) return n;
      if (!IsConsonant(i)) break;
      ++i;
    }
    ++i;
    while (true) {
      while (true) {
        if (i > j_) return n;
        if (IsConsonant(i)) break;
        ++i;
      }
      ++i;
      ++n;
      while (true) {
        if (i > j_) return n;
        if (!IsConsonant(i)) break;
        ++i;
      }
      ++i;
    }
  }

  bool VowelInStem() const {
    for (int i = 0; i <= j_; ++i) {
      if (!IsConsonant(i)) return true;
    }
    return false;
  }

  bool DoubleConsonant(int j) const {
    if (j < 1) return false;
    if (b_[j] != b_[j - 1]) return false;
    return IsConsonant(j);
  }

  // consonant-vowel-consonant ending at i, where the last consonant is not
  // w, x or y.
  bool Cvc(int i) const {
    if (i < 2 || !IsConsonant(i) || IsConsonant(i - 1) || !IsConsonant(i - 2)) {
      return false;
    }
    char ch = b_[i];
    return ch != 'w' && ch != 'x' && ch != 'y';
  }

  bool Ends(std::string_view s) {
    int length = static_cast<int>(s.size());
    if (length > k_ + 1) return false;
    if (std::string_view(b_).substr(k_ - length + 1, length) != s) {
      return false;
    }
    j_ = k_ - length;
    return true;
  }

  void SetTo(std::string_view s) {
    b_.replace(j_ + 1, std::string::npos, s);
    k_ = j_ + static_cast<int>(s.size());
  }

  void ReplaceIfMeasured(std::string_view s) {
    if (Measure() > 0) SetTo(s);
  }

  // Plurals and -ed / -ing.
  void Step1ab() {
    if (b_[k_] == 's') {
      if (Ends("sses")) {
        k_ -= 2;
      } else if (Ends("ies")) {
        SetTo("i");
      } else if (b_[k_ - 1] != 's') {
        --k_;
      }
    }
    if (Ends("eed")) {
      if (Measure() > 0) --k_;
    } else if ((Ends("ed") || Ends("ing")) && VowelInStem()) {
      k_ = j_;
      if (Ends("at")) {
        SetTo("ate");
      } else if (Ends("bl")) {
        SetTo("ble");
      } else if (Ends("iz")) {
        SetTo("ize");
      } else if (DoubleConsonant(k_)) {
        --k_;
        char ch = b_[k_];
        if (ch == 'l' || ch == 's' || ch == 'z') ++k_;
      } else if (Measure() == 1 && Cvc(k_)) {
        SetTo("e");
      }
    }
    b_.resize(k_ + 1);
  }

  // Terminal y to i when there is another vowel in the stem.
  void Step1c() {
    if (Ends("y") && VowelInStem()) b_[k_] = 'i';
  }

  // Maps double suffixes to single ones.
  void Step2() {
    if (k_ < 1) return;
    struct Rule {
      std::string_view from;
      std::string_view to;
    };
    static constexpr Rule kA[] = {{"ational", "ate"}, {"tional", "tion"}};
    static constexpr Rule kC[] = {{"enci", "ence"}, {"anci", "ance"}};
    static constexpr Rule kE[] = {{"izer", "ize"}};
    static constexpr Rule kL[] = {{"bli", "ble"},
                                  {"alli", "al"},
                                  {"entli", "ent"},
                                  {"eli", "e"},
                                  {"ousli", "ous"}};
    static constexpr Rule kO[] = {
        {"ization", "ize"}, {"ation", "ate"}, {"ator", "ate"}};
    static constexpr Rule kS[] = {{"alism", "al"},
                                  {"iveness", "ive"},
                                  {"fulness", "ful"},
                                  {"ousness", "ous"}};
    static constexpr Rule kT[] = {
        {"aliti", "al"}, {"iviti", "ive"}, {"biliti", "ble"}};
    static constexpr Rule kG[] = {{"logi", "log"}};

    auto apply = [&](auto& rules) {
      for (const Rule& rule : rules) {
        if (Ends(rule.from)) {
          ReplaceIfMeasured(rule.to);
          return;
        }
      }
    };
    switch (b_[k_ - 1]) {
      case 'a': apply(kA); break;
      case 'c': apply(kC); break;
      case 'e': apply(kE); break;
      case 'l': apply(kL); break;
      case 'o': apply(kO); break;
      case 's': apply(kS); break;
      case 't': apply(kT); break;
      case 'g': apply(kG); break;
      default: break;
    }
  }

  // -ic-, -full, -ness etc.
  void Step3() {
    struct Rule {
      std::string_view from;
      std::string_view to;
    };
    static constexpr Rule kE[] = {
        {"icate", "ic"}, {"ative", ""}, {"alize", "al"}};
    static constexpr Rule kI[] = {{"iciti", "ic"}};
    static constexpr Rule kL[] = {{"ical", "ic"}, {"ful", ""}};
    static constexpr Rule kS[] = {{"ness", ""}};

    auto apply = [&](auto& rules) {
      for (const Rule& rule : rules) {
        if (Ends(rule.from)) {
          ReplaceIfMeasured(rule.to);
          return;
        }
      }
    };
    switch (b_[k_]) {
      case 'e': apply(kE); break;
      case 'i': apply(kI); break;
      case 'l': apply(kL); break;
      case 's': apply(kS); break;
      default: break;
    }
  }

  // Drops -ant, -ence etc. in context <c>vcvc<v>.
  void Step4() {
    if (k_ < 1) return;
    bool matched = false;
    switch (b_[k_ - 1]) {
      case 'a':
        matched = Ends("al");
        break;
      case 'c':
        matched = Ends("ance") || Ends("ence");
        break;
      case 'e':
        matched = Ends("er");
        break;
      case 'i':
        matched = Ends("ic");
        break;
      case 'l':
        matched = Ends("able") || Ends("ible");
        break;
      case 'n':
        matched = Ends("ant") || Ends("ement") || Ends("ment") || Ends("ent");
        break;
      case 'o':
        matched = (Ends("ion") && j_ >= 0 && (b_[j_] == 's' || b_[j_] == 't')) ||
                  Ends("ou");
        break;
      case 's':
        matched = Ends("ism");
        break;
      case 't':
        matched = Ends("ate") || Ends("iti");
        break;
      case 'u':
        matched = Ends("ous");
        break;
      case 'v':
        matched = Ends("ive");
        break;
      case 'z':
        matched = Ends("ize");
        break;
      default:
        break;
    }
    if (matched && Measure() > 1) k_ = j_;
    b_.resize(k_ + 1);
  }

  // Removes a final -e when m > 1 and changes -ll to -l when m > 1.
  void Step5() {
    j_ = k_;
    if (b_[k_] == 'e') {
      int m = Measure();
      if (m > 1 || (m == 1 && !Cvc(k_ - 1))) --k_;
    }
    // The measure here still covers the original word, final -e included.
    if (b_[k_] == 'l' && DoubleConsonant(k_) && Measure() > 1) --k_;
  }

  std::string b_;
  int k_;
  int j_ = 0;
};

}  // namespace

std::string PorterStem(std::string_view word) {
  bool alphabetic = std::all_of(word.begin(), word.end(),
                                [](char c) { return c >= 'a' && c <= 'z'; });
  if (!alphabetic || word.size() <= 2) return std::string(word);
  return Stemmer(word).Run();
}

}  // namespace surveykw
