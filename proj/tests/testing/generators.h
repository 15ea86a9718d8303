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

// Seeded random generators for property tests, plus fixture locations and a
// scoped temporary directory.

#ifndef SURVEYKW_TESTING_GENERATORS_H_
#define SURVEYKW_TESTING_GENERATORS_H_

#include <cstdint>
#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "surveykw/analyzer.h"

namespace surveykw::testing {

class Generator {
 public:
  explicit Generator(uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi].
  int Uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }
  double UniformReal(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  bool Bernoulli(double p) { return std::bernoulli_distribution(p)(engine_); }

  const std::string& Pick(const std::vector<std::string>& items) {
    return items[Uniform(0, static_cast<int>(items.size()) - 1)];
  }

  // Up to `max_size` distinct items of `universe`.
  std::set<std::string> Subset(const std::vector<std::string>& universe,
                               int max_size);

  // Tokens with random Penn tags from a small vocabulary: noun-heavy so that
  // noun runs of every length occur, with adjectives and function words in
  // between.
  std::vector<Token> TaggedResponse(int max_tokens);

  // Free text built from a fixed vocabulary, with occasional punctuation,
  // capitals and bullets.
  std::string ResponseText(int max_words);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// Shared vocabularies.
const std::vector<std::string>& NounVocabulary();
const std::vector<std::string>& KeywordUniverse();

// tests/data in the source tree and the shipped linguistic data.
std::filesystem::path TestDataDir();
std::filesystem::path LinguisticDataDir();

class ScopedTempDir {
 public:
  ScopedTempDir();
  ~ScopedTempDir();
  ScopedTempDir(const ScopedTempDir&) = delete;
  ScopedTempDir& operator=(const ScopedTempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace surveykw::testing

#endif  // SURVEYKW_TESTING_GENERATORS_H_
