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

#include "testing/oracles.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace surveykw::testing {
namespace {

int CountCommon(const StringSet& a, const StringSet& b) {
  int common = 0;
  for (const std::string& x : a) {
    for (const std::string& y : b) {
      if (x == y) ++common;
    }
  }
  return common;
}

std::string Join(const std::vector<Token>& tokens, int begin, int end) {
  std::string text;
  for (int i = begin; i < end; ++i) {
    if (i > begin) text += " ";
    text += tokens[i].lemma;
  }
  return text;
}

bool IsNoun(const Token& token) { return token.pos[0] == 'N'; }

bool AllNouns(const std::vector<Token>& tokens, int begin, int end) {
  for (int i = begin; i < end; ++i) {
    if (!IsNoun(tokens[i])) return false;
  }
  return true;
}

// Whether [begin, end) is an admissible candidate span.
bool IsCandidateSpan(const std::vector<Token>& tokens, int begin, int end,
                     bool emit_full_runs) {
  int length = end - begin;
  if (!AllNouns(tokens, begin, end)) return false;
  if (length <= 2) return true;
  if (!emit_full_runs) return false;
  bool starts = begin == 0 || !IsNoun(tokens[begin - 1]);
  bool stops = end == static_cast<int>(tokens.size()) || !IsNoun(tokens[end]);
  return starts && stops;
}

}  // namespace

double OracleCoverage(const std::vector<StringSet>& sets) {
  if (sets.empty()) throw std::domain_error("empty");
  int covered = 0;
  for (const StringSet& set : sets) covered += set.empty() ? 0 : 1;
  return 100.0 * covered / static_cast<double>(sets.size());
}

int OracleCorrectTypes(const std::vector<OracleResponse>& responses) {
  StringSet system;
  StringSet gold;
  for (const OracleResponse& r : responses) {
    system.insert(r.system.begin(), r.system.end());
    gold.insert(r.gold.begin(), r.gold.end());
  }
  return CountCommon(system, gold);
}

OraclePrf OracleMacroPrf(const std::vector<OracleResponse>& responses) {
  std::vector<double> precisions;
  std::vector<double> recalls;
  for (const OracleResponse& r : responses) {
    double common = CountCommon(r.system, r.gold);
    if (!r.system.empty()) precisions.push_back(common / r.system.size());
    if (!r.gold.empty()) recalls.push_back(common / r.gold.size());
  }
  if (precisions.empty() || recalls.empty()) throw std::domain_error("prf");
  double p = 0;
  for (double v : precisions) p += v;
  p /= precisions.size();
  double r = 0;
  for (double v : recalls) r += v;
  r /= recalls.size();
  double f = p + r == 0 ? 0 : 2 * p * r / (p + r);
  return {p, r, f};
}

OracleJaccard OracleJaccardSummary(
    const std::vector<OracleResponse>& responses) {
  OracleJaccard out{};
  for (const OracleResponse& r : responses) {
    if (r.gold.empty()) continue;
    StringSet both = r.system;
    both.insert(r.gold.begin(), r.gold.end());
    out.values.push_back(static_cast<double>(CountCommon(r.system, r.gold)) /
                         both.size());
  }
  if (out.values.empty()) throw std::domain_error("jaccard");
  out.min = *std::min_element(out.values.begin(), out.values.end());
  out.max = *std::max_element(out.values.begin(), out.values.end());
  double sum = 0;
  for (double v : out.values) sum += v;
  out.mean = sum / out.values.size();
  double squares = 0;
  for (double v : out.values) squares += (v - out.mean) * (v - out.mean);
  out.std = std::sqrt(squares / out.values.size());
  return out;
}

double OracleSpearmanRho(const std::vector<double>& x,
                         const std::vector<double>& y) {
  const size_t n = x.size();
  if (n < 3 || y.size() != n) throw std::domain_error("spearman n");
  auto ranks = [n](const std::vector<double>& v) {
    std::vector<double> r(n);
    for (size_t i = 0; i < n; ++i) {
      int less = 0;
      int equal = 0;
      for (size_t j = 0; j < n; ++j) {
        if (v[j] < v[i]) ++less;
        if (v[j] == v[i]) ++equal;
      }
      r[i] = less + (equal + 1) / 2.0;
    }
    return r;
  };
  std::vector<double> rx = ranks(x);
  std::vector<double> ry = ranks(y);
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    sx += rx[i];
    sy += ry[i];
    sxx += rx[i] * rx[i];
    syy += ry[i] * ry[i];
    sxy += rx[i] * ry[i];
  }
  double cov = sxy - sx * sy / n;
  double vx = sxx - sx * sx / n;
  double vy = syy - sy * sy / n;
  if (vx <= 1e-12 || vy <= 1e-12) throw std::domain_error("spearman var");
  return cov / std::sqrt(vx * vy);
}

std::map<std::string, int> OracleFrequencies(
    const std::vector<StringSet>& sets) {
  std::map<std::string, int> out;
  for (const StringSet& set : sets) {
    for (const std::string& type : set) out[type] += 1;
  }
  return out;
}

std::vector<StringSet> OracleExtract(
    const std::vector<std::vector<Token>>& corpus,
    const OracleKeywordOptions& options) {
  std::map<std::string, int> occurrences;
  for (const auto& tokens : corpus) {
    int n = static_cast<int>(tokens.size());
    for (int b = 0; b < n; ++b) {
      for (int e = b + 1; e <= n; ++e) {
        if (IsCandidateSpan(tokens, b, e, options.emit_full_runs)) {
          occurrences[Join(tokens, b, e)] += 1;
        }
      }
    }
  }
  std::vector<StringSet> out;
  for (const auto& tokens : corpus) {
    StringSet keywords;
    int n = static_cast<int>(tokens.size());
    for (int b = 0; b < n; ++b) {
      for (int e = b + 1; e <= n; ++e) {
        if (!IsCandidateSpan(tokens, b, e, options.emit_full_runs)) continue;
        std::string text = Join(tokens, b, e);
        int strength = e - b;
        if (strength < options.no_limit_strength &&
            occurrences[text] < options.min_single_occur) {
          continue;
        }
        bool excluded = options.exclusions.count(text) > 0;
        for (int i = b; i < e; ++i) {
          if (options.exclusions.count(tokens[i].lemma)) excluded = true;
        }
        if (!excluded) keywords.insert(text);
      }
    }
    out.push_back(keywords);
  }
  return out;
}

std::vector<StringSet> OracleTopK(
    const std::vector<std::vector<std::string>>& terms, int k) {
  const double n_docs = static_cast<double>(terms.size());
  std::map<std::string, int> df;
  for (const auto& doc : terms) {
    StringSet distinct(doc.begin(), doc.end());
    for (const std::string& t : distinct) df[t] += 1;
  }
  std::vector<StringSet> out;
  for (const auto& doc : terms) {
    std::vector<std::pair<double, std::string>> scored;
    StringSet distinct(doc.begin(), doc.end());
    for (const std::string& t : distinct) {
      double tf = static_cast<double>(std::count(doc.begin(), doc.end(), t));
      scored.push_back({-tf * std::log(n_docs / df[t]), t});
    }
    std::sort(scored.begin(), scored.end());
    StringSet top;
    for (int i = 0; i < k && i < static_cast<int>(scored.size()); ++i) {
      top.insert(scored[i].second);
    }
    out.push_back(top);
  }
  return out;
}

}  // namespace surveykw::testing
