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

// Gold-standard evaluation: stem-normalized set matching, coverage,
// precision/recall/F1, Spearman rank correlation and Jaccard similarity.
//
// Keywords are compared as whole strings after lowercasing and Porter
// stemming each word, so "training centres" matches "training centre" but
// "technology" does not match "new technology".

#ifndef SURVEYKW_EVAL_METRICS_H_
#define SURVEYKW_EVAL_METRICS_H_

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace surveykw {

// response_id -> keyword strings.
using KeywordSets = std::map<int, std::set<std::string>>;
using KeywordSet = std::set<std::string>;

struct StemmedKeyword {
  std::string original;
  std::string stemmed;
};

// Lowercases, splits on whitespace and Porter-stems each word.
StemmedKeyword StemKeyword(std::string_view keyword);

struct GoldStandard {
  KeywordSets per_response;
  KeywordSet all_types;  // union of stemmed per_response sets

  static GoldStandard FromSets(KeywordSets per_response);
};

// CSV with columns response_id, keyword. A header row is optional; rows with
// an empty keyword register the response with no keywords.
GoldStandard ParseGoldStandard(std::string_view text);
GoldStandard LoadGoldStandard(const std::filesystem::path& path);

// Per-response stemmed sets over the union of both id spaces, in id order.
struct AlignedSets {
  std::vector<int> ids;
  std::vector<KeywordSet> system;
  std::vector<KeywordSet> gold;

  size_t size() const { return ids.size(); }
};

AlignedSets NormalizeSets(const KeywordSets& system, const KeywordSets& gold);

// Percentage of responses with a non-empty set. Throws UndefinedMetric for
// an empty corpus.
double Coverage(const std::vector<KeywordSet>& sets);

// Union of all per-response sets.
KeywordSet TypesOf(const std::vector<KeywordSet>& sets);

// Number of types per response set, i.e. response frequency.
std::map<std::string, int> TypeFrequencies(const std::vector<KeywordSet>& sets);

int TypeLevelCorrect(const KeywordSet& system_types,
                     const KeywordSet& gold_types);

struct PrecisionRecall {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
};

// Harmonic mean; 0 when both are 0.
double F1Score(double precision, double recall);

// Macro averages: precision over responses with a non-empty system set,
// recall over responses with a non-empty gold set. Throws UndefinedMetric
// when either average has no terms.
PrecisionRecall MacroPrf(const AlignedSets& sets);

// 1-based ranks, tied values sharing their average rank.
std::vector<double> AverageRanks(const std::vector<double>& values);

struct SpearmanResult {
  double rho = 0;
  double p = 1;
  int n = 0;
};

// Rank correlation over the types present in both maps. Throws
// UndefinedMetric when fewer than 3 types overlap or either side has
// constant ranks.
SpearmanResult Spearman(const std::map<std::string, int>& freq_gold,
                        const std::map<std::string, int>& freq_system);

struct JaccardSummary {
  std::vector<std::pair<int, double>> per_response;  // (response_id, J)
  double min = 0;
  double max = 0;
  double mean = 0;
  double std = 0;  // population standard deviation
};

double Jaccard(const KeywordSet& a, const KeywordSet& b);

// Jaccard per response, skipping responses whose gold set is empty. Throws
// UndefinedMetric when every gold set is empty.
JaccardSummary JaccardDistribution(const AlignedSets& sets);

// Every numeric field is absent when its metric is undefined; the reason is
// then recorded in absent_reasons under the field name.
struct EvalReport {
  std::optional<double> coverage_pct;
  int correct_types = 0;
  std::optional<double> precision;
  std::optional<double> recall;
  std::optional<double> f1;
  std::optional<double> spearman_rho;
  std::optional<double> spearman_p;
  int spearman_n = 0;
  std::optional<double> jaccard_min;
  std::optional<double> jaccard_max;
  std::optional<double> jaccard_mean;
  std::optional<double> jaccard_std;
  int n_responses = 0;
  int n_system_types = 0;
  int n_gold_types = 0;
  std::map<std::string, std::string> absent_reasons;

  // Per-response Jaccard values; not part of the JSON report.
  std::vector<std::pair<int, double>> jaccard_values;

  bool operator==(const EvalReport& other) const;
};

// Runs every metric. Throws InputError when the system and gold id spaces
// do not overlap.
EvalReport Evaluate(const KeywordSets& system, const GoldStandard& gold);

// Rounds to 4 decimals, the precision used in written reports.
double RoundReportValue(double value);

std::string ReportToJson(const EvalReport& report);
EvalReport ReportFromJson(std::string_view json);
void WriteReport(const EvalReport& report, const std::filesystem::path& path);
EvalReport ReadReport(const std::filesystem::path& path);

// CSV "response_id,jaccard" with one row per included response.
void WriteJaccardCsv(const EvalReport& report,
                     const std::filesystem::path& path);

// Multi-line human-readable summary.
std::string FormatReportSummary(const EvalReport& report);

}  // namespace surveykw

#endif  // SURVEYKW_EVAL_METRICS_H_
