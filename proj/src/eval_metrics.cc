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

#include "surveykw/eval_metrics.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "surveykw/corpus_io.h"
#include "surveykw/csv.h"
#include "surveykw/errors.h"
#include "surveykw/porter_stemmer.h"
#include "surveykw/statistics.h"

namespace surveykw {
namespace {

using nlohmann::json;

bool IsDigits(std::string_view text) {
  return !text.empty() && std::all_of(text.begin(), text.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
}

KeywordSet StemAll(const std::set<std::string>& keywords) {
  KeywordSet stemmed;
  for (const std::string& keyword : keywords) {
    std::string stem = StemKeyword(keyword).stemmed;
    if (!stem.empty()) stemmed.insert(std::move(stem));
  }
  return stemmed;
}

size_t IntersectionSize(const KeywordSet& a, const KeywordSet& b) {
  size_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

// Fields in report order, shared by the JSON writer and reader.
struct OptionalField {
  const char* name;
  std::optional<double> EvalReport::*member;
};

constexpr OptionalField kOptionalFields[] = {
    {"coverage_pct", &EvalReport::coverage_pct},
    {"precision", &EvalReport::precision},
    {"recall", &EvalReport::recall},
    {"f1", &EvalReport::f1},
    {"spearman_rho", &EvalReport::spearman_rho},
    {"spearman_p", &EvalReport::spearman_p},
    {"jaccard_min", &EvalReport::jaccard_min},
    {"jaccard_max", &EvalReport::jaccard_max},
    {"jaccard_mean", &EvalReport::jaccard_mean},
    {"jaccard_std", &EvalReport::jaccard_std},
};

struct IntField {
  const char* name;
  int EvalReport::*member;
};

constexpr IntField kIntFields[] = {
    {"correct_types", &EvalReport::correct_types},
    {"spearman_n", &EvalReport::spearman_n},
    {"n_responses", &EvalReport::n_responses},
    {"n_system_types", &EvalReport::n_system_types},
    {"n_gold_types", &EvalReport::n_gold_types},
};

std::string FormatValue(const std::optional<double>& value) {
  if (!value) return "n/a";
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.4f", *value);
  return buffer;
}

}  // namespace

StemmedKeyword StemKeyword(std::string_view keyword) {
  StemmedKeyword result;
  result.original = std::string(keyword);
  std::istringstream words{AsciiLower(keyword)};
  std::string word;
  while (words >> word) {
    if (!result.stemmed.empty()) result.stemmed.push_back(' ');
    result.stemmed.append(PorterStem(word));
  }
  return result;
}

GoldStandard GoldStandard::FromSets(KeywordSets per_response) {
  GoldStandard gold;
  gold.per_response = std::move(per_response);
  for (const auto& [id, keywords] : gold.per_response) {
    KeywordSet stemmed = StemAll(keywords);
    gold.all_types.insert(stemmed.begin(), stemmed.end());
  }
  return gold;
}

GoldStandard ParseGoldStandard(std::string_view text) {
  std::vector<CsvRow> rows = ParseDelimited(StripBom(text), ',');
  KeywordSets sets;
  for (size_t i = 0; i < rows.size(); ++i) {
    const CsvRow& row = rows[i];
    if (row.size() == 1 && row[0].empty()) continue;
    std::string id_text(TrimWhitespace(row[0]));
    if (i == 0 && !IsDigits(id_text)) continue;  // header
    if (!IsDigits(id_text)) {
      throw InputError("gold standard record " + std::to_string(i + 1) +
                       ": response_id \"" + row[0] + "\" is not an integer");
    }
    if (row.size() < 2) {
      throw InputError("gold standard record " + std::to_string(i + 1) +
                       ": expected columns response_id,keyword");
    }
    int id = std::stoi(id_text);
    std::set<std::string>& keywords = sets[id];
    std::string keyword(TrimWhitespace(row[1]));
    if (!keyword.empty()) keywords.insert(std::move(keyword));
  }
  return GoldStandard::FromSets(std::move(sets));
}

GoldStandard LoadGoldStandard(const std::filesystem::path& path) {
  return ParseGoldStandard(ReadFileBytes(path));
}

AlignedSets NormalizeSets(const KeywordSets& system, const KeywordSets& gold) {
  std::set<int> ids;
  for (const auto& entry : system) ids.insert(entry.first);
  for (const auto& entry : gold) ids.insert(entry.first);
  AlignedSets aligned;
  for (int id : ids) {
    aligned.ids.push_back(id);
    auto s = system.find(id);
    auto g = gold.find(id);
    aligned.system.push_back(s == system.end() ? KeywordSet()
                                               : StemAll(s->second));
    aligned.gold.push_back(g == gold.end() ? KeywordSet() : StemAll(g->second));
  }
  return aligned;
}

double Coverage(const std::vector<KeywordSet>& sets) {
  if (sets.empty()) throw UndefinedMetric("coverage of an empty corpus");
  size_t covered = std::count_if(sets.begin(), sets.end(),
                                 [](const KeywordSet& s) { return !s.empty(); });
  return 100.0 * static_cast<double>(covered) / static_cast<double>(sets.size());
}

KeywordSet TypesOf(const std::vector<KeywordSet>& sets) {
  KeywordSet types;
  for (const KeywordSet& set : sets) types.insert(set.begin(), set.end());
  return types;
}

std::map<std::string, int> TypeFrequencies(
    const std::vector<KeywordSet>& sets) {
  std::map<std::string, int> frequencies;
  for (const KeywordSet& set : sets) {
    for (const std::string& type : set) ++frequencies[type];
  }
  return frequencies;
}

int TypeLevelCorrect(const KeywordSet& system_types,
                     const KeywordSet& gold_types) {
  return static_cast<int>(IntersectionSize(system_types, gold_types));
}

double F1Score(double precision, double recall) {
  if (precision + recall <= 0) return 0;
  return 2 * precision * recall / (precision + recall);
}

PrecisionRecall MacroPrf(const AlignedSets& sets) {
  double precision_sum = 0;
  double recall_sum = 0;
  int precision_terms = 0;
  int recall_terms = 0;
  for (size_t r = 0; r < sets.size(); ++r) {
    const KeywordSet& s = sets.system[r];
    const KeywordSet& g = sets.gold[r];
    double common = static_cast<double>(IntersectionSize(s, g));
    if (!s.empty()) {
      precision_sum += common / static_cast<double>(s.size());
      ++precision_terms;
    }
    if (!g.empty()) {
      recall_sum += common / static_cast<double>(g.size());
      ++recall_terms;
    }
  }
  if (precision_terms == 0) {
    throw UndefinedMetric("no response has a system keyword");
  }
  if (recall_terms == 0) {
    throw UndefinedMetric("no response has a gold keyword");
  }
  PrecisionRecall result;
  result.precision = precision_sum / precision_terms;
  result.recall = recall_sum / recall_terms;
  result.f1 = F1Score(result.precision, result.recall);
  return result;
}

std::vector<double> AverageRanks(const std::vector<double>& values) {
  std::vector<size_t> order(values.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  size_t i = 0;
  while (i < order.size()) {
    size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) {
      ++j;
    }
    // Positions i..j (0-based) share the mean of ranks i+1..j+1.
    double rank = (static_cast<double>(i + j) + 2.0) / 2.0;
    for (size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

SpearmanResult Spearman(const std::map<std::string, int>& freq_gold,
                        const std::map<std::string, int>& freq_system) {
  std::vector<double> x;
  std::vector<double> y;
  for (const auto& [type, count] : freq_gold) {
    auto it = freq_system.find(type);
    if (it == freq_system.end()) continue;
    x.push_back(count);
    y.push_back(it->second);
  }
  const int n = static_cast<int>(x.size());
  if (n < 3) {
    throw UndefinedMetric("insufficient overlap: " + std::to_string(n) +
                          " shared keyword types, need at least 3");
  }
  std::vector<double> rx = AverageRanks(x);
  std::vector<double> ry = AverageRanks(y);
  double mean_x = 0;
  double mean_y = 0;
  for (int i = 0; i < n; ++i) {
    mean_x += rx[i];
    mean_y += ry[i];
  }
  mean_x /= n;
  mean_y /= n;
  double sxx = 0;
  double syy = 0;
  double sxy = 0;
  for (int i = 0; i < n; ++i) {
    double dx = rx[i] - mean_x;
    double dy = ry[i] - mean_y;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0 || syy == 0) {
    throw UndefinedMetric("zero rank variance: all shared types have equal "
                          "frequency on one side");
  }
  SpearmanResult result;
  result.n = n;
  result.rho = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
  double denominator = 1.0 - result.rho * result.rho;
  if (denominator <= 0) {
    result.p = 0;
  } else {
    double t = result.rho * std::sqrt((n - 2) / denominator);
    result.p = StudentTTwoSidedP(t, n - 2);
  }
  return result;
}

double Jaccard(const KeywordSet& a, const KeywordSet& b) {
  size_t common = IntersectionSize(a, b);
  size_t united = a.size() + b.size() - common;
  if (united == 0) throw UndefinedMetric("Jaccard of two empty sets");
  return static_cast<double>(common) / static_cast<double>(united);
}

JaccardSummary JaccardDistribution(const AlignedSets& sets) {
  JaccardSummary summary;
  for (size_t r = 0; r < sets.size(); ++r) {
    if (sets.gold[r].empty()) continue;
    summary.per_response.emplace_back(sets.ids[r],
                                      Jaccard(sets.system[r], sets.gold[r]));
  }
  if (summary.per_response.empty()) {
    throw UndefinedMetric("every gold set is empty");
  }
  const double n = static_cast<double>(summary.per_response.size());
  summary.min = summary.max = summary.per_response.front().second;
  double sum = 0;
  for (const auto& [id, j] : summary.per_response) {
    summary.min = std::min(summary.min, j);
    summary.max = std::max(summary.max, j);
    sum += j;
  }
  summary.mean = std::clamp(sum / n, summary.min, summary.max);
  double squares = 0;
  for (const auto& [id, j] : summary.per_response) {
    squares += (j - summary.mean) * (j - summary.mean);
  }
  summary.std = std::sqrt(squares / n);
  return summary;
}

bool EvalReport::operator==(const EvalReport& other) const {
  for (const OptionalField& field : kOptionalFields) {
    if (this->*field.member != other.*field.member) return false;
  }
  for (const IntField& field : kIntFields) {
    if (this->*field.member != other.*field.member) return false;
  }
  return absent_reasons == other.absent_reasons;
}

EvalReport Evaluate(const KeywordSets& system, const GoldStandard& gold) {
  bool overlap = std::any_of(system.begin(), system.end(), [&](const auto& e) {
    return gold.per_response.count(e.first) > 0;
  });
  if (!overlap) {
    throw InputError("system and gold files share no response ids");
  }

  AlignedSets sets = NormalizeSets(system, gold.per_response);
  KeywordSet system_types = TypesOf(sets.system);
  KeywordSet gold_types = TypesOf(sets.gold);

  EvalReport report;
  report.n_responses = static_cast<int>(sets.size());
  report.n_system_types = static_cast<int>(system_types.size());
  report.n_gold_types = static_cast<int>(gold_types.size());
  report.correct_types = TypeLevelCorrect(system_types, gold_types);
  report.coverage_pct = Coverage(sets.system);

  try {
    PrecisionRecall prf = MacroPrf(sets);
    report.precision = prf.precision;
    report.recall = prf.recall;
    report.f1 = prf.f1;
  } catch (const UndefinedMetric& e) {
    for (const char* name : {"precision", "recall", "f1"}) {
      report.absent_reasons[name] = e.what();
    }
  }

  std::map<std::string, int> freq_gold = TypeFrequencies(sets.gold);
  std::map<std::string, int> freq_system = TypeFrequencies(sets.system);
  // n counts shared types even when rho is undefined.
  report.spearman_n = static_cast<int>(std::count_if(
      freq_gold.begin(), freq_gold.end(),
      [&](const auto& entry) { return freq_system.count(entry.first) > 0; }));
  try {
    SpearmanResult spearman = Spearman(freq_gold, freq_system);
    report.spearman_rho = spearman.rho;
    report.spearman_p = spearman.p;
  } catch (const UndefinedMetric& e) {
    report.absent_reasons["spearman_rho"] = e.what();
    report.absent_reasons["spearman_p"] = e.what();
  }

  try {
    JaccardSummary jaccard = JaccardDistribution(sets);
    report.jaccard_min = jaccard.min;
    report.jaccard_max = jaccard.max;
    report.jaccard_mean = jaccard.mean;
    report.jaccard_std = jaccard.std;
    report.jaccard_values = std::move(jaccard.per_response);
  } catch (const UndefinedMetric& e) {
    for (const char* name :
         {"jaccard_min", "jaccard_max", "jaccard_mean", "jaccard_std"}) {
      report.absent_reasons[name] = e.what();
    }
  }
  return report;
}

double RoundReportValue(double value) {
  double rounded = std::round(value * 1e4) / 1e4;
  return rounded == 0 ? 0.0 : rounded;  // no negative zero
}

std::string ReportToJson(const EvalReport& report) {
  json doc = json::object();
  for (const OptionalField& field : kOptionalFields) {
    const std::optional<double>& value = report.*field.member;
    doc[field.name] = value ? json(RoundReportValue(*value)) : json(nullptr);
  }
  for (const IntField& field : kIntFields) {
    doc[field.name] = report.*field.member;
  }
  doc["absent_reasons"] = report.absent_reasons;
  return doc.dump(2) + "\n";
}

EvalReport ReportFromJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
  EvalReport report;
  try {
    for (const OptionalField& field : kOptionalFields) {
      const json& value = doc.at(field.name);
      if (!value.is_null()) report.*field.member = value.get<double>();
    }
    for (const IntField& field : kIntFields) {
      report.*field.member = doc.at(field.name).get<int>();
    }
    report.absent_reasons =
        doc.at("absent_reasons").get<std::map<std::string, std::string>>();
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
  return report;
}

void WriteReport(const EvalReport& report, const std::filesystem::path& path) {
  WriteFileBytes(path, ReportToJson(report));
}

EvalReport ReadReport(const std::filesystem::path& path) {
  return ReportFromJson(ReadFileBytes(path));
}

void WriteJaccardCsv(const EvalReport& report,
                     const std::filesystem::path& path) {
  std::string out;
  AppendRow({"response_id", "jaccard"}, ',', &out);
  char buffer[32];
  for (const auto& [id, value] : report.jaccard_values) {
    std::snprintf(buffer, sizeof(buffer), "%.4f", RoundReportValue(value));
    AppendRow({std::to_string(id), buffer}, ',', &out);
  }
  WriteFileBytes(path, out);
}

std::string FormatReportSummary(const EvalReport& report) {
  std::ostringstream out;
  out << "responses:      " << report.n_responses << "\n"
      << "coverage:       " << FormatValue(report.coverage_pct) << "%\n"
      << "correct types:  " << report.correct_types << " (system "
      << report.n_system_types << ", gold " << report.n_gold_types << ")\n"
      << "precision:      " << FormatValue(report.precision) << "\n"
      << "recall:         " << FormatValue(report.recall) << "\n"
      << "f1:             " << FormatValue(report.f1) << "\n"
      << "spearman rho:   " << FormatValue(report.spearman_rho)
      << " (p=" << FormatValue(report.spearman_p)
      << ", n=" << report.spearman_n << ")\n"
      << "jaccard:        min " << FormatValue(report.jaccard_min) << ", max "
      << FormatValue(report.jaccard_max) << ", mean "
      << FormatValue(report.jaccard_mean) << ", std "
      << FormatValue(report.jaccard_std) << "\n";
  for (const auto& [field, reason] : report.absent_reasons) {
    out << "absent " << field << ": " << reason << "\n";
  }
  return out.str();
}

}  // namespace surveykw
