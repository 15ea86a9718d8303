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

#include "surveykw/cli.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <thread>

#include "CLI11.hpp"
#include "surveykw/analyzer.h"
#include "surveykw/corpus_io.h"
#include "surveykw/csv.h"
#include "surveykw/errors.h"
#include "surveykw/eval_metrics.h"
#include "surveykw/keyword_extractor.h"
#include "surveykw/manifest.h"
#include "surveykw/output_files.h"
#include "surveykw/tfidf.h"

namespace surveykw {
namespace {

namespace fs = std::filesystem;

struct FlagSpec {
  const char* name;
  const char* help;
  bool boolean = false;
};

const FlagSpec kCorpusFlags[] = {
    {"input", "Responses file (.csv or .tsv)"},
    {"text-col", "Response text column: header name or 0-based index"},
    {"acronyms", "File of acronyms to exclude, one per line"},
    {"target-word", "Survey target word to exclude"},
    {"org-name", "Organization name to exclude"},
    {"out-dir", "Output directory"},
    {"workers", "Worker threads (output does not depend on it)"},
    {"data-dir", "Directory with lexicon, lemma tables and stopwords"},
};

const FlagSpec kExtractFlags[] = {
    {"min-single-occur", "Minimum corpus occurrences of single-word keywords"},
    {"no-limit-strength", "Keywords with at least this many words are kept "
                          "regardless of frequency"},
    {"emit-full-runs", "Also emit whole noun runs of three or more nouns",
     true},
};

const FlagSpec kBaselineFlags[] = {
    {"top-k", "Keywords per response"},
};

const FlagSpec kEvaluateFlags[] = {
    {"gold", "Gold-standard CSV (response_id,keyword)"},
    {"system", "System keywords in keywords_per_response.csv format"},
    {"report", "Report path (default <out-dir>/evaluation_report.json)"},
    {"jaccard-csv", "Optional per-response Jaccard CSV"},
    {"out-dir", "Output directory"},
};

// Config-file spellings of RunConfig field names.
const std::map<std::string, std::string> kConfigAliases = {
    {"text-column", "text-col"},
    {"acronym-path", "acronyms"},
    {"tfidf-top-k", "top-k"},
    {"output-dir", "out-dir"},
};

using FlagValues = std::map<std::string, std::string>;

std::set<std::string> AllFlagNames() {
  std::set<std::string> names = {"config"};
  for (const FlagSpec& f : kCorpusFlags) names.insert(f.name);
  for (const FlagSpec& f : kExtractFlags) names.insert(f.name);
  for (const FlagSpec& f : kBaselineFlags) names.insert(f.name);
  for (const FlagSpec& f : kEvaluateFlags) names.insert(f.name);
  return names;
}

// Registered options of one subcommand and their raw values.
class FlagSet {
 public:
  void Register(CLI::App* app, std::span<const FlagSpec> specs) {
    for (const FlagSpec& spec : specs) {
      if (names_.count(spec.name)) continue;
      names_.insert(spec.name);
      std::string option = std::string("--") + spec.name;
      if (spec.boolean) {
        options_[spec.name] = app->add_flag(option, bools_[spec.name], spec.help);
      } else {
        options_[spec.name] =
            app->add_option(option, strings_[spec.name], spec.help);
      }
    }
  }

  // Command-line values merged over the --config file.
  FlagValues Resolve() const {
    FlagValues values;
    for (const auto& [name, option] : options_) {
      if (option->count() == 0) continue;
      auto b = bools_.find(name);
      values[name] = b != bools_.end() ? (b->second ? "true" : "false")
                                       : strings_.at(name);
    }
    if (auto config = values.find("config"); config != values.end()) {
      static const std::set<std::string> known = AllFlagNames();
      for (const auto& [raw_key, value] :
           ParseKeyValueConfig(ReadFileBytes(config->second))) {
        std::string key = raw_key;
        std::replace(key.begin(), key.end(), '_', '-');
        if (auto alias = kConfigAliases.find(key); alias != kConfigAliases.end()) {
          key = alias->second;
        }
        if (key == "config") {
          throw InputError("config file may not name another config file");
        }
        if (!known.count(key)) {
          throw InputError("config file " + config->second +
                           ": unknown key \"" + key + "\"");
        }
        if (!names_.count(key)) continue;  // belongs to another subcommand
        values.try_emplace(key, value);
      }
    }
    return values;
  }

 private:
  std::set<std::string> names_;
  std::map<std::string, CLI::Option*> options_;
  std::map<std::string, std::string> strings_;
  std::map<std::string, bool> bools_;
};

int ParseIntFlag(const FlagValues& values, const std::string& name,
                 int fallback) {
  auto it = values.find(name);
  if (it == values.end()) return fallback;
  const std::string& text = it->second;
  size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw InputError("--" + name + ": expected an integer, got \"" + text +
                     "\"");
  }
  return value;
}

bool ParseBoolFlag(const FlagValues& values, const std::string& name) {
  auto it = values.find(name);
  if (it == values.end()) return false;
  std::string text = AsciiLower(it->second);
  if (text == "true" || text == "1" || text == "yes" || text == "on") {
    return true;
  }
  if (text == "false" || text == "0" || text == "no" || text == "off") {
    return false;
  }
  throw InputError("--" + name + ": expected true or false, got \"" +
                   it->second + "\"");
}

std::optional<std::string> OptionalFlag(const FlagValues& values,
                                        const std::string& name) {
  auto it = values.find(name);
  if (it == values.end()) return std::nullopt;
  return it->second;
}

const std::string& RequiredFlag(const FlagValues& values,
                                const std::string& name) {
  auto it = values.find(name);
  if (it == values.end() || it->second.empty()) {
    throw InputError("missing required flag --" + name);
  }
  return it->second;
}

RunConfig ResolveRunConfig(const FlagValues& values) {
  RunConfig config;
  if (auto column = OptionalFlag(values, "text-col")) {
    config.text_column = ColumnSelector::Parse(*column);
  }
  config.target_word = OptionalFlag(values, "target-word");
  config.org_name = OptionalFlag(values, "org-name");
  if (auto acronyms = OptionalFlag(values, "acronyms")) {
    config.acronym_path = fs::path(*acronyms);
  }
  config.min_single_occur =
      ParseIntFlag(values, "min-single-occur", config.min_single_occur);
  config.no_limit_strength =
      ParseIntFlag(values, "no-limit-strength", config.no_limit_strength);
  config.emit_full_runs = ParseBoolFlag(values, "emit-full-runs");
  config.tfidf_top_k = ParseIntFlag(values, "top-k", config.tfidf_top_k);
  if (auto out_dir = OptionalFlag(values, "out-dir")) {
    config.output_dir = *out_dir;
  }
  config.Validate();
  return config;
}

int ResolveWorkers(const FlagValues& values) {
  int fallback = static_cast<int>(std::thread::hardware_concurrency());
  int workers = ParseIntFlag(values, "workers", std::max(fallback, 1));
  if (workers < 1) {
    throw InputError("--workers must be >= 1, got " + std::to_string(workers));
  }
  return workers;
}

fs::path ResolveDataDir(const FlagValues& values) {
  if (auto dir = OptionalFlag(values, "data-dir")) return *dir;
  return DefaultDataDirectory();
}

std::string FormatPercent(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", value);
  return buffer;
}

// Loading and analysis shared by extract and baseline-tfidf.
struct PreparedCorpus {
  RunConfig config;
  int workers = 1;
  fs::path data_dir;
  std::vector<SurveyResponse> responses;
  ExclusionList exclusions;
  std::vector<AnalyzedResponse> analyzed;
  RunManifest manifest;
};

PreparedCorpus PrepareCorpus(const FlagValues& values,
                             const std::string& subcommand) {
  PreparedCorpus corpus;
  fs::path input = RequiredFlag(values, "input");
  corpus.config = ResolveRunConfig(values);
  corpus.workers = ResolveWorkers(values);
  corpus.data_dir = ResolveDataDir(values);

  corpus.responses = LoadResponses(input, corpus.config.text_column);
  corpus.exclusions = LoadExclusions(corpus.config.acronym_path,
                                     corpus.config.target_word,
                                     corpus.config.org_name);
  LinguisticResources resources =
      LinguisticResources::LoadFromDirectory(corpus.data_dir);
  corpus.analyzed =
      AnalyzeCorpus(corpus.responses, resources, corpus.workers);

  // Output paths, worker count and the data location are left out so the
  // manifest, like the outputs, is identical wherever the run happens.
  RunManifest& manifest = corpus.manifest;
  manifest.subcommand = subcommand;
  const RunConfig& config = corpus.config;
  manifest.config["text_col"] = config.text_column.ToString();
  manifest.config["target_word"] = config.target_word.value_or("");
  manifest.config["org_name"] = config.org_name.value_or("");
  manifest.config["acronyms"] =
      config.acronym_path ? config.acronym_path->filename().string() : "";
  manifest.inputs[input.filename().string()] =
      Sha256Hex(ReadFileBytes(input));
  if (config.acronym_path) {
    manifest.inputs[config.acronym_path->filename().string()] =
        Sha256Hex(ReadFileBytes(*config.acronym_path));
  }
  return corpus;
}

void WriteRunOutputs(PreparedCorpus& corpus,
                     std::span<const ResponseKeywords> keywords,
                     const CorpusKeywordSummary& summary, std::ostream& out) {
  const fs::path& dir = corpus.config.output_dir;
  std::error_code error;
  fs::create_directories(dir, error);
  if (error) {
    throw InputError("--out-dir " + dir.string() + ": " + error.message());
  }
  std::string per_response = FormatPerResponseCsv(corpus.responses, keywords);
  std::string summary_csv = FormatSummaryCsv(summary);
  WriteFileBytes(dir / kPerResponseFile, per_response);
  WriteFileBytes(dir / kSummaryFile, summary_csv);
  corpus.manifest.outputs[kPerResponseFile] = Sha256Hex(per_response);
  corpus.manifest.outputs[kSummaryFile] = Sha256Hex(summary_csv);
  WriteFileBytes(dir / kManifestFile, corpus.manifest.ToJson());

  out << "responses: " << corpus.responses.size() << "\n"
      << "keyword types: " << summary.rows.size() << "\n"
      << "coverage: " << FormatPercent(KeywordCoverage(keywords)) << "%\n"
      << "wrote " << (dir / kPerResponseFile).string() << ", "
      << (dir / kSummaryFile).string() << ", "
      << (dir / kManifestFile).string() << "\n";
}

int RunExtract(const FlagValues& values, std::ostream& out) {
  PreparedCorpus corpus = PrepareCorpus(values, "extract");
  ExtractionOptions options = ExtractionOptions::FromConfig(corpus.config);
  ExtractionResult result = ExtractKeywords(corpus.analyzed, options,
                                            corpus.exclusions, corpus.workers);
  corpus.manifest.config["min_single_occur"] =
      std::to_string(options.min_single_occur);
  corpus.manifest.config["no_limit_strength"] =
      std::to_string(options.no_limit_strength);
  corpus.manifest.config["emit_full_runs"] =
      options.emit_full_runs ? "true" : "false";
  WriteRunOutputs(corpus, result.per_response, result.summary, out);
  return kExitOk;
}

int RunBaseline(const FlagValues& values, std::ostream& out) {
  PreparedCorpus corpus = PrepareCorpus(values, "baseline-tfidf");
  StopwordSet stopwords = LoadStopwords(corpus.data_dir / "stopwords.txt");
  TfIdfModel model =
      BuildTfIdfModel(corpus.analyzed, stopwords, corpus.exclusions);
  std::vector<ResponseKeywords> keywords =
      ExtractTopK(model, corpus.config.tfidf_top_k, corpus.workers);
  corpus.manifest.config["top_k"] = std::to_string(corpus.config.tfidf_top_k);
  WriteRunOutputs(corpus, keywords, Summarize(keywords), out);
  return kExitOk;
}

int RunEvaluate(const FlagValues& values, std::ostream& out) {
  fs::path gold_path = RequiredFlag(values, "gold");
  fs::path system_path = RequiredFlag(values, "system");
  fs::path out_dir = OptionalFlag(values, "out-dir").value_or(".");
  fs::path report_path = OptionalFlag(values, "report")
                             .value_or((out_dir / "evaluation_report.json")
                                           .string());

  GoldStandard gold = LoadGoldStandard(gold_path);
  KeywordSets system = ReadPerResponseFile(system_path);
  EvalReport report = Evaluate(system, gold);

  if (report_path.has_parent_path()) {
    std::error_code error;
    fs::create_directories(report_path.parent_path(), error);
  }
  WriteReport(report, report_path);
  out << FormatReportSummary(report);
  out << "wrote " << report_path.string() << "\n";
  if (auto jaccard = OptionalFlag(values, "jaccard-csv")) {
    WriteJaccardCsv(report, *jaccard);
    out << "wrote " << *jaccard << "\n";
  }
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Keyword extraction and evaluation for open-ended survey "
               "responses",
               "surveykw"};
  app.set_version_flag("--version", ToolVersion());
  app.require_subcommand(1);

  struct Command {
    CLI::App* app;
    FlagSet flags;
    int (*run)(const FlagValues&, std::ostream&);
  };
  std::map<std::string, Command> commands;
  const FlagSpec config_flag[] = {{"config", "key = value configuration file"}};

  auto add = [&](const char* name, const char* description,
                 std::initializer_list<std::span<const FlagSpec>> groups,
                 int (*run)(const FlagValues&, std::ostream&)) {
    Command& command = commands[name];
    command.app = app.add_subcommand(name, description);
    command.run = run;
    for (std::span<const FlagSpec> group : groups) {
      command.flags.Register(command.app, group);
    }
    command.flags.Register(command.app, config_flag);
  };
  add("extract", "Extract noun-phrase keywords with adjective modifiers",
      {kCorpusFlags, kExtractFlags}, RunExtract);
  add("baseline-tfidf", "Extract the top-k TF-IDF terms per response",
      {kCorpusFlags, kBaselineFlags}, RunBaseline);
  add("evaluate", "Compare system keywords against a gold standard",
      {kEvaluateFlags}, RunEvaluate);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  for (auto& [name, command] : commands) {
    if (!command.app->parsed()) continue;
    try {
      return command.run(command.flags.Resolve(), out);
    } catch (const InputError& e) {
      err << "error: " << e.what() << "\n";
      if (std::string_view(e.what()).rfind("missing required flag", 0) == 0) {
        err << command.app->help();
      }
      return kExitInputError;
    } catch (const std::exception& e) {
      err << "internal error: " << e.what() << "\n";
      return kExitInternalError;
    }
  }
  err << app.help();
  return kExitInputError;
}

}  // namespace surveykw
