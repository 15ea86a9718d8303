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

#include "surveykw/csv.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <sstream>

#include "surveykw/errors.h"

namespace surveykw {

std::vector<CsvRow> ParseDelimited(std::string_view text, char delimiter) {
  std::vector<CsvRow> rows;
  if (text.empty()) return rows;

  CsvRow row;
  std::string field;
  bool in_quotes = false;
  bool field_was_quoted = false;
  size_t record = 1;
  size_t i = 0;

  auto end_field = [&]() {
    row.push_back(std::move(field));
    field.clear();
    field_was_quoted = false;
  };
  auto end_record = [&]() {
    end_field();
    rows.push_back(std::move(row));
    row.clear();
    ++record;
  };

  while (i < text.size()) {
    char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          i += 2;
          continue;
        }
        in_quotes = false;
        ++i;
        // Only a delimiter or a line break may follow a closing quote.
        if (i < text.size() && text[i] != delimiter && text[i] != '\n' &&
            text[i] != '\r') {
          throw InputError("malformed quoting in record " +
                           std::to_string(record) +
                           ": unexpected character after closing quote");
        }
        continue;
      }
      field.push_back(c);
      ++i;
      continue;
    }

    if (c == '"') {
      if (!field.empty() || field_was_quoted) {
        throw InputError("malformed quoting in record " +
                         std::to_string(record) +
                         ": quote inside an unquoted field");
      }
      in_quotes = true;
      field_was_quoted = true;
      ++i;
    } else if (c == delimiter) {
      end_field();
      ++i;
    } else if (c == '\r' || c == '\n') {
      end_record();
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      ++i;
    } else {
      field.push_back(c);
      ++i;
    }
  }

  if (in_quotes) {
    throw InputError("malformed quoting in record " + std::to_string(record) +
                     ": unterminated quoted field");
  }
  // Flush the last record unless the input ended with a line break.
  if (!field.empty() || field_was_quoted || !row.empty()) end_record();
  return rows;
}

std::string EscapeField(std::string_view field, char delimiter) {
  bool needs_quotes = field.find_first_of(std::string{'"', '\r', '\n',
                                                      delimiter}) !=
                      std::string_view::npos;
  if (!needs_quotes) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void AppendRow(const std::vector<std::string>& fields, char delimiter,
               std::string* out) {
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out->push_back(delimiter);
    out->append(EscapeField(fields[i], delimiter));
  }
  out->push_back('\n');
}

char DelimiterForPath(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return ext == ".tsv" ? '\t' : ',';
}

std::string ReadFileBytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw InputError("error reading file: " + path.string());
  return buffer.str();
}

void WriteFileBytes(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write file: " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.close();
  if (!out) throw InputError("error writing file: " + path.string());
}

std::string_view StripBom(std::string_view text) {
  constexpr std::string_view kBom = "\xEF\xBB\xBF";
  if (text.substr(0, kBom.size()) == kBom) text.remove_prefix(kBom.size());
  return text;
}

}  // namespace surveykw
