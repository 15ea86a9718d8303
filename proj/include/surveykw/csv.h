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

// Delimiter-separated text: RFC-4180 parsing and writing, plus whole-file
// byte I/O helpers shared by every reader and writer in the project.

#ifndef SURVEYKW_CSV_H_
#define SURVEYKW_CSV_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace surveykw {

using CsvRow = std::vector<std::string>;

// Parses delimiter-separated text with RFC-4180 quoting. Quoted fields may
// contain delimiters, doubled quotes and line breaks. A trailing line break
// at the end of the input does not start a new record; an empty line in the
// middle is a record with one empty field. Throws InputError naming the
// 1-based record number when quoting is malformed.
std::vector<CsvRow> ParseDelimited(std::string_view text, char delimiter);

// Quotes `field` when it contains the delimiter, a quote, CR or LF.
std::string EscapeField(std::string_view field, char delimiter);

// Appends one record terminated by '\n'.
void AppendRow(const std::vector<std::string>& fields, char delimiter,
               std::string* out);

// Infers ',' or '\t' from a .csv/.tsv extension (case-insensitive). Other
// extensions default to ','.
char DelimiterForPath(const std::filesystem::path& path);

// Reads a whole file. Throws InputError if it cannot be opened.
std::string ReadFileBytes(const std::filesystem::path& path);

// Writes `bytes` to `path`, replacing it. Throws InputError on failure.
void WriteFileBytes(const std::filesystem::path& path, std::string_view bytes);

// Removes a leading UTF-8 byte-order mark.
std::string_view StripBom(std::string_view text);

}  // namespace surveykw

#endif  // SURVEYKW_CSV_H_
