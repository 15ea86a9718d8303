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

// Run manifest: resolved configuration, input checksums and tool version,
// written next to every run's outputs.

#ifndef SURVEYKW_MANIFEST_H_
#define SURVEYKW_MANIFEST_H_

#include <map>
#include <string>
#include <string_view>

namespace surveykw {

inline constexpr char kManifestFile[] = "manifest.json";

// Lowercase hex SHA-256 of `bytes`.
std::string Sha256Hex(std::string_view bytes);

// Version string compiled into the library.
std::string ToolVersion();

struct RunManifest {
  std::string subcommand;
  // Final resolved settings, keyed by config-file name.
  std::map<std::string, std::string> config;
  // File name -> SHA-256, for inputs and for written outputs.
  std::map<std::string, std::string> inputs;
  std::map<std::string, std::string> outputs;

  // Deterministic JSON document with sorted keys.
  std::string ToJson() const;
};

}  // namespace surveykw

#endif  // SURVEYKW_MANIFEST_H_
