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

#include "surveykw/manifest.h"

#include <openssl/evp.h>

#include <cstdio>

#include "json.hpp"
#include "surveykw/errors.h"

#ifndef SURVEYKW_VERSION
#define SURVEYKW_VERSION "0.0.0"
#endif

namespace surveykw {

std::string Sha256Hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(),
                 nullptr) != 1) {
    throw InvariantError("SHA-256 digest failed");
  }
  std::string hex;
  hex.reserve(2 * length);
  char buffer[3];
  for (unsigned int i = 0; i < length; ++i) {
    std::snprintf(buffer, sizeof(buffer), "%02x", digest[i]);
    hex.append(buffer);
  }
  return hex;
}

std::string ToolVersion() { return SURVEYKW_VERSION; }

std::string RunManifest::ToJson() const {
  nlohmann::json doc;
  doc["tool"] = "surveykw";
  doc["version"] = ToolVersion();
  doc["subcommand"] = subcommand;
  doc["config"] = config;
  doc["inputs"] = inputs;
  doc["outputs"] = outputs;
  return doc.dump(2) + "\n";
}

}  // namespace surveykw
