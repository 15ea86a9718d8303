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

#include <gtest/gtest.h>

#include "json.hpp"

namespace surveykw {
namespace {

TEST(Sha256Test, KnownVectors) {
  EXPECT_EQ(Sha256Hex(""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(Sha256Hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(ManifestTest, JsonContent) {
  RunManifest manifest;
  manifest.subcommand = "extract";
  manifest.config = {{"min_single_occur", "1"}};
  manifest.inputs = {{"four_responses.csv", "abc"}};
  manifest.outputs = {{"keywords_summary.csv", "def"}};
  auto doc = nlohmann::json::parse(manifest.ToJson());
  EXPECT_EQ(doc["tool"], "surveykw");
  EXPECT_EQ(doc["version"], ToolVersion());
  EXPECT_EQ(doc["subcommand"], "extract");
  EXPECT_EQ(doc["config"]["min_single_occur"], "1");
  EXPECT_EQ(doc["inputs"]["four_responses.csv"], "abc");
  EXPECT_EQ(manifest.ToJson(), manifest.ToJson());
}

}  // namespace
}  // namespace surveykw
