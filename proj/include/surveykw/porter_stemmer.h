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

#ifndef SURVEYKW_PORTER_STEMMER_H_
#define SURVEYKW_PORTER_STEMMER_H_

#include <string>
#include <string_view>

namespace surveykw {

// Porter's suffix-stripping stemmer, steps 1a through 5b, as in Martin
// Porter's reference implementation (including its "bli" -> "ble" and
// "logi" -> "log" step 2 rules). Expects lowercase input; words of length
// <= 2 and words containing anything other than a-z are returned unchanged.
std::string PorterStem(std::string_view word);

}  // namespace surveykw

#endif  // SURVEYKW_PORTER_STEMMER_H_
