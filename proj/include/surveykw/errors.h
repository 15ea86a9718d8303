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

#ifndef SURVEYKW_ERRORS_H_
#define SURVEYKW_ERRORS_H_

#include <stdexcept>
#include <string>

namespace surveykw {

// Problem with user-supplied input: missing files, bad columns, malformed
// quoting, invalid configuration values. The CLI maps it to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A metric that is undefined for the given data (for example precision when
// no response received a keyword).
class UndefinedMetric : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Broken internal invariant. The CLI maps it to exit code 2.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace surveykw

#endif  // SURVEYKW_ERRORS_H_
