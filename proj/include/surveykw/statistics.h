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

// Special functions needed for significance testing.

#ifndef SURVEYKW_STATISTICS_H_
#define SURVEYKW_STATISTICS_H_

namespace surveykw {

// Regularized incomplete beta function I_x(a, b) for a, b > 0 and
// 0 <= x <= 1, evaluated by continued fraction.
double RegularizedIncompleteBeta(double a, double b, double x);

// Two-sided p-value P(|T| >= |t|) for Student's t with `dof` degrees of
// freedom. Infinite t gives 0.
double StudentTTwoSidedP(double t, double dof);

}  // namespace surveykw

#endif  // SURVEYKW_STATISTICS_H_
