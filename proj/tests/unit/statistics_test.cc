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

#include "surveykw/statistics.h"

#include <gtest/gtest.h>

#include <boost/math/distributions/students_t.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <cmath>

#include "testing/generators.h"

namespace surveykw {
namespace {

double ReferenceTwoSidedP(double t, double dof) {
  boost::math::students_t dist(dof);
  return 2 * boost::math::cdf(boost::math::complement(dist, std::fabs(t)));
}

TEST(IncompleteBetaTest, Endpoints) {
  EXPECT_EQ(RegularizedIncompleteBeta(2, 3, 0), 0);
  EXPECT_EQ(RegularizedIncompleteBeta(2, 3, 1), 1);
  EXPECT_THROW(RegularizedIncompleteBeta(0, 1, 0.5), std::invalid_argument);
  EXPECT_THROW(RegularizedIncompleteBeta(1, 1, 1.5), std::invalid_argument);
}

TEST(IncompleteBetaTest, ClosedForms) {
  // I_x(1, 1) = x and I_x(a, 1) = x^a.
  EXPECT_NEAR(RegularizedIncompleteBeta(1, 1, 0.3), 0.3, 1e-14);
  EXPECT_NEAR(RegularizedIncompleteBeta(3, 1, 0.5), 0.125, 1e-14);
}

TEST(IncompleteBetaTest, MatchesBoost) {
  testing::Generator gen(61);
  for (int trial = 0; trial < 2000; ++trial) {
    double a = gen.UniformReal(0.1, 60);
    double b = gen.UniformReal(0.1, 60);
    double x = gen.UniformReal(0, 1);
    EXPECT_NEAR(RegularizedIncompleteBeta(a, b, x),
                boost::math::ibeta(a, b, x), 1e-10)
        << a << " " << b << " " << x;
  }
}

TEST(StudentTTest, KnownValues) {
  // t = 2.3094 with 3 degrees of freedom is the rho = 0.8, n = 5 example.
  double t = 0.8 * std::sqrt(3 / (1 - 0.64));
  EXPECT_NEAR(StudentTTwoSidedP(t, 3), 0.104, 0.001);
  EXPECT_EQ(StudentTTwoSidedP(0, 7), 1.0);
  EXPECT_EQ(StudentTTwoSidedP(INFINITY, 7), 0.0);
  EXPECT_NEAR(StudentTTwoSidedP(12.706, 1), 0.05, 1e-4);
}

TEST(StudentTTest, MatchesBoostAndIsSymmetric) {
  testing::Generator gen(67);
  for (int trial = 0; trial < 2000; ++trial) {
    double t = gen.UniformReal(-20, 20);
    double dof = gen.Uniform(1, 600);
    double p = StudentTTwoSidedP(t, dof);
    EXPECT_NEAR(p, ReferenceTwoSidedP(t, dof), 1e-10) << t << " " << dof;
    EXPECT_EQ(p, StudentTTwoSidedP(-t, dof));
    EXPECT_GE(p, 0.0);
    EXPECT_LE(p, 1.0);
  }
}

}  // namespace
}  // namespace surveykw
