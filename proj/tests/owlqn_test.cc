// Copyright 2026 The nswnorm Authors.
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

#include "nswnorm/owlqn.h"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "nswnorm/errors.h"

namespace nswnorm {
namespace optim {
namespace {

// f(x) = sum_i a_i/2 (x_i - c_i)^2
Objective Quadratic(std::vector<double> a, std::vector<double> c) {
  return [a, c](std::span<const double> x, std::span<double> g) {
    double f = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
      const double d = x[i] - c[i];
      f += 0.5 * a[i] * d * d;
      g[i] = a[i] * d;
    }
    return f;
  };
}

TEST(OwlqnTest, SmoothQuadratic) {
  OwlqnOptions opts;
  opts.epsilon = 1e-9;
  opts.tolerance = 0.0;
  const auto r = MinimizeOwlqn(Quadratic({1, 10, 100}, {1, -2, 3}),
                               {0, 0, 0}, opts);
  EXPECT_NEAR(r.x[0], 1.0, 1e-5);
  EXPECT_NEAR(r.x[1], -2.0, 1e-5);
  EXPECT_NEAR(r.x[2], 3.0, 1e-5);
}

// With the L1 term the minimizer is the soft threshold of c_i by l1/a_i.
TEST(OwlqnTest, SoftThreshold) {
  OwlqnOptions opts;
  opts.l1 = 1.5;
  opts.epsilon = 1e-10;
  opts.tolerance = 0.0;
  opts.max_iterations = 500;
  const std::vector<double> a = {1, 2, 1, 4};
  const std::vector<double> c = {3, 0.5, -1, -2};
  const auto r = MinimizeOwlqn(Quadratic(a, c), {0, 0, 0, 0}, opts);
  for (size_t i = 0; i < a.size(); ++i) {
    const double t = opts.l1 / a[i];
    const double want =
        std::copysign(std::max(0.0, std::fabs(c[i]) - t), c[i]);
    EXPECT_NEAR(r.x[i], want, 1e-5) << i;
  }
  EXPECT_EQ(r.x[1], 0.0);
  EXPECT_EQ(r.x[2], 0.0);
}

TEST(OwlqnTest, HistoryIsNonIncreasing) {
  OwlqnOptions opts;
  opts.l1 = 0.3;
  int calls = 0;
  const auto r = MinimizeOwlqn(
      Quadratic({1, 3, 5, 7}, {2, -2, 1, 0.01}), {5, 5, 5, 5}, opts,
      [&](const IterationInfo& info) {
        ++calls;
        EXPECT_EQ(info.iteration, calls);
      });
  ASSERT_GE(r.history.size(), 2u);
  for (size_t k = 1; k < r.history.size(); ++k) {
    EXPECT_LE(r.history[k], r.history[k - 1]);
  }
  EXPECT_EQ(calls, r.iterations);
}

TEST(OwlqnTest, RespectsIterationCap) {
  OwlqnOptions opts;
  opts.max_iterations = 2;
  opts.tolerance = 0.0;
  opts.epsilon = 0.0;
  const auto r = MinimizeOwlqn(Quadratic({1, 1000}, {1, 1}), {0, 0}, opts);
  EXPECT_LE(r.iterations, 2);
  EXPECT_EQ(r.stop_reason, "max_iterations");
}

TEST(OwlqnTest, NanRaisesTrainingError) {
  const Objective bad = [](std::span<const double> x, std::span<double> g) {
    g[0] = 1.0;
    return x[0] < -0.5 ? std::numeric_limits<double>::quiet_NaN() : x[0];
  };
  try {
    MinimizeOwlqn(bad, {0.0}, OwlqnOptions{});
    FAIL() << "expected TrainingError";
  } catch (const TrainingError& e) {
    EXPECT_EQ(e.iteration(), 1);
  }
  const Objective nan_at_start = [](std::span<const double>,
                                    std::span<double> g) {
    g[0] = 0.0;
    return std::numeric_limits<double>::quiet_NaN();
  };
  EXPECT_THROW(MinimizeOwlqn(nan_at_start, {0.0}, OwlqnOptions{}),
               TrainingError);
}

}  // namespace
}  // namespace optim
}  // namespace nswnorm
