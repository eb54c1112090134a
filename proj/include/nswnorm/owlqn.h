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

// Orthant-wise limited-memory quasi-Newton minimizer for
//
//   F(x) = f(x) + l1 * |x|_1
//
// with f smooth. With l1 == 0 it is plain L-BFGS with a backtracking
// Armijo line search. Every accepted step satisfies the sufficient-decrease
// condition, so the recorded objective sequence is non-increasing.

#ifndef NSWNORM_OWLQN_H_
#define NSWNORM_OWLQN_H_

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace nswnorm {
namespace optim {

struct OwlqnOptions {
  double l1 = 0.0;
  int memory = 6;
  int max_iterations = 100;
  // Stop when (F[k - period] - F[k]) / F[k] < tolerance.
  double tolerance = 1e-5;
  int period = 10;
  // Stop when |pseudo-gradient| / max(1, |x|) < epsilon.
  double epsilon = 1e-5;
  int max_line_search = 40;
};

// Writes the gradient of f into `gradient` and returns f(x).
using Objective =
    std::function<double(std::span<const double> x, std::span<double> gradient)>;

struct IterationInfo {
  int iteration = 0;
  double objective = 0.0;  // F, including the L1 term
  double step = 0.0;
  int evaluations = 0;
  int active_features = 0;  // nonzero coordinates
};

struct OwlqnResult {
  std::vector<double> x;
  double objective = 0.0;
  int iterations = 0;
  // F(x_0), F(x_1), ... for every accepted iterate.
  std::vector<double> history;
  std::string stop_reason;
};

// Throws TrainingError (with the iteration number) when the objective or
// gradient becomes NaN.
OwlqnResult MinimizeOwlqn(
    const Objective& objective, std::vector<double> x0,
    const OwlqnOptions& options,
    const std::function<void(const IterationInfo&)>& on_iteration = {});

}  // namespace optim
}  // namespace nswnorm

#endif  // NSWNORM_OWLQN_H_
