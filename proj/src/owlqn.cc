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

#include <algorithm>
#include <cmath>
#include <deque>

#include "nswnorm/errors.h"

namespace nswnorm {
namespace optim {
namespace {

double Dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double Norm(std::span<const double> a) { return std::sqrt(Dot(a, a)); }

double L1Norm(std::span<const double> a) {
  double s = 0.0;
  for (double v : a) s += std::fabs(v);
  return s;
}

// Minimum-norm subgradient of F at x.
void PseudoGradient(std::span<const double> x, std::span<const double> g,
                    double c, std::span<double> pg) {
  if (c == 0.0) {
    std::copy(g.begin(), g.end(), pg.begin());
    return;
  }
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0.0) {
      pg[i] = g[i] - c;
    } else if (x[i] > 0.0) {
      pg[i] = g[i] + c;
    } else if (g[i] + c < 0.0) {
      pg[i] = g[i] + c;
    } else if (g[i] - c > 0.0) {
      pg[i] = g[i] - c;
    } else {
      pg[i] = 0.0;
    }
  }
}

struct Correction {
  std::vector<double> s;
  std::vector<double> y;
  double rho;
};

// d = -H * pg by the two-loop recursion.
void TwoLoop(const std::deque<Correction>& memory, std::span<const double> pg,
             std::span<double> d) {
  for (size_t i = 0; i < d.size(); ++i) d[i] = -pg[i];
  std::vector<double> alpha(memory.size());
  for (size_t k = memory.size(); k-- > 0;) {
    alpha[k] = memory[k].rho * Dot(memory[k].s, d);
    for (size_t i = 0; i < d.size(); ++i) d[i] -= alpha[k] * memory[k].y[i];
  }
  if (!memory.empty()) {
    const auto& last = memory.back();
    const double gamma = Dot(last.s, last.y) / Dot(last.y, last.y);
    for (double& v : d) v *= gamma;
  }
  for (size_t k = 0; k < memory.size(); ++k) {
    const double beta = memory[k].rho * Dot(memory[k].y, d);
    for (size_t i = 0; i < d.size(); ++i) {
      d[i] += (alpha[k] - beta) * memory[k].s[i];
    }
  }
}

bool AllFinite(double f, std::span<const double> g) {
  if (!std::isfinite(f)) return false;
  for (double v : g) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

}  // namespace

OwlqnResult MinimizeOwlqn(
    const Objective& objective, std::vector<double> x0,
    const OwlqnOptions& options,
    const std::function<void(const IterationInfo&)>& on_iteration) {
  const size_t n = x0.size();
  const double c = options.l1;
  OwlqnResult result;
  std::vector<double> x = std::move(x0);
  std::vector<double> g(n), pg(n), d(n), xn(n), gn(n);

  double f = objective(x, g);
  if (!AllFinite(f, g)) throw TrainingError("objective is not finite", 0);
  double F = f + c * L1Norm(x);
  result.history.push_back(F);

  std::deque<Correction> memory;
  result.stop_reason = "max_iterations";
  int iteration = 0;
  for (iteration = 1; iteration <= options.max_iterations; ++iteration) {
    PseudoGradient(x, g, c, pg);
    if (Norm(pg) / std::max(1.0, Norm(x)) < options.epsilon) {
      result.stop_reason = "gradient_norm";
      --iteration;
      break;
    }

    TwoLoop(memory, pg, d);
    if (c > 0.0) {
      for (size_t i = 0; i < n; ++i) {
        if (d[i] * pg[i] >= 0.0) d[i] = 0.0;
      }
    }
    if (Dot(d, pg) >= 0.0) {
      // Not a descent direction; restart from steepest descent.
      memory.clear();
      for (size_t i = 0; i < n; ++i) d[i] = -pg[i];
    }

    // Orthant of the step: sign of x, or of -pg where x is zero.
    std::vector<double> orthant(n, 0.0);
    if (c > 0.0) {
      for (size_t i = 0; i < n; ++i) {
        orthant[i] = x[i] != 0.0 ? (x[i] > 0.0 ? 1.0 : -1.0)
                                 : (pg[i] < 0.0 ? 1.0 : (pg[i] > 0.0 ? -1.0 : 0.0));
      }
    }

    double step = memory.empty() ? 1.0 / Norm(d) : 1.0;
    bool accepted = false;
    double fn = 0.0, Fn = 0.0;
    int evaluations = 0;
    for (int ls = 0; ls < options.max_line_search; ++ls) {
      for (size_t i = 0; i < n; ++i) {
        xn[i] = x[i] + step * d[i];
        if (c > 0.0 && xn[i] * orthant[i] <= 0.0) xn[i] = 0.0;
      }
      fn = objective(xn, gn);
      ++evaluations;
      if (!AllFinite(fn, gn)) {
        throw TrainingError("objective became NaN or infinite", iteration);
      }
      Fn = fn + c * L1Norm(xn);
      double decrease = 0.0;
      for (size_t i = 0; i < n; ++i) decrease += pg[i] * (xn[i] - x[i]);
      if (Fn <= F + 1e-4 * decrease) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      result.stop_reason = "line_search_failed";
      --iteration;
      break;
    }

    Correction corr{std::vector<double>(n), std::vector<double>(n), 0.0};
    for (size_t i = 0; i < n; ++i) {
      corr.s[i] = xn[i] - x[i];
      corr.y[i] = gn[i] - g[i];
    }
    const double sy = Dot(corr.s, corr.y);
    if (sy > 1e-12) {
      corr.rho = 1.0 / sy;
      memory.push_back(std::move(corr));
      if (static_cast<int>(memory.size()) > options.memory) memory.pop_front();
    }

    x.swap(xn);
    g.swap(gn);
    F = Fn;
    result.history.push_back(F);

    if (on_iteration) {
      IterationInfo info;
      info.iteration = iteration;
      info.objective = F;
      info.step = step;
      info.evaluations = evaluations;
      for (double v : x) info.active_features += v != 0.0 ? 1 : 0;
      on_iteration(info);
    }

    const int k = static_cast<int>(result.history.size()) - 1;
    if (k >= options.period) {
      const double past = result.history[k - options.period];
      if (F != 0.0 && (past - F) / std::fabs(F) < options.tolerance) {
        result.stop_reason = "converged";
        break;
      }
    }
  }
  result.iterations = std::min(iteration, options.max_iterations);
  result.objective = F;
  result.x = std::move(x);
  return result;
}

}  // namespace optim
}  // namespace nswnorm
