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

// Small random CRFs and brute-force oracles shared by the CRF tests.

#ifndef NSWNORM_TESTS_CRF_TESTING_H_
#define NSWNORM_TESTS_CRF_TESTING_H_

#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nswnorm/crf.h"
#include "nswnorm/taxonomy.h"

namespace nswnorm {
namespace testing {

// `num_attributes` attributes, each linked to a random subset of labels.
inline crf::CrfModel RandomModel(std::mt19937_64& rng, int num_labels,
                                 int num_attributes, double scale) {
  std::vector<std::string> names;
  std::vector<std::vector<int>> links(num_attributes);
  std::bernoulli_distribution keep(0.6);
  for (int a = 0; a < num_attributes; ++a) {
    names.push_back("a" + std::to_string(a));
    for (int y = 0; y < num_labels; ++y) {
      if (keep(rng)) links[a].push_back(y);
    }
  }
  crf::CrfModel model(num_labels, std::move(names), std::move(links));
  std::normal_distribution<double> normal(0.0, scale);
  for (double& w : model.mutable_weights()) w = normal(rng);
  return model;
}

inline crf::EncodedSequence RandomSequence(std::mt19937_64& rng,
                                           int num_attributes, size_t length) {
  crf::EncodedSequence seq;
  std::uniform_int_distribution<int> count(0, 3);
  std::uniform_int_distribution<int> attr(0, num_attributes - 1);
  seq.attributes.resize(length);
  for (auto& active : seq.attributes) {
    const int n = count(rng);
    for (int k = 0; k < n; ++k) active.push_back(attr(rng));
  }
  return seq;
}

// Path score summed straight from the parameter vector.
inline double OracleScore(const crf::CrfModel& m,
                          const crf::EncodedSequence& seq,
                          const std::vector<int>& y) {
  const auto w = m.weights();
  double s = w[m.begin_param(y.front())] + w[m.end_param(y.back())];
  for (size_t t = 0; t < y.size(); ++t) {
    for (int a : seq.attributes[t]) {
      for (size_t k = m.emission_begin(a); k < m.emission_end(a); ++k) {
        if (m.emission_label(k) == y[t]) s += w[k];
      }
    }
    if (t > 0) s += w[m.transition_param(y[t - 1], y[t])];
  }
  return s;
}

// Calls fn(path) for every label path of the given length.
template <typename Fn>
void ForEachPath(int num_labels, size_t length, Fn fn) {
  std::vector<int> y(length, 0);
  while (true) {
    fn(y);
    size_t i = length;
    while (i > 0 && ++y[i - 1] == num_labels) y[--i] = 0;
    if (i == 0) return;
  }
}

inline bool PathAllowed(const std::vector<int>& y) {
  std::optional<BioLabel> prev;
  for (int idx : y) {
    const BioLabel l = BioLabel::FromIndex(idx);
    if (!IsAllowedTransition(prev, l)) return false;
    prev = l;
  }
  return true;
}

inline double BruteLogZ(const crf::CrfModel& m,
                        const crf::EncodedSequence& seq) {
  double max = -std::numeric_limits<double>::infinity();
  std::vector<double> scores;
  ForEachPath(m.num_labels(), seq.size(), [&](const std::vector<int>& y) {
    scores.push_back(OracleScore(m, seq, y));
    max = std::max(max, scores.back());
  });
  double sum = 0.0;
  for (double s : scores) sum += std::exp(s - max);
  return max + std::log(sum);
}

// Best path; ties go to the path whose last label is lowest, then the
// second to last, and so on (the decoder's backpointer rule).
inline std::vector<int> BruteViterbi(const crf::CrfModel& m,
                                     const crf::EncodedSequence& seq,
                                     bool bio_constraints) {
  std::vector<int> best;
  double best_score = -std::numeric_limits<double>::infinity();
  ForEachPath(m.num_labels(), seq.size(), [&](const std::vector<int>& y) {
    if (bio_constraints && !PathAllowed(y)) return;
    const double s = OracleScore(m, seq, y);
    bool take = best.empty() || s > best_score;
    if (!take && s == best_score) {
      take = std::lexicographical_compare(y.rbegin(), y.rend(), best.rbegin(),
                                          best.rend());
    }
    if (take) {
      best = y;
      best_score = s;
    }
  });
  return best;
}

inline crf::Matrix BruteMarginals(const crf::CrfModel& m,
                                  const crf::EncodedSequence& seq) {
  const double log_z = BruteLogZ(m, seq);
  crf::Matrix out(seq.size(), m.num_labels());
  ForEachPath(m.num_labels(), seq.size(), [&](const std::vector<int>& y) {
    const double p = std::exp(OracleScore(m, seq, y) - log_z);
    for (size_t t = 0; t < y.size(); ++t) out(t, y[t]) += p;
  });
  return out;
}

// NLL of one sequence computed from the brute-force partition function.
inline double BruteNll(const crf::CrfModel& m, const crf::EncodedSequence& seq,
                       const std::vector<int>& y) {
  return BruteLogZ(m, seq) - OracleScore(m, seq, y);
}

}  // namespace testing
}  // namespace nswnorm

#endif  // NSWNORM_TESTS_CRF_TESTING_H_
