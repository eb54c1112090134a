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

#ifndef NSWNORM_CRF_TRAIN_H_
#define NSWNORM_CRF_TRAIN_H_

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nswnorm/crf.h"
#include "nswnorm/owlqn.h"
#include "nswnorm/preprocess.h"
#include "nswnorm/taxonomy.h"

namespace nswnorm {
namespace crf {

struct TrainConfig {
  double l1 = 0.1;
  double l2 = 0.1;
  int max_iterations = 100;
  // Relative objective decrease over `period` iterations.
  double tolerance = 1e-5;
  int period = 10;
  int memory = 6;
  // 0 keeps the OpenMP default.
  int num_threads = 0;
  std::function<void(const optim::IterationInfo&)> on_iteration;
};

struct TrainingInstance {
  EncodedSequence sequence;
  std::vector<int> labels;
};

using TrainingCorpus = std::vector<std::pair<Sentence, LabelSequence>>;

struct TrainResult {
  CrfModel model;
  std::vector<double> objective_history;
  int iterations = 0;
  std::string stop_reason;
};

// sum_i NLL_i(w) + l2/2 * |w|^2 and its gradient. Sentences are split into
// a fixed number of contiguous blocks that are evaluated in parallel and
// summed in block order, so the result does not depend on the thread count.
double CorpusObjective(const CrfModel& model,
                       const std::vector<TrainingInstance>& instances,
                       double l2, std::span<double> gradient);

namespace reference {

// Serial left-to-right sum over the reference per-sentence gradient.
double CorpusObjective(const CrfModel& model,
                       const std::vector<TrainingInstance>& instances,
                       double l2, std::span<double> gradient);

}  // namespace reference

// Creates one emission feature per (attribute, gold label) pair seen in the
// data. Fills `instances` with the encoded corpus.
CrfModel BuildModelStructure(const TrainingCorpus& corpus,
                             std::vector<TrainingInstance>* instances);

// Minimizes sum NLL + l2/2 |w|^2 + l1 |w|_1 with OWL-QN starting from the
// weights already in `model`. Deterministic for a fixed instance order.
TrainResult TrainModel(CrfModel model,
                       const std::vector<TrainingInstance>& instances,
                       const TrainConfig& config);

// Feature extraction + structure + optimization for the 39-label BIO
// tagger. Throws ValidationError on an empty or malformed corpus.
TrainResult Train(const TrainingCorpus& corpus, const TrainConfig& config);

}  // namespace crf
}  // namespace nswnorm

#endif  // NSWNORM_CRF_TRAIN_H_
