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

#include "nswnorm/crf_train.h"

#include <omp.h>

#include <algorithm>
#include <cstdio>
#include <unordered_map>

#include "nswnorm/errors.h"
#include "nswnorm/features.h"

namespace nswnorm {
namespace crf {
namespace {

constexpr size_t kMaxBlocks = 16;

double AddL2(std::span<const double> w, double l2, std::span<double> gradient) {
  if (l2 == 0.0) return 0.0;
  double norm2 = 0.0;
  for (size_t i = 0; i < w.size(); ++i) {
    norm2 += w[i] * w[i];
    gradient[i] += l2 * w[i];
  }
  return 0.5 * l2 * norm2;
}

std::string DescribeOptimizer(const TrainConfig& config, int iterations,
                              const std::string& stop_reason) {
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "owlqn memory=%d l1=%g l2=%g max_iter=%d tol=%g period=%d "
                "iterations=%d stop=%s",
                config.memory, config.l1, config.l2, config.max_iterations,
                config.tolerance, config.period, iterations,
                stop_reason.c_str());
  return buf;
}

}  // namespace

double CorpusObjective(const CrfModel& model,
                       const std::vector<TrainingInstance>& instances,
                       double l2, std::span<double> gradient) {
  const size_t n = instances.size();
  const size_t P = model.num_parameters();
  const size_t blocks = std::min(kMaxBlocks, std::max<size_t>(n, 1));
  std::vector<std::vector<double>> block_grad(blocks);
  std::vector<double> block_nll(blocks, 0.0);

#pragma omp parallel for schedule(dynamic, 1)
  for (long b = 0; b < static_cast<long>(blocks); ++b) {
    auto& g = block_grad[b];
    g.assign(P, 0.0);
    const size_t first = n * b / blocks;
    const size_t last = n * (b + 1) / blocks;
    double nll = 0.0;
    for (size_t i = first; i < last; ++i) {
      nll += AccumulateNllGradient(model, instances[i].sequence,
                                   instances[i].labels, g);
    }
    block_nll[b] = nll;
  }

  std::fill(gradient.begin(), gradient.end(), 0.0);
  double total = 0.0;
  for (size_t b = 0; b < blocks; ++b) {
    total += block_nll[b];
    const auto& g = block_grad[b];
#pragma omp parallel for schedule(static)
    for (long k = 0; k < static_cast<long>(P); ++k) gradient[k] += g[k];
  }
  return total + AddL2(model.weights(), l2, gradient);
}

namespace reference {

double CorpusObjective(const CrfModel& model,
                       const std::vector<TrainingInstance>& instances,
                       double l2, std::span<double> gradient) {
  std::fill(gradient.begin(), gradient.end(), 0.0);
  double total = 0.0;
  for (const auto& inst : instances) {
    total += reference::AccumulateNllGradient(model, inst.sequence,
                                              inst.labels, gradient);
  }
  return total + AddL2(model.weights(), l2, gradient);
}

}  // namespace reference

CrfModel BuildModelStructure(const TrainingCorpus& corpus,
                             std::vector<TrainingInstance>* instances) {
  std::vector<std::string> attributes;
  std::unordered_map<std::string, int> index;
  std::vector<std::vector<int>> links;
  instances->clear();
  instances->reserve(corpus.size());
  for (const auto& [sentence, labels] : corpus) {
    TrainingInstance inst;
    inst.sequence.attributes.resize(sentence.size());
    for (size_t t = 0; t < sentence.size(); ++t) {
      const int gold = labels[t].index();
      inst.labels.push_back(gold);
      for (auto& name : ExtractFeatures(sentence, t)) {
        auto [it, inserted] =
            index.emplace(name, static_cast<int>(attributes.size()));
        if (inserted) {
          attributes.push_back(name);
          links.emplace_back();
        }
        links[it->second].push_back(gold);
        inst.sequence.attributes[t].push_back(it->second);
      }
    }
    instances->push_back(std::move(inst));
  }
  CrfModel model(kNumBioLabels, std::move(attributes), std::move(links));
  model.set_template_version(kFeatureTemplateVersion);
  model.set_bio_constraints(true);
  return model;
}

TrainResult TrainModel(CrfModel model,
                       const std::vector<TrainingInstance>& instances,
                       const TrainConfig& config) {
  if (instances.empty()) throw ValidationError("empty training corpus");
  if (config.l1 < 0.0 || config.l2 < 0.0) {
    throw ValidationError("regularization coefficients must be >= 0");
  }
  if (config.num_threads > 0) omp_set_num_threads(config.num_threads);

  optim::OwlqnOptions options;
  options.l1 = config.l1;
  options.memory = config.memory;
  options.max_iterations = config.max_iterations;
  options.tolerance = config.tolerance;
  options.period = config.period;

  CrfModel* target = &model;
  const optim::Objective objective = [&](std::span<const double> x,
                                         std::span<double> grad) {
    auto w = target->mutable_weights();
    std::copy(x.begin(), x.end(), w.begin());
    return CorpusObjective(*target, instances, config.l2, grad);
  };

  std::vector<double> x0(model.weights().begin(), model.weights().end());
  auto opt = optim::MinimizeOwlqn(objective, std::move(x0), options,
                                  config.on_iteration);
  auto w = model.mutable_weights();
  std::copy(opt.x.begin(), opt.x.end(), w.begin());
  model.set_optimizer_description(
      DescribeOptimizer(config, opt.iterations, opt.stop_reason));

  TrainResult result;
  result.model = std::move(model);
  result.objective_history = std::move(opt.history);
  result.iterations = opt.iterations;
  result.stop_reason = std::move(opt.stop_reason);
  return result;
}

TrainResult Train(const TrainingCorpus& corpus, const TrainConfig& config) {
  if (corpus.empty()) throw ValidationError("empty training corpus");
  for (size_t i = 0; i < corpus.size(); ++i) {
    const auto& [sentence, labels] = corpus[i];
    if (sentence.empty() || labels.size() != sentence.size()) {
      throw ValidationError("training sentence " + std::to_string(i) +
                            " is empty or its label count differs from its "
                            "token count");
    }
    if (!IsWellFormed(labels)) {
      throw ValidationError("training sentence " + std::to_string(i) +
                            " has an ill-formed BIO label sequence");
    }
  }
  std::vector<TrainingInstance> instances;
  CrfModel model = BuildModelStructure(corpus, &instances);
  return TrainModel(std::move(model), instances, config);
}

}  // namespace crf
}  // namespace nswnorm
