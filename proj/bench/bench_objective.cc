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

// Corpus objective and batch normalization: OpenMP kernels against the
// serial references.

#include <benchmark/benchmark.h>

#include <vector>

#include "nswnorm/crf_train.h"
#include "nswnorm/generator.h"
#include "nswnorm/pipeline.h"

namespace nswnorm {
namespace {

struct Fixture {
  Fixture() : resources(Resources::Load(Resources::DefaultDirectory())) {
    const SyntheticCorpus data = GenerateSyntheticCorpus(1, 1000, resources);
    model = crf::BuildModelStructure(data.corpus, &instances);
    for (const auto& r : data.parallel) sentences.push_back(r.written);
    crf::TrainConfig config;
    config.max_iterations = 20;
    trained = crf::Train(data.corpus, config).model;
  }
  Resources resources;
  crf::CrfModel model;
  crf::CrfModel trained;
  std::vector<crf::TrainingInstance> instances;
  std::vector<std::string> sentences;
};

Fixture& Data() {
  static Fixture* f = new Fixture();
  return *f;
}

void BM_ObjectiveParallel(benchmark::State& state) {
  auto& d = Data();
  std::vector<double> g(d.model.num_parameters());
  for (auto _ : state) {
    benchmark::DoNotOptimize(crf::CorpusObjective(d.model, d.instances, 0.1, g));
  }
}
BENCHMARK(BM_ObjectiveParallel)->Unit(benchmark::kMillisecond);

void BM_ObjectiveReference(benchmark::State& state) {
  auto& d = Data();
  std::vector<double> g(d.model.num_parameters());
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        crf::reference::CorpusObjective(d.model, d.instances, 0.1, g));
  }
}
BENCHMARK(BM_ObjectiveReference)->Unit(benchmark::kMillisecond);

void BM_NormalizeBatch(benchmark::State& state) {
  auto& d = Data();
  const CrfTagger tagger(d.trained);
  const Normalizer n(tagger, d.resources);
  for (auto _ : state) benchmark::DoNotOptimize(n.NormalizeBatch(d.sentences));
}
BENCHMARK(BM_NormalizeBatch)->Unit(benchmark::kMillisecond);

void BM_NormalizeBatchReference(benchmark::State& state) {
  auto& d = Data();
  const CrfTagger tagger(d.trained);
  const Normalizer n(tagger, d.resources);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::NormalizeBatch(n, d.sentences));
  }
}
BENCHMARK(BM_NormalizeBatchReference)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace nswnorm

BENCHMARK_MAIN();
