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

// Seeded synthetic corpus: carrier sentences with NSW slots, gold BIO labels
// and gold spoken forms.

#ifndef NSWNORM_GENERATOR_H_
#define NSWNORM_GENERATOR_H_

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nswnorm/corpus_io.h"
#include "nswnorm/expanders.h"
#include "nswnorm/resources.h"
#include "nswnorm/taxonomy.h"

namespace nswnorm {

// Share of NSW spans per group (Number, Letter, Other).
inline constexpr std::array<double, 3> kGroupMix = {0.5650, 0.3642, 0.0708};

struct SyntheticCorpus {
  TrainingCorpus corpus;                     // tokens + gold BIO labels
  std::vector<ParallelRecord> parallel;      // written + gold spoken
  std::vector<std::vector<NswSpan>> spans;   // inserted NSWs per sentence
};

// Deterministic for a given (seed, size, resources). Gold spoken forms are
// computed with Expand() using `options`. Throws ValidationError if size < 1.
SyntheticCorpus GenerateSyntheticCorpus(uint64_t seed, int size,
                                        const Resources& resources,
                                        const ExpandOptions& options = {});

// Fraction of NSW spans in each group.
std::array<double, 3> GroupHistogram(
    const std::vector<std::vector<NswSpan>>& spans);

// std::mt19937_64 with bounded draws of our own: the standard distributions
// are implementation-defined, which would break byte-identical output
// across standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}
  uint64_t Next();
  // Uniform in [0, n), n > 0, by rejection.
  uint64_t Below(uint64_t n);
  // Uniform in [lo, hi].
  int Range(int lo, int hi);
  double Unit();
  bool Chance(double p) { return Unit() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace nswnorm

#endif  // NSWNORM_GENERATOR_H_
