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

#ifndef NSWNORM_EVALUATION_H_
#define NSWNORM_EVALUATION_H_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "nswnorm/taxonomy.h"

namespace nswnorm {

struct PrfCounts {
  long tp = 0;
  long fp = 0;
  long fn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  // tp + fp == 0 (resp. tp + fn == 0); the rate is then reported as 0.
  bool precision_undefined = false;
  bool recall_undefined = false;

  // Fills the rates from the counts.
  void Finalize();
};

struct PrfReport {
  std::array<PrfCounts, kNumTags> per_tag;
  // Pooled over all tags.
  PrfCounts micro;
  // Unweighted means over the tags that occur in gold or prediction.
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f1 = 0.0;
  int macro_tags = 0;
  // Token-level label confusion, confusion[gold][predicted].
  std::vector<std::vector<long>> confusion;

  const PrfCounts& of(Tag tag) const {
    return per_tag[static_cast<int>(tag)];
  }
  // Table with one row per tag present, then micro and macro rows.
  std::string ToString() const;
};

// Exact-span scoring: a predicted span counts only if tag and both
// boundaries match a gold span. Throws ValidationError if the sentence
// counts or lengths differ.
PrfReport SpanPrf(const std::vector<LabelSequence>& gold,
                  const std::vector<LabelSequence>& predicted);

struct SerReport {
  long errors = 0;
  long total = 0;
  double rate = 0.0;

  // "SER 8.15% (149/1828)".
  std::string ToString() const;
};

SerReport MakeSerReport(long errors, long total);

// Collapses whitespace runs to one space and trims.
std::string NormalizeWhitespace(std::string_view text);

// A sentence is wrong iff its whitespace-normalized prediction differs from
// the whitespace-normalized gold (case-sensitive). Throws ValidationError on
// a count mismatch.
SerReport SentenceErrorRate(const std::vector<std::string>& gold,
                            const std::vector<std::string>& predicted);

}  // namespace nswnorm

#endif  // NSWNORM_EVALUATION_H_
