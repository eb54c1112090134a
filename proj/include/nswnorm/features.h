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

// Hand-crafted token features for the CRF tagger.
//
// Identifiers are "name[offset]=value" (windowed features), "name=value"
// (position independent) or "BOS[-k]"/"EOS[+k]" for window slots that fall
// outside the sentence. Offsets are printed with an explicit sign except 0.
//
// Template version 1, for every offset o in -2..+2:
//   w[o]          lowercased token
//   prefixK[o]    first K code points, K = 1..3 (only when length >= K)
//   suffixK[o]    last K code points, K = 1..3 (only when length >= K)
//   is_upper[o]   all letters uppercase, at least one letter
//   is_cap[o]     first code point is an uppercase letter
//   is_digit[o]   all ASCII digits
//   contains_digit[o], contains_letter[o], contains_punct[o]
//   shape[o]      X/x/d classes, other characters verbatim, runs collapsed
// plus len[0] in {1,2,3,4+} and the constant bias=1.
// Boolean features are only emitted when true (value "1").

#ifndef NSWNORM_FEATURES_H_
#define NSWNORM_FEATURES_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nswnorm/preprocess.h"

namespace nswnorm {

inline constexpr int kFeatureTemplateVersion = 1;
inline constexpr int kFeatureWindow = 2;

// Sorted, duplicate free.
using FeatureSet = std::vector<std::string>;

// Throws RangeError when position >= sentence.size().
FeatureSet ExtractFeatures(const Sentence& sentence, size_t position);

// Features for every position.
std::vector<FeatureSet> ExtractSentenceFeatures(const Sentence& sentence);

std::string WordShape(std::string_view token);

struct ParsedFeature {
  std::string name;
  std::optional<int> offset;
  std::string value;

  bool operator==(const ParsedFeature&) const = default;
};

std::optional<ParsedFeature> ParseFeatureId(std::string_view id);

}  // namespace nswnorm

#endif  // NSWNORM_FEATURES_H_
