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

// The 19-class non-standard word taxonomy and its BIO label alphabet.
//
// Label ordering (also the Viterbi tie-break order):
//   index 0          O
//   index 1 + 2*t    B-<tag t>
//   index 2 + 2*t    I-<tag t>
// with tags ordered as in the Tag enum below.

#ifndef NSWNORM_TAXONOMY_H_
#define NSWNORM_TAXONOMY_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nswnorm/preprocess.h"

namespace nswnorm {

enum class Tag : uint8_t {
  // Number group.
  kNtim,
  kNdat,
  kNday,
  kNmon,
  kNqua,
  kNnum,
  kNdig,
  kNscr,
  kNrng,
  kNper,
  kNfrc,
  kNver,
  // Letter group.
  kLabb,
  kLwrd,
  kLseq,
  // Other group.
  kUrle,
  kMoney,
  kRoma,
  kMea,
};

inline constexpr int kNumTags = 19;
inline constexpr int kNumBioLabels = 1 + 2 * kNumTags;

enum class TagGroup : uint8_t { kNumber, kLetter, kOther };

const std::array<Tag, kNumTags>& AllTags();
std::string_view TagName(Tag tag);
std::optional<Tag> ParseTag(std::string_view name);
TagGroup GroupOf(Tag tag);
std::string_view GroupName(TagGroup group);

class BioLabel {
 public:
  enum class Prefix : uint8_t { kO, kB, kI };

  constexpr BioLabel() = default;
  static constexpr BioLabel Outside() { return BioLabel(); }
  static constexpr BioLabel Begin(Tag tag) { return BioLabel(Prefix::kB, tag); }
  static constexpr BioLabel Inside(Tag tag) {
    return BioLabel(Prefix::kI, tag);
  }
  // Throws RangeError outside [0, kNumBioLabels).
  static BioLabel FromIndex(int index);
  static std::optional<BioLabel> Parse(std::string_view text);

  Prefix prefix() const { return prefix_; }
  // Meaningless for O.
  Tag tag() const { return tag_; }
  bool is_outside() const { return prefix_ == Prefix::kO; }
  int index() const;
  std::string ToString() const;

  bool operator==(const BioLabel& other) const {
    return prefix_ == other.prefix_ && (is_outside() || tag_ == other.tag_);
  }

 private:
  constexpr BioLabel(Prefix prefix, Tag tag) : prefix_(prefix), tag_(tag) {}

  Prefix prefix_ = Prefix::kO;
  Tag tag_ = Tag::kNtim;
};

using LabelSequence = std::vector<BioLabel>;

// All 39 labels in index order.
const std::vector<BioLabel>& AllBioLabels();

// True when `next` may follow `prev` in a well-formed sequence; `prev` is
// nullopt at the sentence start.
bool IsAllowedTransition(std::optional<BioLabel> prev, BioLabel next);
bool IsWellFormed(const LabelSequence& labels);

struct NswSpan {
  Tag tag = Tag::kNtim;
  size_t first = 0;  // token index
  size_t last = 0;   // inclusive
  std::string surface;

  bool operator==(const NswSpan&) const = default;
};

// Throws ValidationError on overlapping, unsorted or out-of-range spans.
LabelSequence BioEncode(const std::vector<NswSpan>& spans, size_t length);

// Maximal B/I runs become spans. An I-X that does not continue an X run is
// read as B-X. Surface texts are left empty.
std::vector<NswSpan> BioDecode(const LabelSequence& labels);

// Same, filling surface text with the covered tokens joined by spaces.
std::vector<NswSpan> BioDecode(const LabelSequence& labels,
                               const Sentence& sentence);

std::string SpanSurface(const Sentence& sentence, size_t first, size_t last);

}  // namespace nswnorm

#endif  // NSWNORM_TAXONOMY_H_
