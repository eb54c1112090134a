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

#include "nswnorm/taxonomy.h"

#include <string>

#include "nswnorm/errors.h"

namespace nswnorm {
namespace {

constexpr std::string_view kTagNames[kNumTags] = {
    "NTIM", "NDAT", "NDAY", "NMON", "NQUA", "NNUM", "NDIG",
    "NSCR", "NRNG", "NPER", "NFRC", "NVER", "LABB", "LWRD",
    "LSEQ", "URLE", "MONEY", "ROMA", "MEA",
};

}  // namespace

const std::array<Tag, kNumTags>& AllTags() {
  static const auto tags = [] {
    std::array<Tag, kNumTags> all{};
    for (int i = 0; i < kNumTags; ++i) all[i] = static_cast<Tag>(i);
    return all;
  }();
  return tags;
}

std::string_view TagName(Tag tag) { return kTagNames[static_cast<int>(tag)]; }

std::optional<Tag> ParseTag(std::string_view name) {
  for (int i = 0; i < kNumTags; ++i) {
    if (kTagNames[i] == name) return static_cast<Tag>(i);
  }
  return std::nullopt;
}

TagGroup GroupOf(Tag tag) {
  if (tag <= Tag::kNver) return TagGroup::kNumber;
  if (tag <= Tag::kLseq) return TagGroup::kLetter;
  return TagGroup::kOther;
}

std::string_view GroupName(TagGroup group) {
  switch (group) {
    case TagGroup::kNumber:
      return "Number";
    case TagGroup::kLetter:
      return "Letter";
    case TagGroup::kOther:
      return "Other";
  }
  return "";
}

BioLabel BioLabel::FromIndex(int index) {
  if (index < 0 || index >= kNumBioLabels) {
    throw RangeError("BIO label index out of range: " + std::to_string(index));
  }
  if (index == 0) return Outside();
  const Tag tag = static_cast<Tag>((index - 1) / 2);
  return (index - 1) % 2 == 0 ? Begin(tag) : Inside(tag);
}

std::optional<BioLabel> BioLabel::Parse(std::string_view text) {
  if (text == "O") return Outside();
  if (text.size() < 3 || text[1] != '-') return std::nullopt;
  const auto tag = ParseTag(text.substr(2));
  if (!tag) return std::nullopt;
  if (text[0] == 'B') return Begin(*tag);
  if (text[0] == 'I') return Inside(*tag);
  return std::nullopt;
}

int BioLabel::index() const {
  if (is_outside()) return 0;
  return 1 + 2 * static_cast<int>(tag_) + (prefix_ == Prefix::kI ? 1 : 0);
}

std::string BioLabel::ToString() const {
  if (is_outside()) return "O";
  std::string out = prefix_ == Prefix::kB ? "B-" : "I-";
  out += TagName(tag_);
  return out;
}

const std::vector<BioLabel>& AllBioLabels() {
  static const auto labels = [] {
    std::vector<BioLabel> all;
    for (int i = 0; i < kNumBioLabels; ++i) all.push_back(BioLabel::FromIndex(i));
    return all;
  }();
  return labels;
}

bool IsAllowedTransition(std::optional<BioLabel> prev, BioLabel next) {
  if (next.prefix() != BioLabel::Prefix::kI) return true;
  return prev && !prev->is_outside() && prev->tag() == next.tag();
}

bool IsWellFormed(const LabelSequence& labels) {
  std::optional<BioLabel> prev;
  for (const auto& label : labels) {
    if (!IsAllowedTransition(prev, label)) return false;
    prev = label;
  }
  return true;
}

LabelSequence BioEncode(const std::vector<NswSpan>& spans, size_t length) {
  LabelSequence labels(length, BioLabel::Outside());
  size_t next_free = 0;
  for (const auto& span : spans) {
    if (span.first > span.last || span.last >= length) {
      throw ValidationError("span [" + std::to_string(span.first) + ", " +
                            std::to_string(span.last) +
                            "] outside sentence of length " +
                            std::to_string(length));
    }
    if (span.first < next_free) {
      throw ValidationError("overlapping or unsorted span starting at token " +
                            std::to_string(span.first));
    }
    labels[span.first] = BioLabel::Begin(span.tag);
    for (size_t i = span.first + 1; i <= span.last; ++i) {
      labels[i] = BioLabel::Inside(span.tag);
    }
    next_free = span.last + 1;
  }
  return labels;
}

std::vector<NswSpan> BioDecode(const LabelSequence& labels) {
  std::vector<NswSpan> spans;
  for (size_t i = 0; i < labels.size(); ++i) {
    const BioLabel& label = labels[i];
    if (label.is_outside()) continue;
    const bool continues = label.prefix() == BioLabel::Prefix::kI &&
                           !spans.empty() && spans.back().last + 1 == i &&
                           spans.back().tag == label.tag();
    if (continues) {
      spans.back().last = i;
    } else {
      spans.push_back(NswSpan{label.tag(), i, i, {}});
    }
  }
  return spans;
}

std::vector<NswSpan> BioDecode(const LabelSequence& labels,
                               const Sentence& sentence) {
  if (labels.size() != sentence.size()) {
    throw ValidationError("label sequence length " +
                          std::to_string(labels.size()) +
                          " does not match token count " +
                          std::to_string(sentence.size()));
  }
  auto spans = BioDecode(labels);
  for (auto& span : spans) {
    span.surface = SpanSurface(sentence, span.first, span.last);
  }
  return spans;
}

std::string SpanSurface(const Sentence& sentence, size_t first, size_t last) {
  std::string out;
  for (size_t i = first; i <= last && i < sentence.size(); ++i) {
    if (i > first) out.push_back(' ');
    out += sentence.text(i);
  }
  return out;
}

}  // namespace nswnorm
