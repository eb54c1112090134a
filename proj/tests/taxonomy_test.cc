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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "nswnorm/errors.h"

namespace nswnorm {
namespace {

NswSpan Span(Tag tag, size_t first, size_t last) {
  return NswSpan{tag, first, last, ""};
}

TEST(TaxonomyTest, Counts) {
  EXPECT_EQ(AllTags().size(), 19u);
  EXPECT_EQ(AllBioLabels().size(), 39u);
  std::set<std::string> names;
  for (const auto& l : AllBioLabels()) names.insert(l.ToString());
  EXPECT_EQ(names.size(), 39u);
}

TEST(TaxonomyTest, Groups) {
  int counts[3] = {0, 0, 0};
  for (Tag t : AllTags()) ++counts[static_cast<int>(GroupOf(t))];
  EXPECT_EQ(counts[0], 12);
  EXPECT_EQ(counts[1], 3);
  EXPECT_EQ(counts[2], 4);
  EXPECT_EQ(GroupOf(Tag::kMoney), TagGroup::kOther);
}

TEST(TaxonomyTest, NamesRoundTrip) {
  for (Tag t : AllTags()) EXPECT_EQ(ParseTag(TagName(t)), t);
  for (const auto& l : AllBioLabels()) {
    EXPECT_EQ(BioLabel::Parse(l.ToString()), l);
    EXPECT_EQ(BioLabel::FromIndex(l.index()), l);
  }
  EXPECT_EQ(BioLabel::Parse("B-NTIM")->tag(), Tag::kNtim);
  EXPECT_FALSE(BioLabel::Parse("B-FOO").has_value());
  EXPECT_FALSE(BioLabel::Parse("X-NNUM").has_value());
  EXPECT_THROW(BioLabel::FromIndex(39), RangeError);
}

TEST(BioEncodeTest, Examples) {
  const auto o = BioLabel::Outside();
  EXPECT_EQ(BioEncode({Span(Tag::kNday, 1, 1)}, 4),
            (LabelSequence{o, BioLabel::Begin(Tag::kNday), o, o}));
  EXPECT_EQ(BioEncode({}, 3), (LabelSequence{o, o, o}));
  EXPECT_EQ(BioEncode({Span(Tag::kNdat, 0, 2)}, 3),
            (LabelSequence{BioLabel::Begin(Tag::kNdat),
                           BioLabel::Inside(Tag::kNdat),
                           BioLabel::Inside(Tag::kNdat)}));
}

TEST(BioEncodeTest, Errors) {
  EXPECT_THROW(BioEncode({Span(Tag::kNnum, 0, 1), Span(Tag::kNnum, 1, 2)}, 3),
               ValidationError);
  EXPECT_THROW(BioEncode({Span(Tag::kNnum, 2, 3)}, 3), ValidationError);
  EXPECT_THROW(BioEncode({Span(Tag::kNnum, 2, 1)}, 3), ValidationError);
}

TEST(BioDecodeTest, Examples) {
  const auto o = BioLabel::Outside();
  EXPECT_EQ(BioDecode({o, BioLabel::Begin(Tag::kNday), o, o}),
            std::vector<NswSpan>{Span(Tag::kNday, 1, 1)});
  // Orphan I is repaired to B.
  EXPECT_EQ(BioDecode({BioLabel::Inside(Tag::kNnum), o}),
            std::vector<NswSpan>{Span(Tag::kNnum, 0, 0)});
  EXPECT_TRUE(BioDecode({o, o}).empty());
  // I-X after B-Y starts a new span.
  EXPECT_EQ(BioDecode({BioLabel::Begin(Tag::kNnum),
                       BioLabel::Inside(Tag::kNdig)}),
            (std::vector<NswSpan>{Span(Tag::kNnum, 0, 0),
                                  Span(Tag::kNdig, 1, 1)}));
}

TEST(BioDecodeTest, FillsSurface) {
  const Sentence s = SentenceFromTokens({"Quý", "I/2020", "tăng"});
  const auto spans = BioDecode(
      {BioLabel::Begin(Tag::kNqua), BioLabel::Inside(Tag::kNqua),
       BioLabel::Outside()},
      s);
  ASSERT_EQ(spans.size(), 1u);
  EXPECT_EQ(spans[0].surface, "Quý I/2020");
}

TEST(WellFormedTest, Transitions) {
  const auto bn = BioLabel::Begin(Tag::kNnum);
  const auto in = BioLabel::Inside(Tag::kNnum);
  const auto id = BioLabel::Inside(Tag::kNdig);
  EXPECT_TRUE(IsWellFormed({bn, in, in}));
  EXPECT_FALSE(IsWellFormed({in}));
  EXPECT_FALSE(IsWellFormed({bn, id}));
  EXPECT_FALSE(IsWellFormed({BioLabel::Outside(), in}));
}

// Random valid span sets round-trip through encode/decode.
TEST(BioPropertyTest, RoundTrip) {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 1000; ++iter) {
    const size_t n = 1 + rng() % 20;
    std::vector<NswSpan> spans;
    size_t i = 0;
    while (i < n) {
      if (rng() % 3 == 0) {
        const size_t len = 1 + rng() % 3;
        const size_t last = std::min(n - 1, i + len - 1);
        spans.push_back(Span(AllTags()[rng() % kNumTags], i, last));
        i = last + 1;
      } else {
        ++i;
      }
    }
    const auto labels = BioEncode(spans, n);
    ASSERT_TRUE(IsWellFormed(labels));
    ASSERT_EQ(BioDecode(labels), spans);
  }
}

// Arbitrary (possibly ill-formed) sequences decode to disjoint spans that
// cover every non-O label.
TEST(BioPropertyTest, DecodeNeverOverlaps) {
  std::mt19937 rng(12);
  for (int iter = 0; iter < 2000; ++iter) {
    LabelSequence labels;
    const size_t n = rng() % 15;
    for (size_t i = 0; i < n; ++i) {
      labels.push_back(BioLabel::FromIndex(static_cast<int>(rng() % 39)));
    }
    const auto spans = BioDecode(labels);
    std::vector<int> cover(n, 0);
    for (const auto& s : spans) {
      ASSERT_LE(s.first, s.last);
      ASSERT_LT(s.last, n);
      for (size_t k = s.first; k <= s.last; ++k) ++cover[k];
    }
    for (size_t k = 0; k < n; ++k) {
      ASSERT_EQ(cover[k], labels[k].is_outside() ? 0 : 1);
    }
  }
}

}  // namespace
}  // namespace nswnorm
