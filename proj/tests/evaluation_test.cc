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

#include "nswnorm/evaluation.h"

#include <gtest/gtest.h>

#include <random>

#include "nswnorm/errors.h"

namespace nswnorm {
namespace {

const BioLabel O = BioLabel::Outside();
const BioLabel kBNum = BioLabel::Begin(Tag::kNnum);
const BioLabel kBDig = BioLabel::Begin(Tag::kNdig);

TEST(SpanPrfTest, Perfect) {
  const std::vector<LabelSequence> gold = {{O, kBNum, O},
                                           {kBDig, BioLabel::Inside(Tag::kNdig)}};
  const PrfReport r = SpanPrf(gold, gold);
  EXPECT_EQ(r.micro.f1, 1.0);
  EXPECT_EQ(r.of(Tag::kNnum).f1, 1.0);
  EXPECT_EQ(r.of(Tag::kNdig).f1, 1.0);
  EXPECT_EQ(r.macro_f1, 1.0);
  EXPECT_EQ(r.macro_tags, 2);
}

// Two gold NNUM spans; one found, one predicted as NDIG.
TEST(SpanPrfTest, HandCounted) {
  const std::vector<LabelSequence> gold = {{kBNum, O, kBNum}};
  const std::vector<LabelSequence> pred = {{kBNum, O, kBDig}};
  const PrfReport r = SpanPrf(gold, pred);
  EXPECT_EQ(r.of(Tag::kNnum).tp, 1);
  EXPECT_EQ(r.of(Tag::kNnum).fn, 1);
  EXPECT_DOUBLE_EQ(r.of(Tag::kNnum).precision, 1.0);
  EXPECT_DOUBLE_EQ(r.of(Tag::kNnum).recall, 0.5);
  EXPECT_DOUBLE_EQ(r.of(Tag::kNdig).precision, 0.0);
  EXPECT_FALSE(r.of(Tag::kNdig).precision_undefined);
  EXPECT_EQ(r.confusion[kBNum.index()][kBDig.index()], 1);
}

TEST(SpanPrfTest, BoundaryMismatchIsWrong) {
  const std::vector<LabelSequence> gold = {
      {kBNum, BioLabel::Inside(Tag::kNnum)}};
  const std::vector<LabelSequence> pred = {{kBNum, O}};
  const PrfReport r = SpanPrf(gold, pred);
  EXPECT_EQ(r.micro.tp, 0);
  EXPECT_EQ(r.micro.fp, 1);
  EXPECT_EQ(r.micro.fn, 1);
}

TEST(SpanPrfTest, EmptyPrediction) {
  const std::vector<LabelSequence> gold = {{kBNum, O, kBDig}};
  const std::vector<LabelSequence> pred = {{O, O, O}};
  const PrfReport r = SpanPrf(gold, pred);
  EXPECT_EQ(r.micro.recall, 0.0);
  EXPECT_EQ(r.micro.precision, 0.0);
  EXPECT_TRUE(r.micro.precision_undefined);
  EXPECT_TRUE(r.of(Tag::kNnum).precision_undefined);
  EXPECT_FALSE(r.of(Tag::kNnum).recall_undefined);
}

TEST(SpanPrfTest, Misalignment) {
  EXPECT_THROW(SpanPrf({{O}}, {}), ValidationError);
  EXPECT_THROW(SpanPrf({{O}}, {{O, O}}), ValidationError);
}

// Reported micro-F1 equals F1 recomputed from its own counts, and the
// counts equal a set-based recount.
TEST(SpanPrfTest, RandomConsistency) {
  std::mt19937 rng(31);
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<LabelSequence> gold, pred;
    long tp = 0, ng = 0, np = 0;
    for (int s = 0; s < 5; ++s) {
      LabelSequence g, p;
      const size_t n = 1 + rng() % 8;
      for (size_t i = 0; i < n; ++i) {
        g.push_back(BioLabel::FromIndex(static_cast<int>(rng() % 5)));
        p.push_back(BioLabel::FromIndex(static_cast<int>(rng() % 5)));
      }
      const auto gs = BioDecode(g);
      const auto ps = BioDecode(p);
      ng += gs.size();
      np += ps.size();
      for (const auto& a : ps) {
        for (const auto& b : gs) tp += a == b;
      }
      gold.push_back(g);
      pred.push_back(p);
    }
    const PrfReport r = SpanPrf(gold, pred);
    ASSERT_EQ(r.micro.tp, tp);
    ASSERT_EQ(r.micro.tp + r.micro.fp, np);
    ASSERT_EQ(r.micro.tp + r.micro.fn, ng);
    const double p = r.micro.tp + r.micro.fp
                         ? double(r.micro.tp) / (r.micro.tp + r.micro.fp)
                         : 0.0;
    const double rc = r.micro.tp + r.micro.fn
                          ? double(r.micro.tp) / (r.micro.tp + r.micro.fn)
                          : 0.0;
    const double f1 = p + rc > 0 ? 2 * p * rc / (p + rc) : 0.0;
    ASSERT_NEAR(r.micro.f1, f1, 1e-9);
  }
}

TEST(SerTest, Arithmetic) {
  EXPECT_EQ(MakeSerReport(149, 1828).ToString(), "SER 8.15% (149/1828)");
  EXPECT_NEAR(MakeSerReport(149, 1828).rate, 149.0 / 1828.0, 1e-15);
  EXPECT_EQ(MakeSerReport(0, 5).ToString(), "SER 0.00% (0/5)");
}

TEST(SerTest, InjectedErrors) {
  std::vector<std::string> gold, pred;
  for (int i = 0; i < 100; ++i) {
    gold.push_back("câu số " + std::to_string(i));
    pred.push_back(i % 12 == 5 && i < 96 ? "sai" : gold.back());
  }
  const SerReport r = SentenceErrorRate(gold, pred);
  EXPECT_EQ(r.errors, 8);
  EXPECT_EQ(r.ToString(), "SER 8.00% (8/100)");
}

TEST(SerTest, WhitespaceInvariantCaseSensitive) {
  const std::vector<std::string> gold = {"a b  c", "X"};
  EXPECT_EQ(SentenceErrorRate(gold, {" a  b c ", "X"}).errors, 0);
  EXPECT_EQ(SentenceErrorRate(gold, {"a b c", "x"}).errors, 1);
  EXPECT_THROW(SentenceErrorRate(gold, {"a"}), ValidationError);
  EXPECT_EQ(NormalizeWhitespace("\t a \n b "), "a b");
}

}  // namespace
}  // namespace nswnorm
