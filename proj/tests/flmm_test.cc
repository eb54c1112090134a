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

#include "nswnorm/flmm.h"

#include <gtest/gtest.h>

#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "nswnorm/errors.h"
#include "nswnorm/resources.h"
#include "nswnorm/utf8.h"

namespace nswnorm {
namespace {

std::u32string Lower(std::u32string s) {
  for (char32_t& c : s) c = utf8::ToLower(c);
  return s;
}

// Unoptimized reference: full-length windows, padded matches, the trailing
// "start < len" step, then whitespace normalization.
std::string LiteralFlmm(const std::set<std::u32string>& lexicon,
                        std::string_view s) {
  const std::u32string tokens = utf8::Decode(s);
  std::vector<std::string> result;
  const long min_window = 1;
  const long max_window = static_cast<long>(tokens.size());
  long start = 0;
  bool gotcha = false;
  while (start <= static_cast<long>(tokens.size()) - min_window) {
    gotcha = false;
    for (long w = max_window; w > min_window - 1; --w) {
      const long end = start + w - 1;
      if (end >= static_cast<long>(tokens.size())) continue;  // short slice
      const std::u32string candidate = tokens.substr(start, w);
      if (lexicon.count(Lower(candidate))) {
        result.push_back(" " + utf8::Encode(candidate) + " ");
        start = end + 1;
        gotcha = true;
        break;
      }
    }
    if (!gotcha) {
      result.push_back(utf8::Encode(tokens[start]));
      start = start + 1;
    }
  }
  if (start < static_cast<long>(tokens.size())) {
    result.push_back(utf8::Encode(tokens[start]));
  }
  std::string joined;
  for (const auto& r : result) joined += r;
  std::istringstream words(joined);
  std::string word, out;
  while (words >> word) out += (out.empty() ? "" : " ") + word;
  return out;
}

Lexicon Make(const std::vector<std::string>& entries) {
  return Lexicon(entries);
}

TEST(FlmmTest, PublishedExamples) {
  EXPECT_EQ(SegmentString(Make({"phong", "dao", "tao"}), "phongdaotao"),
            "phong dao tao");
  EXPECT_EQ(SegmentString(Make({"vin", "vi", "na", "sun", "a"}), "vinasun"),
            "vin a sun");
  EXPECT_EQ(SegmentString(Make({"bach", "bac", "hoa", "oa"}), "bachoa"),
            "bach oa");
  EXPECT_EQ(SegmentString(Make({}), "x"), "x");
}

TEST(FlmmTest, CaseInsensitiveCasePreserving) {
  EXPECT_EQ(SegmentString(Make({"vin", "vi", "na", "sun", "a"}), "Vinasun"),
            "Vin a sun");
  EXPECT_TRUE(Make({"Hà"}).Contains("hà"));
}

TEST(FlmmTest, PassthroughStaysGlued) {
  EXPECT_EQ(SegmentString(Make({}), "xyz"), "xyz");
  EXPECT_EQ(SegmentString(Make({"an"}), "xanh"), "x an h");
  const Segmentation seg = FlmmSegment(Make({"an"}), "xanh");
  ASSERT_EQ(seg.size(), 3u);
  EXPECT_FALSE(seg[0].matched);
  EXPECT_TRUE(seg[1].matched);
}

TEST(FlmmTest, Errors) {
  EXPECT_THROW(FlmmSegment(Make({"a"}), "a b"), ValidationError);
  Lexicon lex;
  EXPECT_THROW(lex.Add(""), ValidationError);
  EXPECT_THROW(lex.Add("a b"), ValidationError);
  EXPECT_TRUE(lex.Add("Ab"));
  EXPECT_FALSE(lex.Add("aB"));
  EXPECT_TRUE(FlmmSegment(lex, "").empty());
}

TEST(FlmmTest, WordListAddsStrippedForms) {
  std::istringstream in("# comment\nphòng đào tạo\n\nnhà\n");
  const Lexicon lex = Lexicon::Parse(in);
  EXPECT_TRUE(lex.Contains("phòng"));
  EXPECT_TRUE(lex.Contains("phong"));
  EXPECT_TRUE(lex.Contains("nha"));
  EXPECT_EQ(SegmentString(lex, "phongdaotao"), "phong dao tao");
}

// Random lexicons over a tiny alphabet make overlapping matches common.
TEST(FlmmPropertyTest, Fuzz) {
  std::mt19937 rng(23);
  const std::u32string alphabet = U"abnưA";
  for (int iter = 0; iter < 10000; ++iter) {
    std::set<std::u32string> entries;
    std::vector<std::string> raw;
    const int n = static_cast<int>(rng() % 8);
    for (int k = 0; k < n; ++k) {
      std::u32string e;
      const int len = 1 + static_cast<int>(rng() % 4);
      for (int c = 0; c < len; ++c) e += alphabet[rng() % alphabet.size()];
      raw.push_back(utf8::Encode(e));
      entries.insert(Lower(e));
    }
    const Lexicon lex(raw);
    std::u32string s32;
    const int len = static_cast<int>(rng() % 14);
    for (int c = 0; c < len; ++c) s32 += alphabet[rng() % alphabet.size()];
    const std::string s = utf8::Encode(s32);

    const Segmentation seg = FlmmSegment(lex, s);
    std::string concat;
    size_t pos = 0;
    for (const auto& part : seg) {
      concat += part.text;
      const std::u32string p32 = utf8::Decode(part.text);
      ASSERT_EQ(part.matched, entries.count(Lower(p32)) > 0);
      if (!part.matched) ASSERT_EQ(p32.size(), 1u);
      // No longer entry starts here.
      for (size_t w = p32.size() + 1; pos + w <= s32.size(); ++w) {
        ASSERT_EQ(entries.count(Lower(s32.substr(pos, w))), 0u);
      }
      pos += p32.size();
    }
    ASSERT_EQ(concat, s);
    ASSERT_EQ(RenderSegmentation(seg), LiteralFlmm(entries, s)) << s;
    ASSERT_EQ(seg, FlmmSegment(lex, s, {.cap_window = false}));
  }
}

TEST(FlmmPerformanceTest, LargeLexicon) {
  std::mt19937 rng(29);
  std::vector<std::string> entries;
  for (int i = 0; i < 100000; ++i) {
    std::string e;
    const int len = 2 + static_cast<int>(rng() % 6);
    for (int c = 0; c < len; ++c) e += static_cast<char>('a' + rng() % 26);
    entries.push_back(e);
  }
  const Lexicon lex(entries);
  std::string s;
  for (int i = 0; i < 10000; ++i) s += static_cast<char>('a' + rng() % 26);
  const auto start = std::chrono::steady_clock::now();
  const Segmentation seg = FlmmSegment(lex, s);
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  EXPECT_FALSE(seg.empty());
  EXPECT_LT(seconds, 1.0);
}

class UrleTest : public ::testing::Test {
 protected:
  void SetUp() override {
    resources_ = Resources::Load(NSWNORM_RESOURCES_DIR);
  }
  std::string U(std::string_view token, const UrleOptions& opts = {}) {
    return ExpandUrle(token, resources_.lexicon,
                      {&resources_.abbreviations, &resources_.loanwords},
                      opts)
        .ToString();
  }
  Resources resources_;
};

TEST_F(UrleTest, Examples) {
  EXPECT_EQ(U("#anhkhanh"), "hashtag anh khanh");
  EXPECT_EQ(U(""), "");
  // The greedy reading of this name is the known failure mode.
  EXPECT_EQ(U("chacathu@nhatrang"), "cha cat hu a còng nhat rang");
  EXPECT_EQ(U("www.google.com"), "vê kép vê kép vê kép chấm gu gồ chấm com");
  EXPECT_EQ(U("@vinasun"), "a còng vina sun");
  EXPECT_EQ(U("#anhkhanh", {.hashtag_word = "thẻ"}), "thẻ anh khanh");
}

TEST_F(UrleTest, DigitsAndDiacritics) {
  EXPECT_EQ(U("hoa99"), "hoa chín chín");
  EXPECT_EQ(U("#hàNội"), "hashtag hà Nội");
}

}  // namespace
}  // namespace nswnorm
