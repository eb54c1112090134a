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

#include "nswnorm/preprocess.h"

#include <gtest/gtest.h>

#include <random>

#include "nswnorm/errors.h"
#include "nswnorm/utf8.h"

namespace nswnorm {
namespace {

std::vector<std::string> Texts(const Sentence& s) {
  std::vector<std::string> out;
  for (const auto& t : s.tokens) out.push_back(t.text);
  return out;
}

std::string RemoveSpaces(std::string_view s) {
  std::string out;
  for (char32_t cp : utf8::Decode(s)) {
    if (!utf8::IsSpace(cp)) utf8::Append(&out, cp);
  }
  return out;
}

// Random text over letters, digits, punctuation, whitespace, entities and
// emoji.
std::string RandomText(std::mt19937& rng) {
  static const std::vector<std::string> kPieces = {
      "a", "B", "ư", "Đ", "ạ", "7", "0", ".", ",", "...", "…", ":", ";", "(",
      ")", "!", "?", "\"", "“", "”", "'", "/", "-", "%", "#", "@", " ", "  ",
      "\t", " ", "&amp;", "&lt;", "&nbsp;", "&quot", ":))", "😀", "🚗",
      "Tp.", "ca.", "\n"};
  std::uniform_int_distribution<size_t> len(0, 25), pick(0, kPieces.size() - 1);
  std::string out;
  const size_t n = len(rng);
  for (size_t i = 0; i < n; ++i) out += kPieces[pick(rng)];
  return out;
}

TEST(CleanTextTest, Examples) {
  EXPECT_EQ(CleanText("gần  92000 ca"), "gần 92000 ca");
  EXPECT_EQ(CleanText(""), "");
  EXPECT_EQ(CleanText("vui :)) quá &amp; hơn"), "vui quá & hơn");
}

TEST(CleanTextTest, Entities) {
  EXPECT_EQ(CleanText("a&nbsp;b"), "a b");
  EXPECT_EQ(CleanText("&lt;x&gt; &quot;y&quot;"), "<x> \"y\"");
  EXPECT_EQ(CleanText("a &amp;lt; b"), "a < b");
}

TEST(CleanTextTest, EmojiAndSpaces) {
  EXPECT_EQ(CleanText("  vui 😀😀 quá \t "), "vui quá");
  EXPECT_EQ(CleanText("buồn :((( ghê"), "buồn ghê");
  // Ellipsis runs are speech punctuation, not emoticons.
  EXPECT_EQ(CleanText("chờ ... đã"), "chờ ... đã");
}

TEST(CleanTextTest, InvalidUtf8) {
  EXPECT_THROW(CleanText("a\xFF"), Utf8Error);
}

TEST(TokenizeTest, Examples) {
  EXPECT_EQ(Texts(Tokenize("Ngày 31/3, gần 92000 ca.")),
            (std::vector<std::string>{"Ngày", "31/3", ",", "gần", "92000",
                                      "ca", "."}));
  EXPECT_EQ(Texts(Tokenize("0966.3553.46")),
            std::vector<std::string>{"0966.3553.46"});
  EXPECT_EQ(Texts(Tokenize("abc")), std::vector<std::string>{"abc"});
}

TEST(TokenizeTest, AbbreviationDotStays) {
  EXPECT_EQ(Texts(Tokenize("ở Tp. Hà Nội")),
            (std::vector<std::string>{"ở", "Tp.", "Hà", "Nội"}));
}

TEST(TokenizeTest, PeelsQuotesParensAndEllipsis) {
  EXPECT_EQ(Texts(Tokenize("(+84) “xin chào”...")),
            (std::vector<std::string>{"(", "+84", ")", "“", "xin", "chào",
                                      "”", "..."}));
  EXPECT_EQ(Texts(Tokenize("phút 11'")),
            (std::vector<std::string>{"phút", "11'"}));
}

TEST(TokenizeTest, Offsets) {
  const Sentence s = Tokenize("Hà Nội, 31/3.");
  for (const auto& t : s.tokens) {
    EXPECT_GT(t.end, t.begin);
    EXPECT_EQ(s.source.substr(t.begin, t.end - t.begin), t.text);
  }
}

TEST(PreprocessPropertyTest, FuzzInvariants) {
  std::mt19937 rng(7);
  for (int i = 0; i < 3000; ++i) {
    const std::string raw = RandomText(rng);
    const std::string cleaned = CleanText(raw);
    ASSERT_EQ(CleanText(cleaned), cleaned) << raw;
    ASSERT_EQ(cleaned.find("  "), std::string::npos);

    const Sentence s = Tokenize(cleaned);
    std::string joined;
    size_t last_end = 0;
    for (const auto& t : s.tokens) {
      ASSERT_FALSE(t.text.empty());
      ASSERT_EQ(RemoveSpaces(t.text), t.text);
      ASSERT_GE(t.begin, last_end);
      ASSERT_EQ(cleaned.substr(t.begin, t.end - t.begin), t.text);
      last_end = t.end;
      joined += t.text;
    }
    ASSERT_EQ(joined, RemoveSpaces(cleaned)) << cleaned;
  }
}

TEST(SentenceFromTokensTest, JoinsWithSpaces) {
  const Sentence s = SentenceFromTokens({"a", "31/3", ","});
  EXPECT_EQ(s.source, "a 31/3 ,");
  EXPECT_EQ(s.tokens[1].begin, 2u);
  EXPECT_EQ(s.text(2), ",");
}

}  // namespace
}  // namespace nswnorm
