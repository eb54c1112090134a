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

#include "nswnorm/expanders.h"

#include <gtest/gtest.h>

#include <random>

#include "nswnorm/errors.h"

namespace nswnorm {
namespace {

class ExpandersTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    resources_ = new Resources(Resources::Load(NSWNORM_RESOURCES_DIR));
  }
  static void TearDownTestSuite() { delete resources_; }

  static std::string E(std::string_view token, Tag tag,
                       const ExpandOptions& options = {}) {
    return Expand(token, tag, *resources_, options).ToString();
  }

  static Resources* resources_;
};

Resources* ExpandersTest::resources_ = nullptr;

TEST_F(ExpandersTest, Goldens) {
  EXPECT_EQ(E("92000", Tag::kNnum), "chín mươi hai nghìn");
  EXPECT_EQ(E("31/3", Tag::kNday), "ba mươi mốt tháng ba");
  EXPECT_EQ(E("3/4", Tag::kNday), "mùng ba tháng tư");
  EXPECT_EQ(E("3/4", Tag::kNfrc), "ba trên bốn");
  EXPECT_EQ(E("3-1", Tag::kNscr), "ba một");
  EXPECT_EQ(E("3-1", Tag::kNday), "mùng ba tháng một");
  EXPECT_EQ(E("3-4", Tag::kNrng), "ba đến bốn");
  EXPECT_EQ(E("10/3/2000", Tag::kNdat), "mười tháng ba năm hai nghìn");
  EXPECT_EQ(E("12/2021", Tag::kNmon),
            "tháng mười hai năm hai nghìn không trăm hai mươi mốt");
  EXPECT_EQ(E("VTV", Tag::kLseq), "V T V");
  EXPECT_EQ(E("4.0", Tag::kNver), "bốn chấm không");
  EXPECT_EQ(E("911", Tag::kNdig), "chín một một");
  EXPECT_EQ(E("911", Tag::kNnum), "chín trăm mười một");
  EXPECT_EQ(E("X", Tag::kRoma), "mười");
  EXPECT_EQ(E("1h20", Tag::kNtim), "một giờ hai mươi phút");
  EXPECT_EQ(E("NATO", Tag::kLabb), "na tô");
  EXPECT_EQ(E("Tp", Tag::kLabb), "thành phố");
  EXPECT_EQ(E("Covid-19", Tag::kLwrd), "cô vít mười chín");
}

TEST_F(ExpandersTest, Cardinals) {
  EXPECT_EQ(E("70.000", Tag::kNnum), "bảy mươi nghìn");
  EXPECT_EQ(E("70 000", Tag::kNnum), "bảy mươi nghìn");
  EXPECT_EQ(E("-100", Tag::kNnum), "âm một trăm");
  EXPECT_EQ(E("1,05", Tag::kNnum), "một phẩy không năm");
  EXPECT_EQ(E("700.005,6", Tag::kNnum),
            "bảy trăm nghìn không trăm linh năm phẩy sáu");
  EXPECT_THROW(ExpandCardinal("7.00"), ValidationError);
  EXPECT_THROW(ExpandCardinal("abc"), ValidationError);
}

TEST_F(ExpandersTest, Dates) {
  EXPECT_EQ(E("8/9-10/9/2021", Tag::kNdat),
            "mùng tám tháng chín đến mười tháng chín năm hai nghìn không trăm "
            "hai mươi mốt");
  EXPECT_EQ(E("1.5", Tag::kNday), "mùng một tháng năm");
  EXPECT_EQ(E("4/2020", Tag::kNmon),
            "tháng tư năm hai nghìn không trăm hai mươi");
  EXPECT_EQ(E("Quý I/2020", Tag::kNqua),
            "quý một năm hai nghìn không trăm hai mươi");
  EXPECT_EQ(E("quý 4", Tag::kNqua), "quý bốn");
  EXPECT_THROW(ExpandDate("32/1", Tag::kNday), ValidationError);
  EXPECT_THROW(ExpandDate("3/13", Tag::kNday), ValidationError);
  EXPECT_THROW(ExpandDate("3/4", Tag::kNdat), ValidationError);
}

TEST_F(ExpandersTest, Times) {
  EXPECT_EQ(E("1:20", Tag::kNtim), "một giờ hai mươi phút");
  EXPECT_EQ(E("1:20:30", Tag::kNtim),
            "một giờ hai mươi phút ba mươi giây");
  EXPECT_EQ(E("8:00", Tag::kNtim), "tám giờ");
  EXPECT_EQ(E("11'", Tag::kNtim), "mười một phút");
  EXPECT_EQ(E("12h-13h", Tag::kNtim), "mười hai giờ đến mười ba giờ");
  EXPECT_EQ(E("12-13h", Tag::kNtim), "mười hai giờ đến mười ba giờ");
  EXPECT_THROW(ExpandTime("25h"), ValidationError);
  EXPECT_THROW(ExpandTime("1:75"), ValidationError);
}

TEST_F(ExpandersTest, OtherNumeric) {
  EXPECT_EQ(E("3/4", Tag::kNfrc, {.fraction = FractionStyle::kPhan}),
            "ba phần bốn");
  EXPECT_EQ(E("15%", Tag::kNper), "mười lăm phần trăm");
  EXPECT_EQ(E("5-10%", Tag::kNper), "năm đến mười phần trăm");
  EXPECT_EQ(E("2,5%", Tag::kNper), "hai phẩy năm phần trăm");
  EXPECT_EQ(E("1.2.3", Tag::kNver), "một chấm hai chấm ba");
  EXPECT_EQ(E("0966.3553.46", Tag::kNdig),
            "không chín sáu sáu ba năm năm ba bốn sáu");
  EXPECT_EQ(E("+84 912", Tag::kNdig, {.read_plus = true}),
            "cộng tám bốn chín một hai");
  EXPECT_EQ(E("2-1", Tag::kNscr), "hai một");
  EXPECT_EQ(E("XIV", Tag::kRoma), "mười bốn");
  EXPECT_EQ(E("MMXXI", Tag::kRoma), "hai nghìn không trăm hai mươi mốt");
}

TEST_F(ExpandersTest, MoneyAndMeasure) {
  EXPECT_EQ(E("$5", Tag::kMoney), "năm đô la");
  EXPECT_EQ(E("5 USD", Tag::kMoney), "năm đô la");
  EXPECT_EQ(E("20.000đ", Tag::kMoney), "hai mươi nghìn đồng");
  EXPECT_EQ(E("3VNĐ", Tag::kMoney), "ba đồng");
  EXPECT_EQ(E("5kg", Tag::kMea), "năm ki lô gam");
  EXPECT_EQ(E("2,5 km", Tag::kMea), "hai phẩy năm ki lô mét");
  EXPECT_EQ(E("30oC", Tag::kMea), "ba mươi độ xê");
  EXPECT_EQ(E("100m2", Tag::kMea), "một trăm mét vuông");
}

TEST_F(ExpandersTest, Letters) {
  EXPECT_EQ(E("UBND", Tag::kLabb), "ủy ban nhân dân");
  EXPECT_EQ(E("Tp.", Tag::kLabb), "thành phố");
  EXPECT_EQ(E("NATO", Tag::kLwrd), "na tô");
  EXPECT_EQ(E("covid", Tag::kLwrd), "cô vít");
  EXPECT_EQ(E("V.League", Tag::kLseq), "V L e a g u e");
  EXPECT_EQ(E("U23", Tag::kLseq), "U hai ba");

  // Misses degrade and are flagged.
  const SpokenText abb = Expand("XYZQ", Tag::kLabb, *resources_);
  EXPECT_EQ(abb.ToString(), "X Y Z Q");
  EXPECT_TRUE(abb.fallback);
  const SpokenText wrd = Expand("Zorblax", Tag::kLwrd, *resources_);
  EXPECT_EQ(wrd.ToString(), "Zorblax");
  EXPECT_TRUE(wrd.fallback);
  EXPECT_FALSE(Expand("UBND", Tag::kLabb, *resources_).fallback);
}

TEST_F(ExpandersTest, Urle) {
  EXPECT_EQ(E("#anhkhanh", Tag::kUrle), "hashtag anh khanh");
  EXPECT_EQ(E("phongdaotao@vnu.edu.vn", Tag::kUrle),
            "phong dao tao a còng vnu chấm e đu chấm vi en");
  EXPECT_EQ(E("", Tag::kUrle), "");
}

TEST_F(ExpandersTest, FallbackOnMismatch) {
  const SpokenText s = Expand("ab/cd", Tag::kNday, *resources_);
  EXPECT_TRUE(s.fallback);
  EXPECT_EQ(s.ToString(), "a b c d");
  EXPECT_EQ(FallbackReading("a1-b").ToString(), "a một b");
}

TEST(PatternClassTest, Examples) {
  EXPECT_EQ(PatternClass("10/3/2000"), "d/d/d");
  EXPECT_EQ(PatternClass("1h20"), "dhd");
  EXPECT_EQ(PatternClass("Covid-19"), "covid-d");
}

TEST(ParseRomanTest, Canonical) {
  EXPECT_EQ(ParseRoman("X"), 10);
  EXPECT_EQ(ParseRoman("MCMXCIV"), 1994);
  EXPECT_EQ(ParseRoman("MMMCMXCIX"), 3999);
  EXPECT_THROW(ParseRoman("IIII"), ValidationError);
  EXPECT_THROW(ParseRoman("IC"), ValidationError);
  EXPECT_THROW(ParseRoman(""), ValidationError);
}

// Roman parsing against an independent table-driven encoder.
TEST(ParseRomanTest, AllValues) {
  static const std::pair<int, const char*> kTable[] = {
      {1000, "M"}, {900, "CM"}, {500, "D"}, {400, "CD"}, {100, "C"},
      {90, "XC"},  {50, "L"},   {40, "XL"}, {10, "X"},   {9, "IX"},
      {5, "V"},    {4, "IV"},   {1, "I"}};
  for (int n = 1; n <= 3999; ++n) {
    std::string s;
    int rest = n;
    for (const auto& [v, sym] : kTable) {
      while (rest >= v) {
        s += sym;
        rest -= v;
      }
    }
    ASSERT_EQ(ParseRoman(s), n) << s;
  }
}

// Expand is total and deterministic on arbitrary input.
TEST_F(ExpandersTest, TotalityFuzz) {
  static const std::vector<std::string> kPieces = {
      "1", "0", "9", "/", "-", ".", ",", ":", "h", "p", "%", "$", "đ", "kg",
      "X", "I", "a", "Ư", "@", "#", " ", "'", "+", "quý", "€", "?"};
  std::mt19937 rng(17);
  for (int iter = 0; iter < 5000; ++iter) {
    std::string token;
    const int n = static_cast<int>(rng() % 8);
    for (int k = 0; k < n; ++k) token += kPieces[rng() % kPieces.size()];
    const Tag tag = AllTags()[rng() % kNumTags];
    SpokenText a, b;
    ASSERT_NO_THROW(a = Expand(token, tag, *resources_)) << token;
    b = Expand(token, tag, *resources_);
    ASSERT_EQ(a, b);
    if (!a.fallback) {
      for (const auto& w : a.words) ASSERT_FALSE(w.empty());
    }
  }
}

}  // namespace
}  // namespace nswnorm
