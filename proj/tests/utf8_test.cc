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

#include "nswnorm/utf8.h"

#include <gtest/gtest.h>

#include "nswnorm/errors.h"

namespace nswnorm {
namespace {

TEST(Utf8Test, DecodeEncodeRoundTrip) {
  const std::string text = "Hà Nội ơi, 92000 ca 😀";
  EXPECT_TRUE(utf8::IsValid(text));
  EXPECT_EQ(utf8::Encode(utf8::Decode(text)), text);
  EXPECT_EQ(utf8::Length("Đạt"), 3u);
}

TEST(Utf8Test, RejectsInvalid) {
  EXPECT_FALSE(utf8::IsValid("\xC3"));
  EXPECT_FALSE(utf8::IsValid("\xC0\xAF"));  // overlong '/'
  EXPECT_FALSE(utf8::IsValid("\xED\xA0\x80"));  // surrogate
  EXPECT_THROW(utf8::Decode("a\xFF"), Utf8Error);
}

TEST(Utf8Test, VietnameseCase) {
  EXPECT_EQ(utf8::ToLower("ĐẠI HỌC Ư"), "đại học ư");
  EXPECT_EQ(utf8::ToUpper(U'ặ'), U'Ặ');
  EXPECT_TRUE(utf8::IsUpper(U'Đ'));
  EXPECT_TRUE(utf8::IsLetter(U'ữ'));
  EXPECT_FALSE(utf8::IsLetter(U'5'));
}

TEST(Utf8Test, StripDiacritics) {
  EXPECT_EQ(utf8::StripDiacritics("phòng đào tạo"), "phong dao tao");
  EXPECT_EQ(utf8::StripDiacritics("Nguyễn Đức"), "Nguyen Duc");
}

TEST(Utf8Test, Classes) {
  EXPECT_TRUE(utf8::IsSpace(U' '));
  EXPECT_TRUE(utf8::IsPunct(U'…'));
  EXPECT_TRUE(utf8::IsPunct(U','));
  EXPECT_FALSE(utf8::IsPunct(U'a'));
}

}  // namespace
}  // namespace nswnorm
