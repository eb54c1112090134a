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

#include "nswnorm/number_words.h"

#include <array>

#include "nswnorm/errors.h"
#include "nswnorm/utf8.h"

namespace nswnorm {
namespace {

constexpr std::array<std::string_view, 10> kDigits = {
    "không", "một", "hai", "ba", "bốn", "năm", "sáu", "bảy", "tám", "chín"};

// Reads 0 < n < 1000. `padded` is set for every group that follows a
// higher non-zero group: hundreds are then always spoken and a zero tens
// digit reads "linh".
void ReadGroup(int n, bool padded, SpokenText* out) {
  const int h = n / 100;
  const int t = (n / 10) % 10;
  const int u = n % 10;
  const bool with_hundreds = padded || h > 0;
  if (with_hundreds) {
    out->words.emplace_back(kDigits[h]);
    out->words.emplace_back("trăm");
  }
  if (t == 0) {
    if (u == 0) return;
    if (with_hundreds) out->words.emplace_back("linh");
    out->words.emplace_back(kDigits[u]);
    return;
  }
  if (t == 1) {
    out->words.emplace_back("mười");
  } else {
    out->words.emplace_back(kDigits[t]);
    out->words.emplace_back("mươi");
  }
  if (u == 0) return;
  if (u == 5) {
    out->words.emplace_back("lăm");
  } else if (u == 1 && t >= 2) {
    out->words.emplace_back("mốt");
  } else {
    out->words.emplace_back(kDigits[u]);
  }
}

// 0 < value < 10^9.
void ReadBelowBillion(uint64_t value, bool padded, SpokenText* out) {
  static constexpr std::array<std::string_view, 3> kScales = {"triệu", "nghìn",
                                                               ""};
  const int groups[3] = {static_cast<int>(value / 1'000'000),
                         static_cast<int>(value / 1000 % 1000),
                         static_cast<int>(value % 1000)};
  bool seen = padded;
  for (int i = 0; i < 3; ++i) {
    if (groups[i] == 0) continue;
    ReadGroup(groups[i], seen, out);
    if (!kScales[i].empty()) out->words.emplace_back(kScales[i]);
    seen = true;
  }
}

void Read(uint64_t value, bool padded, SpokenText* out) {
  constexpr uint64_t kBillion = 1'000'000'000ULL;
  if (value >= kBillion) {
    Read(value / kBillion, padded, out);
    out->words.emplace_back("tỷ");
    if (value % kBillion != 0) ReadBelowBillion(value % kBillion, true, out);
    return;
  }
  ReadBelowBillion(value, padded, out);
}

}  // namespace

std::string_view DigitWord(int digit) {
  if (digit < 0 || digit > 9) throw RangeError("digit out of range");
  return kDigits[digit];
}

std::string MonthName(int month) {
  if (month < 1 || month > 12) {
    throw RangeError("month out of range: " + std::to_string(month));
  }
  if (month == 4) return "tư";
  return NumberToWords(month).ToString();
}

SpokenText NumberToWords(uint64_t value) {
  if (value >= kMaxSpokenNumber) {
    throw RangeError("number too large to read: " + std::to_string(value));
  }
  SpokenText out;
  if (value == 0) {
    out.words.emplace_back(kDigits[0]);
    return out;
  }
  Read(value, false, &out);
  return out;
}

SpokenText DigitRunToWords(std::string_view digits) {
  if (digits.empty()) throw ValidationError("empty digit run");
  uint64_t value = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw ValidationError("not a digit run: " + std::string(digits));
    }
    if (value >= kMaxSpokenNumber) break;
    value = value * 10 + static_cast<uint64_t>(c - '0');
  }
  return NumberToWords(value);
}

SpokenText DigitsToWords(std::string_view token, const DigitsOptions& options) {
  SpokenText out;
  bool any_digit = false;
  for (char32_t cp : utf8::Decode(token)) {
    if (utf8::IsDigit(cp)) {
      out.words.emplace_back(kDigits[cp - U'0']);
      any_digit = true;
    } else if (cp == U'+') {
      if (options.read_plus) out.words.emplace_back("cộng");
    } else if (cp == U'.' || cp == U'-' || cp == U'(' || cp == U')' ||
               utf8::IsSpace(cp)) {
      continue;
    } else {
      throw ValidationError("unexpected character in digit string: " +
                            std::string(token));
    }
  }
  if (!any_digit) {
    throw ValidationError("no digits in: " + std::string(token));
  }
  return out;
}

}  // namespace nswnorm
