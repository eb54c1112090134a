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

#ifndef NSWNORM_NUMBER_WORDS_H_
#define NSWNORM_NUMBER_WORDS_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "nswnorm/spoken.h"

namespace nswnorm {

inline constexpr uint64_t kMaxSpokenNumber = 1'000'000'000'000'000ULL;

// Vietnamese reading of a single digit: "không", "một", ..., "chín".
std::string_view DigitWord(int digit);

// Month name as used after "tháng": 4 reads "tư", everything else as the
// plain number. Throws RangeError outside 1..12.
std::string MonthName(int month);

// Cardinal reading with nghìn/triệu/tỷ, the mươi/mốt/lăm/linh alternations
// and "không trăm" padding of non-leading groups. Throws RangeError for
// value >= 10^15.
SpokenText NumberToWords(uint64_t value);

// Parses a run of ASCII digits (leading zeros allowed) and reads it.
// Throws ValidationError on non-digits and RangeError on overflow.
SpokenText DigitRunToWords(std::string_view digits);

struct DigitsOptions {
  // Read a '+' as "cộng" instead of dropping it.
  bool read_plus = false;
};

// Reads every digit individually. Separators (. - space parentheses) and
// '+' are dropped. Throws ValidationError if there is no digit or a
// character outside that set.
SpokenText DigitsToWords(std::string_view token,
                         const DigitsOptions& options = {});

}  // namespace nswnorm

#endif  // NSWNORM_NUMBER_WORDS_H_
