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

// Per-class verbalizers. Every NSW tag has its own expander; Expand()
// dispatches on the tag and never throws.

#ifndef NSWNORM_EXPANDERS_H_
#define NSWNORM_EXPANDERS_H_

#include <string>
#include <string_view>

#include "nswnorm/flmm.h"
#include "nswnorm/resources.h"
#include "nswnorm/spoken.h"
#include "nswnorm/taxonomy.h"

namespace nswnorm {

enum class FractionStyle { kTren, kPhan };

struct ExpandOptions {
  // "ba trên bốn" or "ba phần bốn".
  FractionStyle fraction = FractionStyle::kTren;
  // Read '+' in phone numbers as "cộng".
  bool read_plus = false;
  UrleOptions urle;
};

// Digit runs become "d", letters are lowercased, other characters are kept:
// "10/3/2000" -> "d/d/d", "1h20" -> "dhd", "Covid-19" -> "covid-d".
std::string PatternClass(std::string_view token);

// Total: unparseable input degrades to FallbackReading() with the fallback
// flag set. `token` is the span surface (tokens joined by single spaces).
SpokenText Expand(std::string_view token, Tag tag, const Resources& resources,
                  const ExpandOptions& options = {});

// Digits one by one, letters one by one, everything else dropped.
SpokenText FallbackReading(std::string_view token);

// The class expanders below throw ValidationError (or RangeError) when the
// token does not fit the class patterns.

// NNUM: "12", "70.000", "70 000", "700.005,6", "-100".
SpokenText ExpandCardinal(std::string_view token);

// NDAT, NDAY, NMON and NQUA, including ranges such as "8/9-10/9/2021".
SpokenText ExpandDate(std::string_view token, Tag tag);

// NTIM: "1h20", "1:20", "1:20:30", "1h20p30s", "11'", "12h-13h".
SpokenText ExpandTime(std::string_view token);

// NNUM, NDIG, NSCR, NRNG, NPER, NFRC, NVER, NTIM, MONEY, MEA and ROMA.
SpokenText ExpandNumeric(std::string_view token, Tag tag,
                         const Resources& resources,
                         const ExpandOptions& options = {});

// LABB, LWRD and LSEQ. Dictionary misses are not errors: LABB degrades to
// letter reading and LWRD to the verbatim word, both flagged as fallback.
SpokenText ExpandLetter(std::string_view token, Tag tag,
                        const Resources& resources);

// Strict canonical roman numeral in 1..3999. Throws ValidationError.
int ParseRoman(std::string_view token);

}  // namespace nswnorm

#endif  // NSWNORM_EXPANDERS_H_
