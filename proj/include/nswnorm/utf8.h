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

// Minimal UTF-8 and character-class helpers. Case mapping covers ASCII,
// Latin-1, Latin Extended-A/B (the Vietnamese letters), Latin Extended
// Additional, basic Greek and Cyrillic. All mappings are one code point to
// one code point, so folded strings keep their code point length.

#ifndef NSWNORM_UTF8_H_
#define NSWNORM_UTF8_H_

#include <string>
#include <string_view>

namespace nswnorm {
namespace utf8 {

bool IsValid(std::string_view text);

// Throws Utf8Error on malformed input (overlong forms, surrogates, bad
// continuation bytes, code points above U+10FFFF).
std::u32string Decode(std::string_view text);

void Append(std::string* out, char32_t cp);
std::string Encode(std::u32string_view text);
std::string Encode(char32_t cp);

// Number of code points; input must be valid.
size_t Length(std::string_view text);

char32_t ToLower(char32_t cp);
char32_t ToUpper(char32_t cp);
bool IsUpper(char32_t cp);
bool IsLower(char32_t cp);
bool IsLetter(char32_t cp);
inline bool IsDigit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }
bool IsSpace(char32_t cp);
// Anything printable that is neither letter, digit nor whitespace.
bool IsPunct(char32_t cp);

// Maps a precomposed Vietnamese (or Latin-1) letter onto its bare ASCII
// base letter, keeping case: 'Ệ' -> 'E', 'đ' -> 'd'. Other code points are
// returned unchanged.
char32_t StripDiacritic(char32_t cp);

std::string ToLower(std::string_view text);
std::string StripDiacritics(std::string_view text);

}  // namespace utf8
}  // namespace nswnorm

#endif  // NSWNORM_UTF8_H_
