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

#include <string>
#include <unordered_map>

#include "nswnorm/errors.h"

namespace nswnorm {
namespace utf8 {
namespace {

// Returns the number of bytes consumed, or 0 when the sequence at `pos` is
// malformed.
size_t DecodeOne(std::string_view text, size_t pos, char32_t* cp) {
  const auto b0 = static_cast<unsigned char>(text[pos]);
  if (b0 < 0x80) {
    *cp = b0;
    return 1;
  }
  size_t len;
  char32_t value;
  char32_t min_value;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    value = b0 & 0x1F;
    min_value = 0x80;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    value = b0 & 0x0F;
    min_value = 0x800;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    value = b0 & 0x07;
    min_value = 0x10000;
  } else {
    return 0;
  }
  if (pos + len > text.size()) return 0;
  for (size_t i = 1; i < len; ++i) {
    const auto b = static_cast<unsigned char>(text[pos + i]);
    if ((b & 0xC0) != 0x80) return 0;
    value = (value << 6) | (b & 0x3F);
  }
  if (value < min_value || value > 0x10FFFF) return 0;
  if (value >= 0xD800 && value <= 0xDFFF) return 0;
  *cp = value;
  return len;
}

const std::unordered_map<char32_t, char32_t>& DiacriticTable() {
  static const auto* table = [] {
    auto* map = new std::unordered_map<char32_t, char32_t>();
    const struct {
      const char* accented;
      char32_t base;
    } rows[] = {
        {"àáảãạăằắẳẵặâầấẩẫậäåā", U'a'},
        {"ÀÁẢÃẠĂẰẮẲẴẶÂẦẤẨẪẬÄÅĀ", U'A'},
        {"èéẻẽẹêềếểễệëē", U'e'},
        {"ÈÉẺẼẸÊỀẾỂỄỆËĒ", U'E'},
        {"ìíỉĩịïī", U'i'},
        {"ÌÍỈĨỊÏĪ", U'I'},
        {"òóỏõọôồốổỗộơờớởỡợöō", U'o'},
        {"ÒÓỎÕỌÔỒỐỔỖỘƠỜỚỞỠỢÖŌ", U'O'},
        {"ùúủũụưừứửữựüū", U'u'},
        {"ÙÚỦŨỤƯỪỨỬỮỰÜŪ", U'U'},
        {"ỳýỷỹỵÿ", U'y'},
        {"ỲÝỶỸỴŸ", U'Y'},
        {"đ", U'd'},
        {"Đ", U'D'},
        {"ç", U'c'},
        {"Ç", U'C'},
        {"ñ", U'n'},
        {"Ñ", U'N'},
    };
    for (const auto& row : rows) {
      for (char32_t cp : Decode(row.accented)) (*map)[cp] = row.base;
    }
    return map;
  }();
  return *table;
}

}  // namespace

bool IsValid(std::string_view text) {
  size_t pos = 0;
  char32_t cp;
  while (pos < text.size()) {
    const size_t n = DecodeOne(text, pos, &cp);
    if (n == 0) return false;
    pos += n;
  }
  return true;
}

std::u32string Decode(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  size_t pos = 0;
  while (pos < text.size()) {
    char32_t cp;
    const size_t n = DecodeOne(text, pos, &cp);
    if (n == 0) {
      throw Utf8Error("invalid UTF-8 sequence at byte offset " +
                      std::to_string(pos));
    }
    out.push_back(cp);
    pos += n;
  }
  return out;
}

void Append(std::string* out, char32_t cp) {
  if (cp < 0x80) {
    out->push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string Encode(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) Append(&out, cp);
  return out;
}

std::string Encode(char32_t cp) {
  std::string out;
  Append(&out, cp);
  return out;
}

size_t Length(std::string_view text) {
  size_t n = 0;
  for (char c : text) {
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
  }
  return n;
}

char32_t ToLower(char32_t cp) {
  if (cp < 0x80) return (cp >= U'A' && cp <= U'Z') ? cp + 32 : cp;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 32;
  if (cp >= 0x100 && cp <= 0x137) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp >= 0x139 && cp <= 0x148) return (cp % 2 == 1) ? cp + 1 : cp;
  if (cp >= 0x14A && cp <= 0x177) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp == 0x178) return 0xFF;
  if (cp >= 0x179 && cp <= 0x17E) return (cp % 2 == 1) ? cp + 1 : cp;
  if (cp == 0x1A0 || cp == 0x1AF) return cp + 1;
  if (cp >= 0x391 && cp <= 0x3A9 && cp != 0x3A2) return cp + 32;
  if (cp >= 0x400 && cp <= 0x40F) return cp + 80;
  if (cp >= 0x410 && cp <= 0x42F) return cp + 32;
  if (cp >= 0x1E00 && cp <= 0x1E95) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp >= 0x1EA0 && cp <= 0x1EFF) return (cp % 2 == 0) ? cp + 1 : cp;
  return cp;
}

char32_t ToUpper(char32_t cp) {
  if (cp < 0x80) return (cp >= U'a' && cp <= U'z') ? cp - 32 : cp;
  if (cp >= 0xE0 && cp <= 0xFE && cp != 0xF7) return cp - 32;
  if (cp == 0xFF) return 0x178;
  if (cp >= 0x100 && cp <= 0x137) return (cp % 2 == 1) ? cp - 1 : cp;
  if (cp >= 0x13A && cp <= 0x148) return (cp % 2 == 0) ? cp - 1 : cp;
  if (cp >= 0x14B && cp <= 0x177) return (cp % 2 == 1) ? cp - 1 : cp;
  if (cp >= 0x17A && cp <= 0x17E) return (cp % 2 == 0) ? cp - 1 : cp;
  if (cp == 0x1A1 || cp == 0x1B0) return cp - 1;
  if (cp == 0x3C2) return 0x3A3;
  if (cp >= 0x3B1 && cp <= 0x3C9) return cp - 32;
  if (cp >= 0x430 && cp <= 0x44F) return cp - 32;
  if (cp >= 0x450 && cp <= 0x45F) return cp - 80;
  if (cp >= 0x1E01 && cp <= 0x1E95) return (cp % 2 == 1) ? cp - 1 : cp;
  if (cp >= 0x1EA1 && cp <= 0x1EFF) return (cp % 2 == 1) ? cp - 1 : cp;
  return cp;
}

bool IsUpper(char32_t cp) { return ToLower(cp) != cp; }

bool IsLower(char32_t cp) { return ToUpper(cp) != cp || cp == 0xDF; }

bool IsLetter(char32_t cp) {
  if (cp < 0x80) return (cp | 0x20) >= U'a' && (cp | 0x20) <= U'z';
  if (cp == 0xAA || cp == 0xB5 || cp == 0xBA) return true;
  if (cp >= 0xC0 && cp <= 0x24F) return cp != 0xD7 && cp != 0xF7;
  if (cp >= 0x250 && cp <= 0x2AF) return true;  // IPA
  if (cp >= 0x300 && cp <= 0x36F) return true;  // combining marks
  if (cp >= 0x370 && cp <= 0x3FF) return cp != 0x37E && cp != 0x387;
  if (cp >= 0x400 && cp <= 0x52F) return true;
  if (cp >= 0x1E00 && cp <= 0x1EFF) return true;
  if (cp >= 0x3040 && cp <= 0x30FF) return true;
  if (cp >= 0x4E00 && cp <= 0x9FFF) return true;
  if (cp >= 0xAC00 && cp <= 0xD7A3) return true;
  return false;
}

bool IsSpace(char32_t cp) {
  switch (cp) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\r':
    case U'\v':
    case U'\f':
    case 0x85:
    case 0xA0:
    case 0x1680:
    case 0x2028:
    case 0x2029:
    case 0x202F:
    case 0x205F:
    case 0x3000:
    case 0xFEFF:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200B;
  }
}

bool IsPunct(char32_t cp) {
  if (cp < 0x20 || cp == 0x7F || (cp >= 0x80 && cp < 0xA0)) return false;
  return !IsLetter(cp) && !IsDigit(cp) && !IsSpace(cp);
}

char32_t StripDiacritic(char32_t cp) {
  if (cp < 0x80) return cp;
  const auto& table = DiacriticTable();
  const auto it = table.find(cp);
  return it == table.end() ? cp : it->second;
}

std::string ToLower(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : Decode(text)) Append(&out, ToLower(cp));
  return out;
}

std::string StripDiacritics(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : Decode(text)) Append(&out, StripDiacritic(cp));
  return out;
}

}  // namespace utf8
}  // namespace nswnorm
