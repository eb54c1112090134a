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

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "nswnorm/utf8.h"

namespace nswnorm {
namespace {

bool IsEmoji(char32_t cp) {
  return (cp >= 0x1F000 && cp <= 0x1FAFF) ||  // pictographs, emoticons, ...
         (cp >= 0x2600 && cp <= 0x27BF) ||    // misc symbols, dingbats
         (cp >= 0x2300 && cp <= 0x23FF) ||    // watches, hourglasses
         (cp >= 0x2B00 && cp <= 0x2BFF) ||    // stars, arrows
         (cp >= 0xFE00 && cp <= 0xFE0F) ||    // variation selectors
         (cp >= 0xE0020 && cp <= 0xE007F) ||  // tag sequences
         cp == 0x200D || cp == 0x20E3 || cp == 0x3030 || cp == 0x303D ||
         cp == 0x3297 || cp == 0x3299;
}

bool IsControl(char32_t cp) {
  return (cp < 0x20 && !utf8::IsSpace(cp)) || cp == 0x7F ||
         (cp >= 0x80 && cp < 0xA0 && cp != 0x85);
}

bool StartsWith(const std::u32string& s, size_t pos, std::u32string_view p) {
  return s.compare(pos, p.size(), p) == 0;
}

// Tries to decode one entity at s[pos] == '&'. On success returns the
// replacement and stores the entity length.
std::optional<char32_t> MatchEntity(const std::u32string& s, size_t pos,
                                    size_t* length) {
  static constexpr struct {
    std::u32string_view name;
    char32_t value;
  } kNamed[] = {
      {U"nbsp", U' '}, {U"amp", U'&'}, {U"quot", U'"'},
      {U"lt", U'<'},   {U"gt", U'>'},
  };
  for (const auto& entity : kNamed) {
    if (StartsWith(s, pos + 1, entity.name)) {
      size_t n = 1 + entity.name.size();
      if (pos + n < s.size() && s[pos + n] == U';') ++n;
      *length = n;
      return entity.value;
    }
  }
  // Numeric references need the closing semicolon.
  if (pos + 2 < s.size() && s[pos + 1] == U'#') {
    size_t i = pos + 2;
    const bool hex = s[i] == U'x' || s[i] == U'X';
    if (hex) ++i;
    char32_t value = 0;
    size_t digits = 0;
    for (; i < s.size() && digits < 7; ++i, ++digits) {
      const char32_t c = s[i];
      int d;
      if (utf8::IsDigit(c)) {
        d = static_cast<int>(c - U'0');
      } else if (hex && (c | 0x20) >= U'a' && (c | 0x20) <= U'f') {
        d = static_cast<int>((c | 0x20) - U'a' + 10);
      } else {
        break;
      }
      value = value * (hex ? 16 : 10) + d;
    }
    if (digits > 0 && i < s.size() && s[i] == U';' && value > 0 &&
        value <= 0x10FFFF && !(value >= 0xD800 && value <= 0xDFFF)) {
      *length = i + 1 - pos;
      return value;
    }
  }
  return std::nullopt;
}

// One left-to-right replacement pass; returns true if anything changed.
bool ReplaceEntities(std::u32string* text) {
  std::u32string out;
  out.reserve(text->size());
  bool changed = false;
  for (size_t i = 0; i < text->size();) {
    size_t length = 0;
    if ((*text)[i] == U'&') {
      if (auto value = MatchEntity(*text, i, &length)) {
        out.push_back(*value);
        i += length;
        changed = true;
        continue;
      }
    }
    out.push_back((*text)[i]);
    ++i;
  }
  text->swap(out);
  return changed;
}

// Whitespace-delimited chunk made only of punctuation with some mark
// repeated, e.g. ":))" or "=((". Pure dot/ellipsis runs are spoken pauses
// and survive.
bool IsUnspokenChunk(std::u32string_view chunk) {
  if (chunk.size() < 2) return false;
  bool only_dots = true;
  for (char32_t cp : chunk) {
    if (!utf8::IsPunct(cp)) return false;
    if (cp != U'.' && cp != 0x2026) only_dots = false;
  }
  if (only_dots) return false;
  for (size_t i = 0; i < chunk.size(); ++i) {
    for (size_t j = i + 1; j < chunk.size(); ++j) {
      if (chunk[i] == chunk[j]) return true;
    }
  }
  return false;
}

struct Piece {
  size_t begin;  // code point index
  size_t end;
};

}  // namespace

bool IsPeelablePunct(char32_t cp) {
  switch (cp) {
    case U'.':
    case U',':
    case U':':
    case U';':
    case U'(':
    case U')':
    case U'[':
    case U']':
    case U'!':
    case U'?':
    case U'"':
    case 0x2026:  // …
    case 0x201C:  // “
    case 0x201D:  // ”
    case 0x2018:  // ‘
    case 0x2019:  // ’
    case 0x00AB:  // «
    case 0x00BB:  // »
      return true;
    default:
      return false;
  }
}

std::string CleanText(std::string_view raw) {
  std::u32string text = utf8::Decode(raw);
  while (ReplaceEntities(&text)) {
  }
  for (char32_t& cp : text) {
    if (IsEmoji(cp) || IsControl(cp)) cp = U' ';
  }

  std::string out;
  out.reserve(raw.size());
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && utf8::IsSpace(text[i])) ++i;
    const size_t start = i;
    while (i < text.size() && !utf8::IsSpace(text[i])) ++i;
    if (start == i) break;
    const std::u32string_view chunk(text.data() + start, i - start);
    if (IsUnspokenChunk(chunk)) continue;
    if (!out.empty()) out.push_back(' ');
    for (char32_t cp : chunk) utf8::Append(&out, cp);
  }
  return out;
}

Sentence Tokenize(std::string_view cleaned) {
  Sentence sentence;
  sentence.source = std::string(cleaned);
  const std::u32string text = utf8::Decode(cleaned);

  // Byte offset of every code point, plus one past the end.
  std::vector<size_t> offset(text.size() + 1, 0);
  for (size_t k = 0; k < text.size(); ++k) {
    offset[k + 1] = offset[k] + utf8::Encode(text[k]).size();
  }

  std::vector<Piece> chunks;
  for (size_t i = 0; i < text.size();) {
    while (i < text.size() && utf8::IsSpace(text[i])) ++i;
    const size_t start = i;
    while (i < text.size() && !utf8::IsSpace(text[i])) ++i;
    if (start < i) chunks.push_back({start, i});
  }

  auto emit = [&](size_t b, size_t e) {
    Token token;
    token.begin = offset[b];
    token.end = offset[e];
    token.text = sentence.source.substr(token.begin, token.end - token.begin);
    sentence.tokens.push_back(std::move(token));
  };

  for (size_t c = 0; c < chunks.size(); ++c) {
    size_t b = chunks[c].begin;
    size_t e = chunks[c].end;
    const bool last_chunk = c + 1 == chunks.size();

    while (b < e && IsPeelablePunct(text[b])) {
      size_t n = 1;
      if (text[b] == U'.') {
        while (b + n < e && text[b + n] == U'.') ++n;
      }
      emit(b, b + n);
      b += n;
    }

    std::vector<Piece> trailing;
    while (b < e && IsPeelablePunct(text[e - 1])) {
      size_t n = 1;
      if (text[e - 1] == U'.') {
        while (e - n > b && text[e - n - 1] == U'.') ++n;
        if (n == 1 && !last_chunk) {
          // "Tp." style abbreviation: 1-3 letters, capitalized.
          const size_t letters = e - 1 - b;
          bool abbreviation = letters >= 1 && letters <= 3 &&
                              utf8::IsUpper(text[b]);
          for (size_t k = b; abbreviation && k < e - 1; ++k) {
            abbreviation = utf8::IsLetter(text[k]);
          }
          if (abbreviation) break;
        }
      }
      trailing.push_back({e - n, e});
      e -= n;
    }

    if (b < e) emit(b, e);
    for (auto it = trailing.rbegin(); it != trailing.rend(); ++it) {
      emit(it->begin, it->end);
    }
  }
  return sentence;
}

Sentence SentenceFromTokens(const std::vector<std::string>& tokens) {
  Sentence sentence;
  for (const auto& text : tokens) {
    if (!sentence.source.empty()) sentence.source.push_back(' ');
    Token token;
    token.begin = sentence.source.size();
    sentence.source += text;
    token.end = sentence.source.size();
    token.text = text;
    sentence.tokens.push_back(std::move(token));
  }
  return sentence;
}

}  // namespace nswnorm
