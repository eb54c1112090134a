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

#include <algorithm>
#include <fstream>

#include "nswnorm/errors.h"
#include "nswnorm/number_words.h"
#include "nswnorm/utf8.h"

namespace nswnorm {
namespace {

std::u32string Fold(std::u32string_view s) {
  std::u32string out(s);
  for (char32_t& cp : out) cp = utf8::ToLower(cp);
  return out;
}

std::string_view SeparatorWord(char32_t cp) {
  switch (cp) {
    case U'.':
      return "chấm";
    case U'/':
      return "gạch chéo";
    case U':':
      return "hai chấm";
    case U'-':
      return "gạch ngang";
    case U'_':
      return "gạch dưới";
    default:
      return "";
  }
}

bool IsUrlSeparator(char32_t cp) {
  return cp == U'@' || cp == U'.' || cp == U'/' || cp == U':' || cp == U'-' ||
         cp == U'_';
}

// Turns a segmentation into spoken words: matches as they are, runs of
// passthrough letters as one word, passthrough digits one word each.
void AppendSegments(const Segmentation& segments, SpokenText* out) {
  std::string run;
  auto flush = [&] {
    if (!run.empty()) out->words.push_back(std::move(run));
    run.clear();
  };
  for (const auto& seg : segments) {
    if (seg.matched) {
      flush();
      out->Append(seg.text);
      continue;
    }
    const char32_t cp = utf8::Decode(seg.text).front();
    if (utf8::IsDigit(cp)) {
      flush();
      out->words.emplace_back(DigitWord(static_cast<int>(cp - U'0')));
    } else if (utf8::IsLetter(cp)) {
      run += seg.text;
    } else {
      flush();
    }
  }
  flush();
}

}  // namespace

Lexicon::Lexicon(const std::vector<std::string>& entries) {
  for (const auto& e : entries) Add(e);
}

Lexicon Lexicon::Parse(std::istream& in) {
  Lexicon lexicon;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    SpokenText words;
    words.Append(line);
    for (const auto& w : words.words) lexicon.AddWord(w);
  }
  return lexicon;
}

Lexicon Lexicon::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open lexicon: " + path);
  return Parse(in);
}

bool Lexicon::Add(std::string_view entry) {
  const std::u32string cps = utf8::Decode(entry);
  if (cps.empty()) throw ValidationError("empty lexicon entry");
  for (char32_t cp : cps) {
    if (utf8::IsSpace(cp)) {
      throw ValidationError("lexicon entry contains whitespace: " +
                            std::string(entry));
    }
  }
  max_length_ = std::max(max_length_, cps.size());
  return entries_.insert(Fold(cps)).second;
}

void Lexicon::AddWord(std::string_view word) {
  Add(word);
  Add(utf8::StripDiacritics(word));
}

bool Lexicon::Contains(std::string_view word) const {
  return ContainsFolded(Fold(utf8::Decode(word)));
}

Segmentation FlmmSegment(const Lexicon& lexicon, std::string_view s,
                         const FlmmOptions& options) {
  const std::u32string tokens = utf8::Decode(s);
  for (char32_t cp : tokens) {
    if (utf8::IsSpace(cp)) {
      throw ValidationError("FLMM input contains whitespace");
    }
  }
  const std::u32string folded = Fold(tokens);
  const size_t n = tokens.size();
  const size_t max_window =
      options.cap_window ? std::min(n, lexicon.max_entry_length()) : n;

  Segmentation result;
  size_t start = 0;
  while (start < n) {
    bool gotcha = false;
    for (size_t w = std::min(max_window, n - start); w >= 1; --w) {
      if (lexicon.ContainsFolded(folded.substr(start, w))) {
        result.push_back({utf8::Encode(tokens.substr(start, w)), true});
        start += w;
        gotcha = true;
        break;
      }
    }
    if (!gotcha) {
      result.push_back({utf8::Encode(tokens[start]), false});
      ++start;
    }
  }
  return result;
}

std::string RenderSegmentation(const Segmentation& segmentation) {
  std::string out;
  bool glue = false;  // previous segment was passthrough
  for (const auto& seg : segmentation) {
    const bool next_glue = !seg.matched;
    if (!out.empty() && !(glue && next_glue)) out += ' ';
    out += seg.text;
    glue = next_glue;
  }
  return out;
}

std::string SegmentString(const Lexicon& lexicon, std::string_view s,
                          const FlmmOptions& options) {
  return RenderSegmentation(FlmmSegment(lexicon, s, options));
}

SpokenText ExpandUrle(std::string_view token, const Lexicon& lexicon,
                      const std::vector<const Dictionary*>& dictionaries,
                      const UrleOptions& options) {
  SpokenText out;
  const std::u32string cps = utf8::Decode(token);
  auto emit_separator = [&](char32_t cp) {
    if (options.verbatim_separators) {
      out.words.push_back(utf8::Encode(cp));
    } else if (cp == U'#') {
      out.Append(options.hashtag_word);
    } else if (cp == U'@') {
      out.Append(options.at_word);
    } else {
      out.Append(SeparatorWord(cp));
    }
  };
  auto emit_part = [&](const std::u32string& part) {
    const std::string text = utf8::Encode(part);
    for (const Dictionary* dict : dictionaries) {
      if (dict == nullptr) continue;
      if (auto hit = dict->FindAnyCase(text)) {
        out.Append(*hit);
        return;
      }
    }
    AppendSegments(FlmmSegment(lexicon, text), &out);
  };

  size_t i = 0;
  if (!cps.empty() && (cps[0] == U'#' || cps[0] == U'@')) {
    emit_separator(cps[0]);
    i = 1;
  }
  std::u32string part;
  for (; i < cps.size(); ++i) {
    const char32_t cp = cps[i];
    if (utf8::IsSpace(cp)) {
      if (!part.empty()) emit_part(part);
      part.clear();
    } else if (IsUrlSeparator(cp)) {
      if (!part.empty()) emit_part(part);
      part.clear();
      emit_separator(cp);
    } else {
      part.push_back(cp);
    }
  }
  if (!part.empty()) emit_part(part);
  return out;
}

}  // namespace nswnorm
