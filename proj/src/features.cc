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

#include "nswnorm/features.h"

#include <algorithm>
#include <charconv>
#include <string>

#include "nswnorm/errors.h"
#include "nswnorm/utf8.h"

namespace nswnorm {
namespace {

std::string OffsetTag(int offset) {
  if (offset == 0) return "[0]";
  return offset > 0 ? "[+" + std::to_string(offset) + "]"
                    : "[" + std::to_string(offset) + "]";
}

void AddTokenFeatures(std::string_view token, int offset,
                      std::vector<std::string>* out) {
  const std::string at = OffsetTag(offset);
  const std::u32string cps = utf8::Decode(token);

  out->push_back("w" + at + "=" + utf8::ToLower(token));
  for (size_t k = 1; k <= 3 && k <= cps.size(); ++k) {
    out->push_back("prefix" + std::to_string(k) + at + "=" +
                   utf8::Encode(std::u32string_view(cps).substr(0, k)));
    out->push_back("suffix" + std::to_string(k) + at + "=" +
                   utf8::Encode(std::u32string_view(cps).substr(cps.size() - k)));
  }

  bool has_letter = false, has_digit = false, has_punct = false;
  bool has_lower = false, all_digit = !cps.empty();
  for (char32_t cp : cps) {
    if (utf8::IsLetter(cp)) {
      has_letter = true;
      if (utf8::IsLower(cp)) has_lower = true;
    }
    if (utf8::IsDigit(cp)) {
      has_digit = true;
    } else {
      all_digit = false;
    }
    if (utf8::IsPunct(cp)) has_punct = true;
  }
  if (has_letter && !has_lower) out->push_back("is_upper" + at + "=1");
  if (!cps.empty() && utf8::IsUpper(cps.front())) {
    out->push_back("is_cap" + at + "=1");
  }
  if (all_digit) out->push_back("is_digit" + at + "=1");
  if (has_digit) out->push_back("contains_digit" + at + "=1");
  if (has_letter) out->push_back("contains_letter" + at + "=1");
  if (has_punct) out->push_back("contains_punct" + at + "=1");
  out->push_back("shape" + at + "=" + WordShape(token));
}

}  // namespace

std::string WordShape(std::string_view token) {
  std::u32string shape;
  for (char32_t cp : utf8::Decode(token)) {
    char32_t c = cp;
    if (utf8::IsDigit(cp)) {
      c = U'd';
    } else if (utf8::IsUpper(cp)) {
      c = U'X';
    } else if (utf8::IsLetter(cp)) {
      c = U'x';
    }
    if (shape.empty() || shape.back() != c) shape.push_back(c);
  }
  return utf8::Encode(shape);
}

FeatureSet ExtractFeatures(const Sentence& sentence, size_t position) {
  if (position >= sentence.size()) {
    throw RangeError("feature position " + std::to_string(position) +
                     " out of range for sentence of " +
                     std::to_string(sentence.size()) + " tokens");
  }
  FeatureSet features;
  features.push_back("bias=1");
  for (int offset = -kFeatureWindow; offset <= kFeatureWindow; ++offset) {
    const auto index = static_cast<long>(position) + offset;
    if (index < 0) {
      features.push_back("BOS" + OffsetTag(offset));
    } else if (index >= static_cast<long>(sentence.size())) {
      features.push_back("EOS" + OffsetTag(offset));
    } else {
      AddTokenFeatures(sentence.text(static_cast<size_t>(index)), offset,
                       &features);
    }
  }
  const size_t length = utf8::Length(sentence.text(position));
  features.push_back(std::string("len[0]=") +
                     (length >= 4 ? "4+" : std::to_string(length)));
  std::sort(features.begin(), features.end());
  features.erase(std::unique(features.begin(), features.end()), features.end());
  return features;
}

std::vector<FeatureSet> ExtractSentenceFeatures(const Sentence& sentence) {
  std::vector<FeatureSet> out;
  out.reserve(sentence.size());
  for (size_t i = 0; i < sentence.size(); ++i) {
    out.push_back(ExtractFeatures(sentence, i));
  }
  return out;
}

std::optional<ParsedFeature> ParseFeatureId(std::string_view id) {
  ParsedFeature parsed;
  const size_t bracket = id.find('[');
  const size_t equals = id.find('=');
  if (bracket != std::string_view::npos &&
      (equals == std::string_view::npos || bracket < equals)) {
    const size_t close = id.find(']', bracket);
    if (close == std::string_view::npos) return std::nullopt;
    std::string_view digits = id.substr(bracket + 1, close - bracket - 1);
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    int offset = 0;
    const auto [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), offset);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      return std::nullopt;
    }
    parsed.name = std::string(id.substr(0, bracket));
    parsed.offset = offset;
    const std::string_view rest = id.substr(close + 1);
    if (!rest.empty()) {
      if (rest.front() != '=') return std::nullopt;
      parsed.value = std::string(rest.substr(1));
    }
  } else if (equals != std::string_view::npos) {
    parsed.name = std::string(id.substr(0, equals));
    parsed.value = std::string(id.substr(equals + 1));
  } else {
    return std::nullopt;
  }
  if (parsed.name.empty()) return std::nullopt;
  return parsed;
}

}  // namespace nswnorm
