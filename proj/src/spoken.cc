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

#include "nswnorm/spoken.h"

#include "nswnorm/utf8.h"

namespace nswnorm {

void SpokenText::Append(std::string_view phrase) {
  const std::u32string cps = utf8::Decode(phrase);
  std::string word;
  for (char32_t cp : cps) {
    if (utf8::IsSpace(cp)) {
      if (!word.empty()) words.push_back(std::move(word));
      word.clear();
    } else {
      utf8::Append(&word, cp);
    }
  }
  if (!word.empty()) words.push_back(std::move(word));
}

void SpokenText::Append(const SpokenText& other) {
  words.insert(words.end(), other.words.begin(), other.words.end());
  fallback = fallback || other.fallback;
}

std::string SpokenText::ToString() const {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

}  // namespace nswnorm
