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

#ifndef NSWNORM_PREPROCESS_H_
#define NSWNORM_PREPROCESS_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace nswnorm {

// A whitespace-free slice of the cleaned sentence. `begin`/`end` are byte
// offsets into Sentence::source, end exclusive.
struct Token {
  std::string text;
  size_t begin = 0;
  size_t end = 0;

  bool operator==(const Token&) const = default;
};

struct Sentence {
  std::string source;
  std::vector<Token> tokens;

  size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
  const std::string& text(size_t i) const { return tokens[i].text; }
};

// Removes emoji, decodes the HTML entities nbsp/lt/gt/amp/quot (and numeric
// character references), drops emoticon-like punctuation chunks such as
// ":))", collapses whitespace runs and trims. Idempotent.
// Throws Utf8Error on malformed input.
std::string CleanText(std::string_view raw);

// Splits cleaned text on whitespace and peels leading/trailing punctuation
// off each chunk. Internal punctuation ("31/3", "0966.3553.46") is kept;
// the final dot of a short capitalized abbreviation ("Tp.") stays attached
// unless the chunk ends the text.
Sentence Tokenize(std::string_view cleaned);

// Builds a sentence from pre-split tokens, joining them with single spaces.
// Used for corpus files where tokenization is already given.
Sentence SentenceFromTokens(const std::vector<std::string>& tokens);

// True for the punctuation marks Tokenize peels off chunk edges.
bool IsPeelablePunct(char32_t cp);

}  // namespace nswnorm

#endif  // NSWNORM_PREPROCESS_H_
