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

#ifndef NSWNORM_SPOKEN_H_
#define NSWNORM_SPOKEN_H_

#include <string>
#include <string_view>
#include <vector>

namespace nswnorm {

// Spoken form of one NSW. `fallback` is set when the expander could not
// parse its input and degraded to character-wise reading.
struct SpokenText {
  std::vector<std::string> words;
  bool fallback = false;

  // Appends every whitespace-separated word of `phrase`.
  void Append(std::string_view phrase);
  void Append(const SpokenText& other);

  bool empty() const { return words.empty(); }
  std::string ToString() const;

  bool operator==(const SpokenText&) const = default;
};

}  // namespace nswnorm

#endif  // NSWNORM_SPOKEN_H_
