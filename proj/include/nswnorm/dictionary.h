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

#ifndef NSWNORM_DICTIONARY_H_
#define NSWNORM_DICTIONARY_H_

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace nswnorm {

// Case-sensitive key -> expansion table. File format: UTF-8, one
// "key<TAB>expansion" per line, '#' starts a comment line, blank lines are
// skipped. The first entry for a key wins.
class Dictionary {
 public:
  Dictionary() = default;

  // Throws FormatError (with line number) on a malformed line.
  static Dictionary Parse(std::istream& in, std::string_view origin = "");
  static Dictionary Load(const std::string& path);

  // Returns false if the key was already present.
  bool Add(std::string key, std::string expansion);

  std::optional<std::string_view> Find(std::string_view key) const;
  // Exact key first, then the lowercased key.
  std::optional<std::string_view> FindAnyCase(std::string_view key) const;

  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  // Keys in insertion order.
  const std::vector<std::string>& keys() const { return keys_; }

 private:
  std::unordered_map<std::string, std::string> entries_;
  std::unordered_map<std::string, std::string> lowered_;
  std::vector<std::string> keys_;
};

}  // namespace nswnorm

#endif  // NSWNORM_DICTIONARY_H_
