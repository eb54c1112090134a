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

#include "nswnorm/dictionary.h"

#include <fstream>

#include "nswnorm/errors.h"
#include "nswnorm/utf8.h"

namespace nswnorm {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

Dictionary Dictionary::Parse(std::istream& in, std::string_view origin) {
  Dictionary dict;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string_view view = Trim(line);
    if (view.empty() || view.front() == '#') continue;
    const size_t tab = view.find('\t');
    const std::string_view key =
        tab == std::string_view::npos ? view : Trim(view.substr(0, tab));
    const std::string_view value =
        tab == std::string_view::npos ? std::string_view()
                                      : Trim(view.substr(tab + 1));
    if (key.empty() || value.empty() || !utf8::IsValid(view)) {
      throw FormatError(std::string(origin) + ":" +
                        std::to_string(line_number) +
                        ": expected 'key<TAB>expansion'");
    }
    dict.Add(std::string(key), std::string(value));
  }
  return dict;
}

Dictionary Dictionary::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open dictionary: " + path);
  return Parse(in, path);
}

bool Dictionary::Add(std::string key, std::string expansion) {
  if (key.empty() || expansion.empty()) {
    throw ValidationError("dictionary keys and values must be non-empty");
  }
  lowered_.emplace(utf8::ToLower(key), expansion);
  auto [it, inserted] = entries_.emplace(key, std::move(expansion));
  if (inserted) keys_.push_back(std::move(key));
  return inserted;
}

std::optional<std::string_view> Dictionary::Find(std::string_view key) const {
  auto it = entries_.find(std::string(key));
  if (it == entries_.end()) return std::nullopt;
  return std::string_view(it->second);
}

std::optional<std::string_view> Dictionary::FindAnyCase(
    std::string_view key) const {
  if (auto hit = Find(key)) return hit;
  auto it = lowered_.find(utf8::ToLower(key));
  if (it == lowered_.end()) return std::nullopt;
  return std::string_view(it->second);
}

}  // namespace nswnorm
