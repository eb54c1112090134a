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

// Forward lexicon-based maximum matching for concatenated tokens such as
// hashtags, e-mail names and contact names.

#ifndef NSWNORM_FLMM_H_
#define NSWNORM_FLMM_H_

#include <istream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "nswnorm/dictionary.h"
#include "nswnorm/spoken.h"

namespace nswnorm {

// Set of known syllables. Membership is exact match on lowercased entries.
class Lexicon {
 public:
  Lexicon() = default;
  explicit Lexicon(const std::vector<std::string>& entries);

  // Word-list construction: every line is split on whitespace and each word
  // is added both as written and with Vietnamese diacritics stripped. '#'
  // lines and blank lines are skipped.
  static Lexicon Parse(std::istream& in);
  static Lexicon Load(const std::string& path);

  // Throws ValidationError on an empty entry or one containing whitespace.
  // Returns false if the (lowercased) entry was already present.
  bool Add(std::string_view entry);
  // Adds the word and its diacritic-stripped form.
  void AddWord(std::string_view word);

  bool Contains(std::string_view word) const;
  bool ContainsFolded(const std::u32string& folded) const {
    return entries_.count(folded) > 0;
  }

  size_t size() const { return entries_.size(); }
  // Longest entry in code points.
  size_t max_entry_length() const { return max_length_; }

 private:
  std::unordered_set<std::u32string> entries_;
  size_t max_length_ = 0;
};

struct Segment {
  std::string text;
  // False for a single passthrough character.
  bool matched = false;

  bool operator==(const Segment&) const = default;
};

using Segmentation = std::vector<Segment>;

struct FlmmOptions {
  // Start the window at the longest lexicon entry instead of the remaining
  // string length. Longer windows can never match, so output is identical.
  bool cap_window = true;
};

// Greedy left-to-right longest match. Unmatched characters are emitted one
// at a time. Matching ignores case; segments keep the input's case.
// Throws ValidationError if `s` contains whitespace.
Segmentation FlmmSegment(const Lexicon& lexicon, std::string_view s,
                         const FlmmOptions& options = {});

// Matched segments become separate words; adjacent passthrough characters
// stay glued together, as in the padded-join output of the algorithm.
std::string RenderSegmentation(const Segmentation& segmentation);

// FlmmSegment + RenderSegmentation.
std::string SegmentString(const Lexicon& lexicon, std::string_view s,
                          const FlmmOptions& options = {});

struct UrleOptions {
  std::string hashtag_word = "hashtag";
  std::string at_word = "a còng";
  // Emit '#', '@', '.', ... verbatim instead of reading them.
  bool verbatim_separators = false;
};

// Reads an e-mail address, URL, hashtag or contact name. A leading '#' or
// '@' is verbalized, the rest is split at '@ . / : - _'. Each part is looked
// up in `dictionaries` (first hit wins), otherwise segmented with FLMM.
// Passthrough digits are read one by one.
SpokenText ExpandUrle(std::string_view token, const Lexicon& lexicon,
                      const std::vector<const Dictionary*>& dictionaries,
                      const UrleOptions& options = {});

}  // namespace nswnorm

#endif  // NSWNORM_FLMM_H_
