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

#ifndef NSWNORM_RESOURCES_H_
#define NSWNORM_RESOURCES_H_

#include <string>

#include "nswnorm/dictionary.h"
#include "nswnorm/flmm.h"

namespace nswnorm {

// Linguistic data used by the expanders. Immutable once loaded.
struct Resources {
  Dictionary abbreviations;  // abbreviations.tsv
  Dictionary loanwords;      // loanwords.tsv
  Dictionary units;          // units.tsv
  Dictionary currencies;     // currencies.tsv
  Lexicon lexicon;           // lexicon.txt

  // Loads the five files from `directory`. Throws Error if one is missing.
  static Resources Load(const std::string& directory);

  // $NSWNORM_RESOURCES if set, else the resources/ directory of the source
  // tree this library was built from.
  static std::string DefaultDirectory();
};

}  // namespace nswnorm

#endif  // NSWNORM_RESOURCES_H_
