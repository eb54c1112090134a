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

#include "nswnorm/resources.h"

#include <cstdlib>

#ifndef NSWNORM_DEFAULT_RESOURCES
#define NSWNORM_DEFAULT_RESOURCES "resources"
#endif

namespace nswnorm {

Resources Resources::Load(const std::string& directory) {
  const std::string base = directory.empty() ? "." : directory;
  Resources r;
  r.abbreviations = Dictionary::Load(base + "/abbreviations.tsv");
  r.loanwords = Dictionary::Load(base + "/loanwords.tsv");
  r.units = Dictionary::Load(base + "/units.tsv");
  r.currencies = Dictionary::Load(base + "/currencies.tsv");
  r.lexicon = Lexicon::Load(base + "/lexicon.txt");
  return r;
}

std::string Resources::DefaultDirectory() {
  if (const char* env = std::getenv("NSWNORM_RESOURCES"); env && *env) {
    return env;
  }
  return NSWNORM_DEFAULT_RESOURCES;
}

}  // namespace nswnorm
