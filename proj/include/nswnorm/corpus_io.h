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

// CoNLL-style corpus files and written/spoken parallel files.

#ifndef NSWNORM_CORPUS_IO_H_
#define NSWNORM_CORPUS_IO_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "nswnorm/crf_train.h"

namespace nswnorm {

using crf::TrainingCorpus;

// One "token<TAB>label" per line, a blank line after every sentence.
// With `labels_optional` a line may hold just the token (labelled O).
// Throws FormatError on bad lines or labels and ValidationError on an
// ill-formed BIO sequence; messages carry the line number.
TrainingCorpus ReadConll(std::istream& in, std::string_view origin = "<input>",
                         bool labels_optional = false);
TrainingCorpus LoadConll(const std::string& path, bool labels_optional = false);

void WriteConll(const TrainingCorpus& corpus, std::ostream& out);
void SaveConll(const TrainingCorpus& corpus, const std::string& path);

struct ParallelRecord {
  std::string written;
  std::string spoken;

  bool operator==(const ParallelRecord&) const = default;
};

// One "written<TAB>spoken" record per line.
std::vector<ParallelRecord> ReadParallel(std::istream& in,
                                         std::string_view origin = "<input>");
std::vector<ParallelRecord> LoadParallel(const std::string& path);

void WriteParallel(const std::vector<ParallelRecord>& records,
                   std::ostream& out);
void SaveParallel(const std::vector<ParallelRecord>& records,
                  const std::string& path);

// All lines of a text file, trailing CR removed.
std::vector<std::string> ReadLines(std::istream& in);

}  // namespace nswnorm

#endif  // NSWNORM_CORPUS_IO_H_
