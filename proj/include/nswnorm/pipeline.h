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

// clean -> tokenize -> tag -> decode spans -> expand -> splice.

#ifndef NSWNORM_PIPELINE_H_
#define NSWNORM_PIPELINE_H_

#include <string>
#include <string_view>
#include <vector>

#include "nswnorm/crf.h"
#include "nswnorm/expanders.h"
#include "nswnorm/preprocess.h"
#include "nswnorm/resources.h"
#include "nswnorm/taxonomy.h"

namespace nswnorm {

// Sequence tagger interface; implementations must be safe to call from
// several threads at once.
class Tagger {
 public:
  virtual ~Tagger() = default;
  virtual LabelSequence Tag(const Sentence& sentence) const = 0;
};

class CrfTagger : public Tagger {
 public:
  // Throws VersionMismatchError if the model was trained with another
  // feature template version.
  explicit CrfTagger(crf::CrfModel model);

  LabelSequence Tag(const Sentence& sentence) const override;
  const crf::CrfModel& model() const { return model_; }

 private:
  crf::CrfModel model_;
};

struct NormalizedSentence {
  Sentence sentence;
  LabelSequence labels;
  std::vector<NswSpan> spans;
  std::vector<SpokenText> expansions;  // parallel to spans
  std::string spoken;

  bool any_fallback() const;
};

// Replaces each span by its expansion; other tokens are kept as written.
// Everything is joined by single spaces.
std::string Splice(const Sentence& sentence, const std::vector<NswSpan>& spans,
                   const std::vector<SpokenText>& expansions);

class Normalizer {
 public:
  Normalizer(const Tagger& tagger, const Resources& resources,
             ExpandOptions options = {})
      : tagger_(tagger), resources_(resources), options_(std::move(options)) {}

  // Throws Utf8Error on invalid UTF-8; total otherwise.
  NormalizedSentence Normalize(std::string_view raw) const;

  // Parallel over sentences; output order follows input order.
  std::vector<std::string> NormalizeBatch(
      const std::vector<std::string>& raws) const;
  // Tags an already tokenized sentence and expands it.
  NormalizedSentence NormalizeTokens(const Sentence& sentence) const;

 private:
  const Tagger& tagger_;
  const Resources& resources_;
  ExpandOptions options_;
};

namespace reference {

// Serial NormalizeBatch.
std::vector<std::string> NormalizeBatch(const Normalizer& normalizer,
                                        const std::vector<std::string>& raws);

}  // namespace reference

}  // namespace nswnorm

#endif  // NSWNORM_PIPELINE_H_
