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

#include "nswnorm/pipeline.h"

#include <exception>

#include "nswnorm/errors.h"
#include "nswnorm/features.h"

namespace nswnorm {

CrfTagger::CrfTagger(crf::CrfModel model) : model_(std::move(model)) {
  if (model_.template_version() != kFeatureTemplateVersion) {
    throw VersionMismatchError(
        "model was trained with feature template version " +
        std::to_string(model_.template_version()) +
        " but this build extracts version " +
        std::to_string(kFeatureTemplateVersion));
  }
  if (model_.num_labels() != kNumBioLabels) {
    throw ValidationError("model label alphabet is not the 39 BIO labels");
  }
}

LabelSequence CrfTagger::Tag(const Sentence& sentence) const {
  LabelSequence labels;
  if (sentence.empty()) return labels;
  const auto seq = model_.Encode(ExtractSentenceFeatures(sentence));
  for (int y : crf::Viterbi(model_, seq)) {
    labels.push_back(BioLabel::FromIndex(y));
  }
  return labels;
}

bool NormalizedSentence::any_fallback() const {
  for (const auto& e : expansions) {
    if (e.fallback) return true;
  }
  return false;
}

std::string Splice(const Sentence& sentence, const std::vector<NswSpan>& spans,
                   const std::vector<SpokenText>& expansions) {
  std::string out;
  auto add = [&](const std::string& word) {
    if (word.empty()) return;
    if (!out.empty()) out += ' ';
    out += word;
  };
  size_t next = 0;
  for (size_t i = 0; i < sentence.size(); ++i) {
    if (next < spans.size() && spans[next].first == i) {
      for (const auto& w : expansions[next].words) add(w);
      i = spans[next].last;
      ++next;
      continue;
    }
    add(sentence.text(i));
  }
  return out;
}

NormalizedSentence Normalizer::NormalizeTokens(const Sentence& sentence) const {
  NormalizedSentence result;
  result.sentence = sentence;
  result.labels = tagger_.Tag(result.sentence);
  if (result.labels.size() != result.sentence.size()) {
    throw ValidationError("tagger returned the wrong number of labels");
  }
  result.spans = BioDecode(result.labels, result.sentence);
  for (const auto& span : result.spans) {
    result.expansions.push_back(
        Expand(span.surface, span.tag, resources_, options_));
  }
  result.spoken = Splice(result.sentence, result.spans, result.expansions);
  return result;
}

NormalizedSentence Normalizer::Normalize(std::string_view raw) const {
  return NormalizeTokens(Tokenize(CleanText(raw)));
}

std::vector<std::string> Normalizer::NormalizeBatch(
    const std::vector<std::string>& raws) const {
  std::vector<std::string> out(raws.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < static_cast<long>(raws.size()); ++i) {
    try {
      out[i] = Normalize(raws[i]).spoken;
    } catch (...) {
#pragma omp critical(nswnorm_batch_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

namespace reference {

std::vector<std::string> NormalizeBatch(const Normalizer& normalizer,
                                        const std::vector<std::string>& raws) {
  std::vector<std::string> out;
  out.reserve(raws.size());
  for (const auto& raw : raws) out.push_back(normalizer.Normalize(raw).spoken);
  return out;
}

}  // namespace reference
}  // namespace nswnorm
