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

#include "nswnorm/evaluation.h"

#include <cstdio>
#include <set>
#include <tuple>

#include "nswnorm/errors.h"
#include "nswnorm/utf8.h"

namespace nswnorm {

void PrfCounts::Finalize() {
  precision_undefined = tp + fp == 0;
  recall_undefined = tp + fn == 0;
  precision = precision_undefined ? 0.0 : static_cast<double>(tp) / (tp + fp);
  recall = recall_undefined ? 0.0 : static_cast<double>(tp) / (tp + fn);
  f1 = precision + recall > 0.0
           ? 2.0 * precision * recall / (precision + recall)
           : 0.0;
}

PrfReport SpanPrf(const std::vector<LabelSequence>& gold,
                  const std::vector<LabelSequence>& predicted) {
  if (gold.size() != predicted.size()) {
    throw ValidationError("gold has " + std::to_string(gold.size()) +
                          " sentences, prediction has " +
                          std::to_string(predicted.size()));
  }
  PrfReport report;
  report.confusion.assign(kNumBioLabels, std::vector<long>(kNumBioLabels, 0));
  using Key = std::tuple<size_t, size_t, int>;
  for (size_t s = 0; s < gold.size(); ++s) {
    if (gold[s].size() != predicted[s].size()) {
      throw ValidationError("sentence " + std::to_string(s) +
                            ": gold and predicted lengths differ");
    }
    for (size_t i = 0; i < gold[s].size(); ++i) {
      ++report.confusion[gold[s][i].index()][predicted[s][i].index()];
    }
    std::set<Key> gold_spans;
    for (const auto& span : BioDecode(gold[s])) {
      gold_spans.emplace(span.first, span.last, static_cast<int>(span.tag));
    }
    std::set<Key> pred_spans;
    for (const auto& span : BioDecode(predicted[s])) {
      pred_spans.emplace(span.first, span.last, static_cast<int>(span.tag));
    }
    for (const Key& k : pred_spans) {
      auto& c = report.per_tag[std::get<2>(k)];
      if (gold_spans.count(k)) {
        ++c.tp;
      } else {
        ++c.fp;
      }
    }
    for (const Key& k : gold_spans) {
      if (!pred_spans.count(k)) ++report.per_tag[std::get<2>(k)].fn;
    }
  }
  for (auto& c : report.per_tag) {
    c.Finalize();
    report.micro.tp += c.tp;
    report.micro.fp += c.fp;
    report.micro.fn += c.fn;
    if (c.tp + c.fp + c.fn == 0) continue;
    report.macro_precision += c.precision;
    report.macro_recall += c.recall;
    report.macro_f1 += c.f1;
    ++report.macro_tags;
  }
  report.micro.Finalize();
  if (report.macro_tags > 0) {
    report.macro_precision /= report.macro_tags;
    report.macro_recall /= report.macro_tags;
    report.macro_f1 /= report.macro_tags;
  }
  return report;
}

std::string PrfReport::ToString() const {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof(line), "%-10s %9s %9s %9s %7s %7s %7s\n", "tag",
                "precision", "recall", "f1", "tp", "fp", "fn");
  out += line;
  auto row = [&](std::string_view name, const PrfCounts& c) {
    std::snprintf(line, sizeof(line), "%-10.*s %9.4f %9.4f %9.4f %7ld %7ld %7ld%s\n",
                  static_cast<int>(name.size()), name.data(), c.precision,
                  c.recall, c.f1, c.tp, c.fp, c.fn,
                  c.precision_undefined ? "  (precision undefined)" : "");
    out += line;
  };
  for (Tag tag : AllTags()) {
    const auto& c = of(tag);
    if (c.tp + c.fp + c.fn > 0) row(TagName(tag), c);
  }
  row("micro", micro);
  std::snprintf(line, sizeof(line), "%-10s %9.4f %9.4f %9.4f   over %d tags\n",
                "macro", macro_precision, macro_recall, macro_f1, macro_tags);
  out += line;
  return out;
}

SerReport MakeSerReport(long errors, long total) {
  if (errors < 0 || total < 0 || errors > total) {
    throw ValidationError("bad SER counts");
  }
  SerReport r;
  r.errors = errors;
  r.total = total;
  r.rate = total == 0 ? 0.0 : static_cast<double>(errors) / total;
  return r;
}

std::string SerReport::ToString() const {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "SER %.2f%% (%ld/%ld)", 100.0 * rate, errors,
                total);
  return buf;
}

std::string NormalizeWhitespace(std::string_view text) {
  std::string out;
  std::string word;
  for (char32_t cp : utf8::Decode(text)) {
    if (utf8::IsSpace(cp)) {
      if (!word.empty()) {
        if (!out.empty()) out += ' ';
        out += word;
        word.clear();
      }
    } else {
      utf8::Append(&word, cp);
    }
  }
  if (!word.empty()) {
    if (!out.empty()) out += ' ';
    out += word;
  }
  return out;
}

SerReport SentenceErrorRate(const std::vector<std::string>& gold,
                            const std::vector<std::string>& predicted) {
  if (gold.size() != predicted.size()) {
    throw ValidationError("gold has " + std::to_string(gold.size()) +
                          " sentences, prediction has " +
                          std::to_string(predicted.size()));
  }
  long errors = 0;
  for (size_t i = 0; i < gold.size(); ++i) {
    if (NormalizeWhitespace(gold[i]) != NormalizeWhitespace(predicted[i])) {
      ++errors;
    }
  }
  return MakeSerReport(errors, static_cast<long>(gold.size()));
}

}  // namespace nswnorm
