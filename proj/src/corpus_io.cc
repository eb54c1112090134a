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

#include "nswnorm/corpus_io.h"

#include <fstream>
#include <istream>
#include <ostream>

#include "nswnorm/errors.h"
#include "nswnorm/utf8.h"

namespace nswnorm {
namespace {

std::string Where(std::string_view origin, int line) {
  return std::string(origin) + ":" + std::to_string(line) + ": ";
}

void StripCr(std::string* line) {
  if (!line->empty() && line->back() == '\r') line->pop_back();
}

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  return in;
}

std::ofstream OpenOutput(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open file for writing: " + path);
  return out;
}

}  // namespace

TrainingCorpus ReadConll(std::istream& in, std::string_view origin,
                         bool labels_optional) {
  TrainingCorpus corpus;
  std::vector<std::string> tokens;
  LabelSequence labels;
  int line_number = 0;
  int sentence_start = 1;
  auto flush = [&] {
    if (tokens.empty()) return;
    if (!IsWellFormed(labels)) {
      throw ValidationError(Where(origin, sentence_start) +
                            "ill-formed BIO label sequence");
    }
    corpus.emplace_back(SentenceFromTokens(tokens), labels);
    tokens.clear();
    labels.clear();
  };
  std::string line;
  while (std::getline(in, line)) {
    ++line_number;
    StripCr(&line);
    if (line.find_first_not_of(" \t") == std::string::npos) {
      flush();
      continue;
    }
    if (tokens.empty()) sentence_start = line_number;
    if (!utf8::IsValid(line)) {
      throw FormatError(Where(origin, line_number) + "invalid UTF-8");
    }
    const size_t tab = line.find('\t');
    std::string token = line.substr(0, tab);
    if (token.empty() || token.find(' ') != std::string::npos) {
      throw FormatError(Where(origin, line_number) +
                        "token is empty or contains a space");
    }
    BioLabel label;
    if (tab == std::string::npos) {
      if (!labels_optional) {
        throw FormatError(Where(origin, line_number) +
                          "expected 'token<TAB>label'");
      }
    } else {
      const std::string text = line.substr(tab + 1);
      auto parsed = BioLabel::Parse(text);
      if (!parsed) {
        throw FormatError(Where(origin, line_number) + "unknown label '" +
                          text + "'");
      }
      label = *parsed;
    }
    tokens.push_back(std::move(token));
    labels.push_back(label);
  }
  flush();
  return corpus;
}

TrainingCorpus LoadConll(const std::string& path, bool labels_optional) {
  auto in = OpenInput(path);
  return ReadConll(in, path, labels_optional);
}

void WriteConll(const TrainingCorpus& corpus, std::ostream& out) {
  for (const auto& [sentence, labels] : corpus) {
    for (size_t i = 0; i < sentence.size(); ++i) {
      out << sentence.text(i) << '\t' << labels[i].ToString() << '\n';
    }
    out << '\n';
  }
}

void SaveConll(const TrainingCorpus& corpus, const std::string& path) {
  auto out = OpenOutput(path);
  WriteConll(corpus, out);
}

std::vector<ParallelRecord> ReadParallel(std::istream& in,
                                         std::string_view origin) {
  std::vector<ParallelRecord> records;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    StripCr(&line);
    if (line.empty()) continue;
    const size_t tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw FormatError(Where(origin, line_number) +
                        "expected 'written<TAB>spoken'");
    }
    if (!utf8::IsValid(line)) {
      throw FormatError(Where(origin, line_number) + "invalid UTF-8");
    }
    records.push_back({line.substr(0, tab), line.substr(tab + 1)});
  }
  return records;
}

std::vector<ParallelRecord> LoadParallel(const std::string& path) {
  auto in = OpenInput(path);
  return ReadParallel(in, path);
}

void WriteParallel(const std::vector<ParallelRecord>& records,
                   std::ostream& out) {
  for (const auto& r : records) out << r.written << '\t' << r.spoken << '\n';
}

void SaveParallel(const std::vector<ParallelRecord>& records,
                  const std::string& path) {
  auto out = OpenOutput(path);
  WriteParallel(records, out);
}

std::vector<std::string> ReadLines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    StripCr(&line);
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace nswnorm
