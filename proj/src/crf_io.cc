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

#include "nswnorm/crf_io.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "nswnorm/errors.h"
#include "nswnorm/taxonomy.h"

namespace nswnorm {
namespace crf {
namespace {

std::string FormatWeight(double w) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", w);
  return buf;
}

std::vector<std::string> SplitTabs(const std::string& line) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    const size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

std::string LabelName(int num_labels, int index) {
  if (num_labels == kNumBioLabels) return BioLabel::FromIndex(index).ToString();
  return "L" + std::to_string(index);
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::vector<std::string> Next() {
    std::string line;
    if (!std::getline(in_, line)) {
      throw FormatError("model file truncated after line " +
                        std::to_string(line_number_));
    }
    ++line_number_;
    return SplitTabs(line);
  }

  // Reads "key\tvalue" and checks the key.
  std::string Field(std::string_view key) {
    auto fields = Next();
    if (fields.size() != 2 || fields[0] != key) {
      Fail("expected field '" + std::string(key) + "'");
    }
    return fields[1];
  }

  [[noreturn]] void Fail(const std::string& what) const {
    throw FormatError("model file line " + std::to_string(line_number_) +
                      ": " + what);
  }

 private:
  std::istream& in_;
  int line_number_ = 0;
};

long ParseInt(const LineReader& reader, const std::string& text) {
  char* end = nullptr;
  const long v = std::strtol(text.c_str(), &end, 10);
  if (text.empty() || *end != '\0') reader.Fail("bad integer '" + text + "'");
  return v;
}

double ParseWeight(const LineReader& reader, const std::string& text) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || *end != '\0' || !std::isfinite(v)) {
    reader.Fail("bad weight '" + text + "'");
  }
  return v;
}

}  // namespace

void SaveModel(const CrfModel& full, std::ostream& out) {
  const CrfModel model = full.Pruned();
  const int L = model.num_labels();
  out << kModelMagic;
  out << "format_version\t" << kModelFormatVersion << '\n';
  out << "template_version\t" << model.template_version() << '\n';
  out << "num_labels\t" << L << '\n';
  out << "labels\t";
  for (int i = 0; i < L; ++i) out << (i ? " " : "") << LabelName(L, i);
  out << '\n';
  out << "tie_break\tlowest-label-index\n";
  out << "bio_constraints\t" << (model.bio_constraints() ? 1 : 0) << '\n';
  out << "optimizer\t" << model.optimizer_description() << '\n';
  out << "num_attributes\t" << model.num_attributes() << '\n';
  out << "num_emission\t" << model.num_emission_features() << '\n';
  const auto w = model.weights();
  for (size_t a = 0; a < model.num_attributes(); ++a) {
    const std::string& name = model.attribute(static_cast<int>(a));
    if (name.find_first_of("\t\n\r") != std::string::npos) {
      throw FormatError("attribute contains a tab or newline: " + name);
    }
    for (size_t k = model.emission_begin(a); k < model.emission_end(a); ++k) {
      out << "emission\t" << name << '\t' << model.emission_label(k) << '\t'
          << FormatWeight(w[k]) << '\n';
    }
  }
  for (int i = 0; i < L; ++i) {
    for (int j = 0; j < L; ++j) {
      out << "transition\t" << i << '\t' << j << '\t'
          << FormatWeight(model.transition(i, j)) << '\n';
    }
  }
  for (int j = 0; j < L; ++j) {
    out << "begin\t" << j << '\t' << FormatWeight(model.begin_weight(j)) << '\n';
  }
  for (int j = 0; j < L; ++j) {
    out << "end\t" << j << '\t' << FormatWeight(model.end_weight(j)) << '\n';
  }
  out << "end_of_model\n";
}

void SaveModel(const CrfModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open model file for writing: " + path);
  SaveModel(model, out);
  if (!out) throw Error("failed writing model file: " + path);
}

CrfModel LoadModel(std::istream& in) {
  std::string magic(kModelMagic.size(), '\0');
  in.read(magic.data(), static_cast<std::streamsize>(magic.size()));
  if (!in || magic != kModelMagic) {
    throw FormatError("not a model file (bad magic header)");
  }
  LineReader reader(in);
  const long format = ParseInt(reader, reader.Field("format_version"));
  if (format != kModelFormatVersion) {
    throw FormatError("unsupported model format version " +
                      std::to_string(format));
  }
  const long template_version =
      ParseInt(reader, reader.Field("template_version"));
  const long L = ParseInt(reader, reader.Field("num_labels"));
  if (L <= 0 || L > 10000) reader.Fail("bad label count");
  {
    std::istringstream names(reader.Field("labels"));
    std::string name;
    for (int i = 0; i < L; ++i) {
      if (!(names >> name) || name != LabelName(static_cast<int>(L), i)) {
        reader.Fail("label alphabet does not match");
      }
    }
  }
  if (reader.Field("tie_break") != "lowest-label-index") {
    reader.Fail("unknown tie-break rule");
  }
  const bool bio = ParseInt(reader, reader.Field("bio_constraints")) != 0;
  std::string optimizer = reader.Field("optimizer");
  const long num_attributes = ParseInt(reader, reader.Field("num_attributes"));
  const long num_emission = ParseInt(reader, reader.Field("num_emission"));
  if (num_attributes < 0 || num_emission < 0) reader.Fail("negative count");

  std::vector<std::string> attributes;
  std::vector<std::vector<int>> links;
  std::vector<double> emission_weights;
  emission_weights.reserve(num_emission);
  for (long k = 0; k < num_emission; ++k) {
    const auto f = reader.Next();
    if (f.size() != 4 || f[0] != "emission") reader.Fail("expected emission");
    if (attributes.empty() || attributes.back() != f[1]) {
      attributes.push_back(f[1]);
      links.emplace_back();
    }
    const long label = ParseInt(reader, f[2]);
    if (label < 0 || label >= L) reader.Fail("label index out of range");
    if (!links.back().empty() && links.back().back() >= label) {
      reader.Fail("emission labels must be strictly increasing");
    }
    links.back().push_back(static_cast<int>(label));
    emission_weights.push_back(ParseWeight(reader, f[3]));
  }
  if (static_cast<long>(attributes.size()) != num_attributes) {
    reader.Fail("attribute count does not match num_attributes");
  }

  CrfModel model(static_cast<int>(L), std::move(attributes), std::move(links));
  auto w = model.mutable_weights();
  std::copy(emission_weights.begin(), emission_weights.end(), w.begin());

  const int labels = static_cast<int>(L);
  for (int i = 0; i < labels; ++i) {
    for (int j = 0; j < labels; ++j) {
      const auto f = reader.Next();
      if (f.size() != 4 || f[0] != "transition" || ParseInt(reader, f[1]) != i ||
          ParseInt(reader, f[2]) != j) {
        reader.Fail("expected transition " + std::to_string(i) + " " +
                    std::to_string(j));
      }
      w[model.transition_param(i, j)] = ParseWeight(reader, f[3]);
    }
  }
  for (const char* kind : {"begin", "end"}) {
    for (int j = 0; j < labels; ++j) {
      const auto f = reader.Next();
      if (f.size() != 3 || f[0] != kind || ParseInt(reader, f[1]) != j) {
        reader.Fail(std::string("expected ") + kind + " " + std::to_string(j));
      }
      const size_t param = std::string_view(kind) == "begin"
                               ? model.begin_param(j)
                               : model.end_param(j);
      w[param] = ParseWeight(reader, f[2]);
    }
  }
  const auto tail = reader.Next();
  if (tail.size() != 1 || tail[0] != "end_of_model") {
    reader.Fail("missing end_of_model");
  }

  model.set_template_version(static_cast<int>(template_version));
  model.set_bio_constraints(bio);
  model.set_optimizer_description(std::move(optimizer));
  return model;
}

CrfModel LoadModel(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open model file: " + path);
  return LoadModel(in);
}

}  // namespace crf
}  // namespace nswnorm
