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

// Command-line front end: train, tag, normalize, segment, eval and gen.
//
//   nswnorm gen --seed 42 --size 2000 --conll train.conll --parallel train.tsv
//   nswnorm train --corpus train.conll --model model.crf
//   echo "Ngày 31/3, gần 92000 ca." | nswnorm normalize --model model.crf

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nswnorm/corpus_io.h"
#include "nswnorm/crf_io.h"
#include "nswnorm/crf_train.h"
#include "nswnorm/errors.h"
#include "nswnorm/evaluation.h"
#include "nswnorm/generator.h"
#include "nswnorm/pipeline.h"
#include "nswnorm/resources.h"

namespace {

using namespace nswnorm;

// Reads `path`, or standard input for "" and "-".
std::string Slurp(const std::string& path) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open input file: " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

std::vector<std::string> InputLines(const std::string& path) {
  std::istringstream in(Slurp(path));
  return ReadLines(in);
}

TrainingCorpus InputConll(const std::string& path, bool labels_optional) {
  std::istringstream in(Slurp(path));
  return ReadConll(in, path.empty() || path == "-" ? "<stdin>" : path,
                   labels_optional);
}

// The spoken column of a parallel file, or whole lines of a plain file.
std::vector<std::string> SpokenColumn(const std::string& path) {
  std::vector<std::string> out;
  for (auto& line : InputLines(path)) {
    const size_t tab = line.rfind('\t');
    out.push_back(tab == std::string::npos ? line : line.substr(tab + 1));
  }
  return out;
}

Resources LoadResources(const std::string& dir) {
  return Resources::Load(dir.empty() ? Resources::DefaultDirectory() : dir);
}

struct TrainArgs {
  std::string corpus, model;
  crf::TrainConfig config;
  bool verbose = false;
};

int RunTrain(const TrainArgs& a) {
  const TrainingCorpus corpus = LoadConll(a.corpus);
  crf::TrainConfig config = a.config;
  if (a.verbose) {
    config.on_iteration = [](const optim::IterationInfo& info) {
      std::cerr << "iter " << info.iteration << " objective " << info.objective
                << " active " << info.active_features << '\n';
    };
  }
  const auto result = crf::Train(corpus, config);
  crf::SaveModel(result.model, a.model);
  std::cerr << "trained on " << corpus.size() << " sentences, "
            << result.iterations << " iterations (" << result.stop_reason
            << ")\n";
  return 0;
}

struct TagArgs {
  std::string model, input, format = "conll", input_format = "text";
};

int RunTag(const TagArgs& a) {
  const CrfTagger tagger(crf::LoadModel(a.model));
  std::vector<Sentence> sentences;
  if (a.input_format == "conll") {
    for (auto& [s, labels] : InputConll(a.input, true)) sentences.push_back(s);
  } else {
    for (const auto& line : InputLines(a.input)) {
      sentences.push_back(Tokenize(CleanText(line)));
    }
  }
  for (const auto& sentence : sentences) {
    const LabelSequence labels = tagger.Tag(sentence);
    if (a.format == "conll") {
      for (size_t i = 0; i < sentence.size(); ++i) {
        std::cout << sentence.text(i) << '\t' << labels[i].ToString() << '\n';
      }
    } else {
      for (const auto& span : BioDecode(labels, sentence)) {
        std::cout << TagName(span.tag) << '\t' << span.first << '\t'
                  << span.last << '\t' << span.surface << '\n';
      }
    }
    std::cout << '\n';
  }
  return 0;
}

struct NormalizeArgs {
  std::string model, resources, input, fraction = "tren";
  bool read_plus = false;
  bool verbatim_separators = false;
};

int RunNormalize(const NormalizeArgs& a) {
  const CrfTagger tagger(crf::LoadModel(a.model));
  const Resources resources = LoadResources(a.resources);
  ExpandOptions options;
  options.fraction =
      a.fraction == "phan" ? FractionStyle::kPhan : FractionStyle::kTren;
  options.read_plus = a.read_plus;
  options.urle.verbatim_separators = a.verbatim_separators;
  const Normalizer normalizer(tagger, resources, options);
  for (const auto& line : normalizer.NormalizeBatch(InputLines(a.input))) {
    std::cout << line << '\n';
  }
  return 0;
}

struct SegmentArgs {
  std::string lexicon, input;
  bool full_window = false;
};

int RunSegment(const SegmentArgs& a) {
  const Lexicon lexicon = Lexicon::Load(a.lexicon);
  FlmmOptions options;
  options.cap_window = !a.full_window;
  for (const auto& line : InputLines(a.input)) {
    SpokenText words;
    words.Append(line);
    std::string out;
    for (const auto& w : words.words) {
      if (!out.empty()) out += ' ';
      out += SegmentString(lexicon, w, options);
    }
    std::cout << out << '\n';
  }
  return 0;
}

struct EvalArgs {
  std::string gold, pred, metric = "prf";
};

int RunEval(const EvalArgs& a) {
  if (a.metric == "ser") {
    std::cout << SentenceErrorRate(SpokenColumn(a.gold), SpokenColumn(a.pred))
                     .ToString()
              << '\n';
    return 0;
  }
  const TrainingCorpus gold = LoadConll(a.gold);
  const TrainingCorpus pred = LoadConll(a.pred);
  std::vector<LabelSequence> g, p;
  for (const auto& [s, labels] : gold) g.push_back(labels);
  for (const auto& [s, labels] : pred) p.push_back(labels);
  std::cout << SpanPrf(g, p).ToString();
  return 0;
}

struct GenArgs {
  uint64_t seed = 42;
  int size = 100;
  std::string conll = "synthetic.conll", parallel = "synthetic.tsv", resources;
};

int RunGen(const GenArgs& a) {
  const Resources resources = LoadResources(a.resources);
  const auto data = GenerateSyntheticCorpus(a.seed, a.size, resources);
  SaveConll(data.corpus, a.conll);
  SaveParallel(data.parallel, a.parallel);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vietnamese non-standard word detection and normalization"};
  app.require_subcommand(1);

  TrainArgs train;
  auto* train_cmd = app.add_subcommand("train", "Train a CRF tagger");
  train_cmd->add_option("--corpus", train.corpus, "CoNLL training file")
      ->required();
  train_cmd->add_option("--model", train.model, "Output model file")->required();
  train_cmd->add_option("--l1", train.config.l1, "L1 coefficient")
      ->check(CLI::NonNegativeNumber);
  train_cmd->add_option("--l2", train.config.l2, "L2 coefficient")
      ->check(CLI::NonNegativeNumber);
  train_cmd->add_option("--max-iter", train.config.max_iterations,
                        "Maximum optimizer iterations")
      ->check(CLI::PositiveNumber);
  train_cmd->add_option("--tol", train.config.tolerance,
                        "Relative objective decrease to stop at");
  train_cmd->add_option("--threads", train.config.num_threads,
                        "OpenMP threads (0: default)");
  train_cmd->add_flag("-v,--verbose", train.verbose, "Log every iteration");

  TagArgs tag;
  auto* tag_cmd = app.add_subcommand("tag", "Tag text with BIO labels");
  tag_cmd->add_option("--model", tag.model, "Model file")->required();
  tag_cmd->add_option("--input", tag.input, "Input file (default stdin)");
  tag_cmd->add_option("--format", tag.format, "Output format")
      ->check(CLI::IsMember({"conll", "spans"}));
  tag_cmd->add_option("--input-format", tag.input_format, "Input format")
      ->check(CLI::IsMember({"text", "conll"}));

  NormalizeArgs norm;
  auto* norm_cmd = app.add_subcommand("normalize", "Text to spoken form");
  norm_cmd->add_option("--model", norm.model, "Model file")->required();
  norm_cmd->add_option("--resources", norm.resources,
                       "Resource directory (default $NSWNORM_RESOURCES)");
  norm_cmd->add_option("--input", norm.input, "Input file (default stdin)");
  norm_cmd->add_option("--fraction", norm.fraction, "Fraction connective")
      ->check(CLI::IsMember({"tren", "phan"}));
  norm_cmd->add_flag("--read-plus", norm.read_plus, "Read '+' as \"cộng\"");
  norm_cmd->add_flag("--verbatim-separators", norm.verbatim_separators,
                     "Keep URL separators verbatim");

  SegmentArgs seg;
  auto* seg_cmd = app.add_subcommand("segment", "Maximum-matching segmentation");
  seg_cmd->add_option("--lexicon", seg.lexicon, "Lexicon file")->required();
  seg_cmd->add_option("--input", seg.input, "Input file (default stdin)");
  seg_cmd->add_flag("--full-window", seg.full_window,
                    "Do not cap the window at the longest entry");

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Score predictions");
  eval_cmd->add_option("--gold", eval.gold, "Gold file")->required();
  eval_cmd->add_option("--pred", eval.pred, "Predicted file")->required();
  eval_cmd->add_option("--metric", eval.metric, "prf (CoNLL) or ser")
      ->check(CLI::IsMember({"prf", "ser"}));

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic corpus");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("--size", gen.size, "Sentence count")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--conll", gen.conll, "Output CoNLL file");
  gen_cmd->add_option("--parallel", gen.parallel, "Output parallel file");
  gen_cmd->add_option("--resources", gen.resources, "Resource directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (train_cmd->parsed()) return RunTrain(train);
    if (tag_cmd->parsed()) return RunTag(tag);
    if (norm_cmd->parsed()) return RunNormalize(norm);
    if (seg_cmd->parsed()) return RunSegment(seg);
    if (eval_cmd->parsed()) return RunEval(eval);
    if (gen_cmd->parsed()) return RunGen(gen);
  } catch (const VersionMismatchError& e) {
    std::cerr << "error: model version mismatch: " << e.what() << '\n';
    return 3;
  } catch (const FormatError& e) {
    std::cerr << "error: malformed input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
