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

#include "nswnorm/crf.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "nswnorm/errors.h"
#include "nswnorm/taxonomy.h"

namespace nswnorm {
namespace crf {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void CheckNonEmpty(const EncodedSequence& seq) {
  if (seq.empty()) throw ValidationError("empty sequence");
}

// exp(trans - max) for the shifted forward/backward sums.
struct ExpTransitions {
  std::vector<double> values;  // L x L
  double shift = 0.0;
};

ExpTransitions ExponentiateTransitions(const CrfModel& model) {
  const int L = model.num_labels();
  ExpTransitions out;
  out.values.resize(static_cast<size_t>(L) * L);
  double shift = kNegInf;
  for (int i = 0; i < L; ++i) {
    for (int j = 0; j < L; ++j) shift = std::max(shift, model.transition(i, j));
  }
  out.shift = shift;
  for (int i = 0; i < L; ++i) {
    for (int j = 0; j < L; ++j) {
      out.values[static_cast<size_t>(i) * L + j] =
          std::exp(model.transition(i, j) - shift);
    }
  }
  return out;
}

double RowMax(const double* row, int n) {
  double m = kNegInf;
  for (int i = 0; i < n; ++i) m = std::max(m, row[i]);
  return m;
}

}  // namespace

double LogSumExp(std::span<const double> values) {
  double m = kNegInf;
  for (double v : values) m = std::max(m, v);
  if (m == kNegInf) return kNegInf;
  double sum = 0.0;
  for (double v : values) sum += std::exp(v - m);
  return m + std::log(sum);
}

CrfModel::CrfModel(int num_labels, std::vector<std::string> attributes,
                   std::vector<std::vector<int>> links)
    : num_labels_(num_labels), attributes_(std::move(attributes)) {
  if (num_labels_ <= 0) throw ValidationError("model needs at least one label");
  if (links.size() != attributes_.size()) {
    throw ValidationError("attribute/link count mismatch");
  }
  attribute_index_.reserve(attributes_.size());
  for (size_t a = 0; a < attributes_.size(); ++a) {
    if (!attribute_index_.emplace(attributes_[a], static_cast<int>(a)).second) {
      throw ValidationError("duplicate attribute: " + attributes_[a]);
    }
    auto& labels = links[a];
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    for (int label : labels) {
      if (label < 0 || label >= num_labels_) {
        throw ValidationError("label index out of range in attribute links");
      }
      emission_labels_.push_back(label);
    }
    emission_offsets_.push_back(emission_labels_.size());
  }
  weights_.assign(emission_labels_.size() +
                      static_cast<size_t>(num_labels_) * num_labels_ +
                      2 * static_cast<size_t>(num_labels_),
                  0.0);
}

CrfModel CrfModel::Dense(int num_labels, std::vector<std::string> attributes) {
  std::vector<int> all(num_labels);
  for (int i = 0; i < num_labels; ++i) all[i] = i;
  std::vector<std::vector<int>> links(attributes.size(), all);
  return CrfModel(num_labels, std::move(attributes), std::move(links));
}

std::optional<int> CrfModel::FindAttribute(std::string_view name) const {
  const auto it = attribute_index_.find(std::string(name));
  if (it == attribute_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<size_t> CrfModel::EmissionParam(int attribute, int label) const {
  const auto first = emission_labels_.begin() + emission_begin(attribute);
  const auto last = emission_labels_.begin() + emission_end(attribute);
  const auto it = std::lower_bound(first, last, label);
  if (it == last || *it != label) return std::nullopt;
  return static_cast<size_t>(it - emission_labels_.begin());
}

CrfModel CrfModel::Pruned() const {
  std::vector<std::string> attributes;
  std::vector<std::vector<int>> links;
  std::vector<double> kept;
  for (size_t a = 0; a < attributes_.size(); ++a) {
    std::vector<int> labels;
    for (size_t k = emission_begin(a); k < emission_end(a); ++k) {
      if (weights_[k] != 0.0) {
        labels.push_back(emission_labels_[k]);
        kept.push_back(weights_[k]);
      }
    }
    if (labels.empty()) continue;
    attributes.push_back(attributes_[a]);
    links.push_back(std::move(labels));
  }
  CrfModel out(num_labels_, std::move(attributes), std::move(links));
  std::copy(kept.begin(), kept.end(), out.weights_.begin());
  std::copy(weights_.begin() + emission_labels_.size(), weights_.end(),
            out.weights_.begin() + kept.size());
  out.template_version_ = template_version_;
  out.bio_constraints_ = bio_constraints_;
  out.optimizer_description_ = optimizer_description_;
  return out;
}

EncodedSequence CrfModel::Encode(
    const std::vector<FeatureSet>& features) const {
  EncodedSequence seq;
  seq.attributes.resize(features.size());
  for (size_t t = 0; t < features.size(); ++t) {
    for (const auto& name : features[t]) {
      const auto it = attribute_index_.find(name);
      if (it != attribute_index_.end()) {
        seq.attributes[t].push_back(it->second);
      }
    }
  }
  return seq;
}

Matrix EmissionScores(const CrfModel& model, const EncodedSequence& seq) {
  const auto w = model.weights();
  Matrix emit(seq.size(), model.num_labels());
  for (size_t t = 0; t < seq.size(); ++t) {
    double* row = emit.row(t);
    for (int a : seq.attributes[t]) {
      for (size_t k = model.emission_begin(a); k < model.emission_end(a); ++k) {
        row[model.emission_label(k)] += w[k];
      }
    }
  }
  return emit;
}

double ScoreSequence(const CrfModel& model, const EncodedSequence& seq,
                     std::span<const int> labels) {
  if (labels.size() != seq.size()) {
    throw ValidationError("label count " + std::to_string(labels.size()) +
                          " does not match sequence length " +
                          std::to_string(seq.size()));
  }
  if (seq.empty()) return 0.0;
  const Matrix emit = EmissionScores(model, seq);
  double score = model.begin_weight(labels.front()) +
                 model.end_weight(labels.back());
  for (size_t t = 0; t < seq.size(); ++t) {
    score += emit(t, labels[t]);
    if (t > 0) score += model.transition(labels[t - 1], labels[t]);
  }
  return score;
}

Lattice ForwardBackward(const CrfModel& model, const EncodedSequence& seq) {
  CheckNonEmpty(seq);
  const int L = model.num_labels();
  const size_t T = seq.size();
  const ExpTransitions et = ExponentiateTransitions(model);

  Lattice lat;
  lat.emission = EmissionScores(model, seq);
  lat.alpha = Matrix(T, L);
  lat.beta = Matrix(T, L);
  std::vector<double> scaled(L);
  std::vector<double> sums(L);

  for (int j = 0; j < L; ++j) {
    lat.alpha(0, j) = model.begin_weight(j) + lat.emission(0, j);
  }
  for (size_t t = 1; t < T; ++t) {
    const double* prev = lat.alpha.row(t - 1);
    const double m = RowMax(prev, L);
    for (int i = 0; i < L; ++i) scaled[i] = std::exp(prev[i] - m);
    std::fill(sums.begin(), sums.end(), 0.0);
    for (int i = 0; i < L; ++i) {
      const double a = scaled[i];
      if (a == 0.0) continue;
      const double* trow = et.values.data() + static_cast<size_t>(i) * L;
      for (int j = 0; j < L; ++j) sums[j] += a * trow[j];
    }
    for (int j = 0; j < L; ++j) {
      lat.alpha(t, j) = lat.emission(t, j) + m + et.shift + std::log(sums[j]);
    }
  }

  for (int i = 0; i < L; ++i) lat.beta(T - 1, i) = model.end_weight(i);
  for (size_t t = T - 1; t-- > 0;) {
    for (int j = 0; j < L; ++j) {
      scaled[j] = lat.emission(t + 1, j) + lat.beta(t + 1, j);
    }
    const double m = RowMax(scaled.data(), L);
    for (int j = 0; j < L; ++j) scaled[j] = std::exp(scaled[j] - m);
    for (int i = 0; i < L; ++i) {
      const double* trow = et.values.data() + static_cast<size_t>(i) * L;
      double s = 0.0;
      for (int j = 0; j < L; ++j) s += trow[j] * scaled[j];
      lat.beta(t, i) = m + et.shift + std::log(s);
    }
  }

  std::vector<double> terminal(L);
  for (int j = 0; j < L; ++j) {
    terminal[j] = lat.alpha(T - 1, j) + model.end_weight(j);
  }
  lat.log_z = LogSumExp(terminal);
  return lat;
}

double LogPartition(const CrfModel& model, const EncodedSequence& seq) {
  return ForwardBackward(model, seq).log_z;
}

double LogPartitionBackward(const CrfModel& model, const EncodedSequence& seq) {
  const Lattice lat = ForwardBackward(model, seq);
  std::vector<double> initial(model.num_labels());
  for (int j = 0; j < model.num_labels(); ++j) {
    initial[j] = model.begin_weight(j) + lat.emission(0, j) + lat.beta(0, j);
  }
  return LogSumExp(initial);
}

Matrix Marginals(const CrfModel& model, const EncodedSequence& seq) {
  const Lattice lat = ForwardBackward(model, seq);
  Matrix out(seq.size(), model.num_labels());
  for (size_t t = 0; t < seq.size(); ++t) {
    for (int j = 0; j < model.num_labels(); ++j) {
      out(t, j) = std::exp(lat.alpha(t, j) + lat.beta(t, j) - lat.log_z);
    }
  }
  return out;
}

std::vector<int> Viterbi(const CrfModel& model, const EncodedSequence& seq) {
  CheckNonEmpty(seq);
  const int L = model.num_labels();
  const size_t T = seq.size();
  const bool constrained = model.bio_constraints() && L == kNumBioLabels;

  std::vector<double> trans(static_cast<size_t>(L) * L);
  std::vector<double> begin(L);
  for (int i = 0; i < L; ++i) {
    begin[i] = model.begin_weight(i);
    if (constrained &&
        !IsAllowedTransition(std::nullopt, BioLabel::FromIndex(i))) {
      begin[i] = kNegInf;
    }
    for (int j = 0; j < L; ++j) {
      double w = model.transition(i, j);
      if (constrained && !IsAllowedTransition(BioLabel::FromIndex(i),
                                              BioLabel::FromIndex(j))) {
        w = kNegInf;
      }
      trans[static_cast<size_t>(i) * L + j] = w;
    }
  }

  const Matrix emit = EmissionScores(model, seq);
  Matrix best(T, L);
  std::vector<int> back(T * L, 0);
  for (int j = 0; j < L; ++j) best(0, j) = begin[j] + emit(0, j);
  for (size_t t = 1; t < T; ++t) {
    for (int j = 0; j < L; ++j) {
      double top = kNegInf;
      int arg = 0;
      for (int i = 0; i < L; ++i) {
        const double v = best(t - 1, i) + trans[static_cast<size_t>(i) * L + j];
        if (v > top) {
          top = v;
          arg = i;
        }
      }
      best(t, j) = top + emit(t, j);
      back[t * L + j] = arg;
    }
  }

  double top = kNegInf;
  int last = 0;
  for (int j = 0; j < L; ++j) {
    const double v = best(T - 1, j) + model.end_weight(j);
    if (v > top) {
      top = v;
      last = j;
    }
  }
  std::vector<int> path(T);
  path[T - 1] = last;
  for (size_t t = T - 1; t > 0; --t) path[t - 1] = back[t * L + path[t]];
  return path;
}

double AccumulateNllGradient(const CrfModel& model, const EncodedSequence& seq,
                             std::span<const int> labels,
                             std::span<double> gradient) {
  if (labels.size() != seq.size()) {
    throw ValidationError("label count does not match sequence length");
  }
  const Lattice lat = ForwardBackward(model, seq);
  const int L = model.num_labels();
  const size_t T = seq.size();
  const auto w = model.weights();

  // Node marginals feed emission, begin and end gradients.
  std::vector<double> marginal(L);
  double gold_score = 0.0;
  for (size_t t = 0; t < T; ++t) {
    for (int j = 0; j < L; ++j) {
      marginal[j] = std::exp(lat.alpha(t, j) + lat.beta(t, j) - lat.log_z);
    }
    const int gold = labels[t];
    gold_score += lat.emission(t, gold);
    for (int a : seq.attributes[t]) {
      for (size_t k = model.emission_begin(a); k < model.emission_end(a); ++k) {
        const int y = model.emission_label(k);
        gradient[k] += marginal[y] - (y == gold ? 1.0 : 0.0);
      }
    }
    if (t == 0) {
      for (int j = 0; j < L; ++j) gradient[model.begin_param(j)] += marginal[j];
      gradient[model.begin_param(gold)] -= 1.0;
      gold_score += w[model.begin_param(gold)];
    }
    if (t == T - 1) {
      for (int j = 0; j < L; ++j) gradient[model.end_param(j)] += marginal[j];
      gradient[model.end_param(gold)] -= 1.0;
      gold_score += w[model.end_param(gold)];
    }
  }

  // Pair marginals: P(y_{t-1}=i, y_t=j) =
  //   exp(alpha(t-1,i) + trans(i,j) + emit(t,j) + beta(t,j) - logZ).
  const ExpTransitions et = ExponentiateTransitions(model);
  const size_t trans_base = model.transition_param(0, 0);
  std::vector<double> left(L), right(L);
  for (size_t t = 1; t < T; ++t) {
    const double ma = RowMax(lat.alpha.row(t - 1), L);
    for (int i = 0; i < L; ++i) left[i] = std::exp(lat.alpha(t - 1, i) - ma);
    for (int j = 0; j < L; ++j) right[j] = lat.emission(t, j) + lat.beta(t, j);
    const double mb = RowMax(right.data(), L);
    for (int j = 0; j < L; ++j) right[j] = std::exp(right[j] - mb);
    const double scale = std::exp(ma + mb + et.shift - lat.log_z);
    for (int i = 0; i < L; ++i) {
      const double a = left[i] * scale;
      if (a == 0.0) continue;
      const double* trow = et.values.data() + static_cast<size_t>(i) * L;
      double* grow = gradient.data() + trans_base + static_cast<size_t>(i) * L;
      for (int j = 0; j < L; ++j) grow[j] += a * trow[j] * right[j];
    }
    gradient[model.transition_param(labels[t - 1], labels[t])] -= 1.0;
    gold_score += model.transition(labels[t - 1], labels[t]);
  }
  return lat.log_z - gold_score;
}

namespace reference {
namespace {

struct Tables {
  Matrix emit, alpha, beta;
  double log_z;
};

Tables Compute(const CrfModel& model, const EncodedSequence& seq) {
  CheckNonEmpty(seq);
  const int L = model.num_labels();
  const size_t T = seq.size();
  Tables tb{EmissionScores(model, seq), Matrix(T, L), Matrix(T, L), 0.0};
  std::vector<double> terms(L);
  for (int j = 0; j < L; ++j) tb.alpha(0, j) = model.begin_weight(j) + tb.emit(0, j);
  for (size_t t = 1; t < T; ++t) {
    for (int j = 0; j < L; ++j) {
      for (int i = 0; i < L; ++i) {
        terms[i] = tb.alpha(t - 1, i) + model.transition(i, j);
      }
      tb.alpha(t, j) = LogSumExp(terms) + tb.emit(t, j);
    }
  }
  for (int i = 0; i < L; ++i) tb.beta(T - 1, i) = model.end_weight(i);
  for (size_t t = T - 1; t-- > 0;) {
    for (int i = 0; i < L; ++i) {
      for (int j = 0; j < L; ++j) {
        terms[j] = model.transition(i, j) + tb.emit(t + 1, j) + tb.beta(t + 1, j);
      }
      tb.beta(t, i) = LogSumExp(terms);
    }
  }
  for (int j = 0; j < L; ++j) terms[j] = tb.alpha(T - 1, j) + model.end_weight(j);
  tb.log_z = LogSumExp(terms);
  return tb;
}

}  // namespace

double LogPartition(const CrfModel& model, const EncodedSequence& seq) {
  return Compute(model, seq).log_z;
}

Matrix Marginals(const CrfModel& model, const EncodedSequence& seq) {
  const Tables tb = Compute(model, seq);
  Matrix out(seq.size(), model.num_labels());
  for (size_t t = 0; t < seq.size(); ++t) {
    for (int j = 0; j < model.num_labels(); ++j) {
      out(t, j) = std::exp(tb.alpha(t, j) + tb.beta(t, j) - tb.log_z);
    }
  }
  return out;
}

double AccumulateNllGradient(const CrfModel& model, const EncodedSequence& seq,
                             std::span<const int> labels,
                             std::span<double> gradient) {
  if (labels.size() != seq.size()) {
    throw ValidationError("label count does not match sequence length");
  }
  const Tables tb = Compute(model, seq);
  const int L = model.num_labels();
  const size_t T = seq.size();
  for (size_t t = 0; t < T; ++t) {
    for (int a : seq.attributes[t]) {
      for (size_t k = model.emission_begin(a); k < model.emission_end(a); ++k) {
        const int y = model.emission_label(k);
        gradient[k] += std::exp(tb.alpha(t, y) + tb.beta(t, y) - tb.log_z);
        if (y == labels[t]) gradient[k] -= 1.0;
      }
    }
  }
  for (int j = 0; j < L; ++j) {
    gradient[model.begin_param(j)] +=
        std::exp(tb.alpha(0, j) + tb.beta(0, j) - tb.log_z);
    gradient[model.end_param(j)] +=
        std::exp(tb.alpha(T - 1, j) + tb.beta(T - 1, j) - tb.log_z);
  }
  gradient[model.begin_param(labels[0])] -= 1.0;
  gradient[model.end_param(labels[T - 1])] -= 1.0;
  for (size_t t = 1; t < T; ++t) {
    for (int i = 0; i < L; ++i) {
      for (int j = 0; j < L; ++j) {
        gradient[model.transition_param(i, j)] +=
            std::exp(tb.alpha(t - 1, i) + model.transition(i, j) +
                     tb.emit(t, j) + tb.beta(t, j) - tb.log_z);
      }
    }
    gradient[model.transition_param(labels[t - 1], labels[t])] -= 1.0;
  }
  return tb.log_z - ScoreSequence(model, seq, labels);
}

}  // namespace reference
}  // namespace crf
}  // namespace nswnorm
