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

// Linear-chain CRF over a fixed label alphabet.
//
// The potential of a label path y over a sequence x of length T is
//
//   score(x, y) = begin[y_0] + sum_t emit(x_t, y_t)
//               + sum_{t>0} trans[y_{t-1}][y_t] + end[y_{T-1}]
//
// where emit(x_t, y) sums the weights of the (attribute, y) features whose
// attribute is active at t. Emission features are sparse: each attribute is
// linked to the labels it was observed with in training.
//
// Parameter layout in weights():
//   [0, E)                      emission features, grouped by attribute
//   [E, E + L*L)                transitions, row = from, column = to
//   [E + L*L, E + L*L + L)      begin
//   [E + L*L + L, E + L*L + 2L) end

#ifndef NSWNORM_CRF_H_
#define NSWNORM_CRF_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nswnorm/features.h"

namespace nswnorm {
namespace crf {

// Row-major T x L table of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols, double value = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, value) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  double& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  double operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }
  double* row(size_t r) { return data_.data() + r * cols_; }
  const double* row(size_t r) const { return data_.data() + r * cols_; }

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<double> data_;
};

// Attribute ids active at each position. Attributes unknown to the model
// are dropped at encoding time.
struct EncodedSequence {
  std::vector<std::vector<int>> attributes;

  size_t size() const { return attributes.size(); }
  bool empty() const { return attributes.empty(); }
};

class CrfModel {
 public:
  CrfModel() = default;

  // `links[a]` lists the labels attribute `a` carries emission weights for;
  // it is sorted and deduplicated here. All weights start at zero.
  CrfModel(int num_labels, std::vector<std::string> attributes,
           std::vector<std::vector<int>> links);

  // Every attribute linked to every label.
  static CrfModel Dense(int num_labels, std::vector<std::string> attributes);

  int num_labels() const { return num_labels_; }
  size_t num_attributes() const { return attributes_.size(); }
  size_t num_emission_features() const { return emission_labels_.size(); }
  size_t num_parameters() const { return weights_.size(); }

  const std::string& attribute(int id) const { return attributes_[id]; }
  std::optional<int> FindAttribute(std::string_view name) const;

  // Emission features of attribute `a` occupy parameter indices
  // [emission_begin(a), emission_end(a)); emission_label(k) is the label of
  // parameter k.
  size_t emission_begin(int a) const { return emission_offsets_[a]; }
  size_t emission_end(int a) const { return emission_offsets_[a + 1]; }
  int emission_label(size_t k) const { return emission_labels_[k]; }
  // Parameter index of (attribute, label), if linked.
  std::optional<size_t> EmissionParam(int attribute, int label) const;

  size_t transition_param(int from, int to) const {
    return emission_labels_.size() + static_cast<size_t>(from) * num_labels_ +
           to;
  }
  size_t begin_param(int label) const {
    return emission_labels_.size() +
           static_cast<size_t>(num_labels_) * num_labels_ + label;
  }
  size_t end_param(int label) const { return begin_param(label) + num_labels_; }

  double transition(int from, int to) const {
    return weights_[transition_param(from, to)];
  }
  double begin_weight(int label) const { return weights_[begin_param(label)]; }
  double end_weight(int label) const { return weights_[end_param(label)]; }

  std::span<const double> weights() const { return weights_; }
  std::span<double> mutable_weights() { return weights_; }

  // Feature template version of the extractor the model was trained with.
  int template_version() const { return template_version_; }
  void set_template_version(int v) { template_version_ = v; }

  // Restrict decoding to well-formed BIO paths (only meaningful for the
  // 39-label alphabet).
  bool bio_constraints() const { return bio_constraints_; }
  void set_bio_constraints(bool on) { bio_constraints_ = on; }

  const std::string& optimizer_description() const {
    return optimizer_description_;
  }
  void set_optimizer_description(std::string d) {
    optimizer_description_ = std::move(d);
  }

  // Drops emission features whose weight is exactly zero.
  CrfModel Pruned() const;

  EncodedSequence Encode(const std::vector<FeatureSet>& features) const;

 private:
  int num_labels_ = 0;
  std::vector<std::string> attributes_;
  std::unordered_map<std::string, int> attribute_index_;
  std::vector<size_t> emission_offsets_{0};
  std::vector<int> emission_labels_;
  std::vector<double> weights_;
  int template_version_ = kFeatureTemplateVersion;
  bool bio_constraints_ = false;
  std::string optimizer_description_;
};

// Per-position emission scores, T x L.
Matrix EmissionScores(const CrfModel& model, const EncodedSequence& seq);

// Unnormalized log-potential of `labels`. Throws ValidationError on a
// length mismatch. Ignores bio_constraints.
double ScoreSequence(const CrfModel& model, const EncodedSequence& seq,
                     std::span<const int> labels);

// Forward/backward tables in log space: alpha(t, y) is the log-sum of the
// potentials of all prefixes ending in y at t (emission at t included);
// beta(t, y) the log-sum over suffixes after t given y at t.
struct Lattice {
  Matrix emission;
  Matrix alpha;
  Matrix beta;
  double log_z = 0.0;
};

// Throws ValidationError on an empty sequence.
Lattice ForwardBackward(const CrfModel& model, const EncodedSequence& seq);

double LogPartition(const CrfModel& model, const EncodedSequence& seq);
// Same quantity from the backward recursion; used to cross-check.
double LogPartitionBackward(const CrfModel& model, const EncodedSequence& seq);

// P(y_t = y | x), T x L. Each row sums to one.
Matrix Marginals(const CrfModel& model, const EncodedSequence& seq);

// Highest-scoring label path. Among equal scores the lowest label index
// wins: at each position the lowest-index best predecessor is kept, and the
// lowest-index best final label is chosen. When the model has
// bio_constraints set, I-X may only follow B-X or I-X.
// Throws ValidationError on an empty sequence.
std::vector<int> Viterbi(const CrfModel& model, const EncodedSequence& seq);

// Negative log-likelihood of `labels` and its gradient (expected minus
// empirical feature counts), added into `gradient`.
double AccumulateNllGradient(const CrfModel& model, const EncodedSequence& seq,
                             std::span<const int> labels,
                             std::span<double> gradient);

// Straightforward implementations kept as the reference for the optimized
// kernels above: per-element log-sum-exp, no scaling tricks, serial.
namespace reference {

double LogPartition(const CrfModel& model, const EncodedSequence& seq);
Matrix Marginals(const CrfModel& model, const EncodedSequence& seq);
double AccumulateNllGradient(const CrfModel& model, const EncodedSequence& seq,
                             std::span<const int> labels,
                             std::span<double> gradient);

}  // namespace reference

double LogSumExp(std::span<const double> values);

}  // namespace crf
}  // namespace nswnorm

#endif  // NSWNORM_CRF_H_
