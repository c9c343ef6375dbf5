// Copyright 2026 The Tensorparse Authors.
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

#ifndef TENSORPARSE_LEARNER_H_
#define TENSORPARSE_LEARNER_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tensorparse/features.h"
#include "tensorparse/kgraph.h"
#include "tensorparse/logform.h"

namespace tensorparse {

inline constexpr int kModelFormatVersion = 1;

struct Model {
  FeatureVector weights;
  std::string fingerprint = "untrained";
  int version = kModelFormatVersion;
};

struct TrainConfig {
  int epochs = 15;
  double learning_rate = 0.1;
  double l2 = 1e-4;
  std::uint64_t seed = 42;
  int negative_cap = 50;

  void Validate() const;
};

// Digest of everything that influences training output.
std::string ConfigFingerprint(const TrainConfig &train, const GenConfig &gen);

// A training or evaluation example: tokenized question plus the gold answer
// names.
struct Example {
  std::string question;
  Tokens tokens;
  std::set<std::string> answers;
};

Example MakeExample(std::string question, std::vector<std::string> answers);

// Linear score of a joint feature vector; unknown keys contribute nothing.
double Score(const Model &model, const FeatureVector &features);
double Probability(double score);

// Candidate with the highest score; ties go to the smaller serialized form.
// Returns nullopt for an empty candidate list.
std::optional<Candidate> Predict(const Model &model, const Tokens &query,
                                 const std::vector<Candidate> &candidates);

// Candidates reaching the best F1 against the gold answers are positive,
// provided that F1 is non-zero; everything else is negative.
std::vector<std::pair<Candidate, bool>> LabelCandidates(
    const std::vector<Candidate> &candidates,
    const std::set<std::string> &gold, const KnowledgeGraph &kg);

struct TrainReport {
  // Regularized objective after each epoch (mean log loss + l2/2 |w|^2).
  std::vector<double> epoch_loss;
  std::size_t instances = 0;
  std::size_t positives = 0;
  // Set when no query produced a positive candidate; the model is zero.
  bool all_negative = false;
};

struct TrainResult {
  Model model;
  TrainReport report;
};

// L2-regularized logistic regression over (query, candidate) pairs, fitted
// with AdaGrad. Deterministic for a fixed seed. Throws ConfigError on empty
// data or invalid configuration.
TrainResult Train(const std::vector<Example> &data, const KnowledgeGraph &kg,
                  const GenConfig &gen, const TrainConfig &config);

// The k largest weights, descending; ties by key text.
std::vector<std::pair<FeatureKey, double>> TopFeatures(const Model &model,
                                                       std::size_t k);

// Model file I/O. Weights are written in shortest round-trip form, sorted by
// key text.
void WriteModel(const Model &model, std::ostream &out);
Model ReadModel(std::istream &in);
void SaveModel(const Model &model, const std::string &path);
Model LoadModel(const std::string &path);

// Shortest decimal text that parses back to exactly `value`.
std::string FormatDouble(double value);

}  // namespace tensorparse

#endif  // TENSORPARSE_LEARNER_H_
