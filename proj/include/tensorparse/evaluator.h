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

#ifndef TENSORPARSE_EVALUATOR_H_
#define TENSORPARSE_EVALUATOR_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tensorparse/kgraph.h"
#include "tensorparse/learner.h"
#include "tensorparse/logform.h"

namespace tensorparse {

// Entity-set F1 with partial credit. Names are compared after Normalize.
// Zero when either set is empty or they share nothing.
double F1(const std::set<std::string> &predicted,
          const std::set<std::string> &gold);

// F1 of a candidate's denotation (mapped to entity names) against gold.
double CandidateF1(const Candidate &candidate,
                   const std::set<std::string> &gold, const KnowledgeGraph &kg);

struct QueryResult {
  std::size_t index = 0;
  std::string question;
  std::optional<std::string> predicted;
  double predicted_f1 = 0;
  double oracle_f1 = 0;
  std::size_t num_candidates = 0;
};

struct EvalReport {
  double average_f1 = 0;
  double oracle_f1 = 0;
  std::vector<QueryResult> queries;
};

// Predicts every query and scores it against gold; the oracle is the best
// candidate F1 per query. `threads` > 1 splits queries across workers; the
// report does not depend on it.
EvalReport Evaluate(const Model &model, const std::vector<Example> &data,
                    const KnowledgeGraph &kg, const GenConfig &gen,
                    int threads = 1);

void WriteReport(const EvalReport &report, std::ostream &out);

enum class SplitOrder { kRandom, kAlphabetical };

struct SplitSpec {
  SplitOrder order = SplitOrder::kRandom;
  // Exactly one of these is set.
  std::optional<int> folds;
  std::optional<double> holdout;
  std::uint64_t seed = 42;

  void Validate() const;
};

struct Split {
  std::vector<Example> train;
  std::vector<Example> test;
};

// Orders the data (seeded shuffle, or byte order of the question text) and
// slices it into contiguous test blocks: `folds` blocks whose sizes differ
// by at most one, or a single trailing holdout block.
std::vector<Split> MakeSplits(const std::vector<Example> &data,
                              const SplitSpec &spec);

struct CrossValidation {
  std::vector<EvalReport> reports;
  double mean = 0;
  double stddev = 0;  // Sample standard deviation of per-fold average F1.
};

CrossValidation CrossValidate(const std::vector<Example> &data,
                              const KnowledgeGraph &kg, const GenConfig &gen,
                              const TrainConfig &train, const SplitSpec &spec,
                              int threads = 1);

}  // namespace tensorparse

#endif  // TENSORPARSE_EVALUATOR_H_
