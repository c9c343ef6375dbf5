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

#include "tensorparse/evaluator.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <numeric>
#include <ostream>
#include <random>
#include <thread>

#include "shuffle.h"
#include "tensorparse/errors.h"
#include "tensorparse/features.h"

namespace tensorparse {
namespace {

std::set<std::string> NormalizedSet(const std::set<std::string> &names) {
  std::set<std::string> out;
  for (const auto &name : names) out.insert(Normalize(name));
  return out;
}

QueryResult EvaluateOne(const Model &model, const Example &ex,
                        std::size_t index, const KnowledgeGraph &kg,
                        const GenConfig &gen) {
  QueryResult r;
  r.index = index;
  r.question = ex.question;
  std::vector<Candidate> candidates = GenerateCandidates(ex.tokens, kg, gen);
  r.num_candidates = candidates.size();
  for (const auto &c : candidates) {
    r.oracle_f1 = std::max(r.oracle_f1, CandidateF1(c, ex.answers, kg));
  }
  if (auto best = Predict(model, ex.tokens, candidates)) {
    r.predicted = best->serialized;
    r.predicted_f1 = CandidateF1(*best, ex.answers, kg);
  }
  return r;
}

std::string OneLine(std::string text) {
  for (char &c : text) {
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  }
  return text;
}

}  // namespace

double F1(const std::set<std::string> &predicted,
          const std::set<std::string> &gold) {
  if (predicted.empty() || gold.empty()) return 0;
  std::set<std::string> p = NormalizedSet(predicted);
  std::set<std::string> g = NormalizedSet(gold);
  std::size_t common = 0;
  for (const auto &name : p) common += g.count(name);
  if (common == 0) return 0;
  double precision = static_cast<double>(common) / p.size();
  double recall = static_cast<double>(common) / g.size();
  return 2 * precision * recall / (precision + recall);
}

double CandidateF1(const Candidate &candidate,
                   const std::set<std::string> &gold,
                   const KnowledgeGraph &kg) {
  return F1(EntityNames(candidate.denotation, kg), gold);
}

EvalReport Evaluate(const Model &model, const std::vector<Example> &data,
                    const KnowledgeGraph &kg, const GenConfig &gen,
                    int threads) {
  gen.Validate();
  EvalReport report;
  report.queries.resize(data.size());
  std::size_t workers = std::max(threads, 1);
  workers = std::min(workers, std::max<std::size_t>(data.size(), 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < data.size(); ++i) {
      report.queries[i] = EvaluateOne(model, data[i], i, kg, gen);
    }
  } else {
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t i = w; i < data.size(); i += workers) {
              report.queries[i] = EvaluateOne(model, data[i], i, kg, gen);
            }
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (auto &e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  if (!data.empty()) {
    double pred = 0, oracle = 0;
    for (const auto &q : report.queries) {
      pred += q.predicted_f1;
      oracle += q.oracle_f1;
    }
    report.average_f1 = pred / data.size();
    report.oracle_f1 = oracle / data.size();
  }
  return report;
}

void WriteReport(const EvalReport &report, std::ostream &out) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "averageF1=%.4f oracleF1=%.4f n=%zu\n",
                report.average_f1, report.oracle_f1, report.queries.size());
  out << buf;
  for (const auto &q : report.queries) {
    std::snprintf(buf, sizeof(buf), "%.4f\t%.4f\t%zu", q.predicted_f1,
                  q.oracle_f1, q.num_candidates);
    out << q.index << '\t' << OneLine(q.question) << '\t'
        << q.predicted.value_or("-") << '\t' << buf << '\n';
  }
}

void SplitSpec::Validate() const {
  if (folds.has_value() == holdout.has_value()) {
    throw ConfigError("exactly one of folds and holdout must be set");
  }
  if (folds && *folds < 2) throw ConfigError("folds must be >= 2");
  if (holdout && !(*holdout > 0 && *holdout < 1)) {
    throw ConfigError("holdout fraction must lie in (0, 1)");
  }
}

std::vector<Split> MakeSplits(const std::vector<Example> &data,
                              const SplitSpec &spec) {
  spec.Validate();
  const std::size_t n = data.size();
  if (spec.folds && n < static_cast<std::size_t>(*spec.folds)) {
    throw ConfigError("need at least " + std::to_string(*spec.folds) +
                      " examples for " + std::to_string(*spec.folds) +
                      " folds, got " + std::to_string(n));
  }
  if (spec.holdout && n < 2) {
    throw ConfigError("need at least 2 examples for a holdout split");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (spec.order == SplitOrder::kAlphabetical) {
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       return data[a].question < data[b].question;
                     });
  } else {
    std::mt19937_64 rng(spec.seed);
    internal::Shuffle(order, rng);
  }

  // Test blocks as [begin, end) ranges over `order`.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  if (spec.folds) {
    std::size_t k = *spec.folds, base = n / k, extra = n % k, begin = 0;
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t size = base + (i < extra ? 1 : 0);
      blocks.emplace_back(begin, begin + size);
      begin += size;
    }
  } else {
    auto test = static_cast<std::size_t>(std::llround(*spec.holdout * n));
    test = std::clamp<std::size_t>(test, 1, n - 1);
    blocks.emplace_back(n - test, n);
  }

  std::vector<Split> splits;
  for (const auto &[begin, end] : blocks) {
    Split s;
    for (std::size_t i = 0; i < n; ++i) {
      auto &side = (i >= begin && i < end) ? s.test : s.train;
      side.push_back(data[order[i]]);
    }
    splits.push_back(std::move(s));
  }
  return splits;
}

CrossValidation CrossValidate(const std::vector<Example> &data,
                              const KnowledgeGraph &kg, const GenConfig &gen,
                              const TrainConfig &train, const SplitSpec &spec,
                              int threads) {
  CrossValidation cv;
  for (const auto &split : MakeSplits(data, spec)) {
    Model model = Train(split.train, kg, gen, train).model;
    cv.reports.push_back(Evaluate(model, split.test, kg, gen, threads));
  }
  const double k = static_cast<double>(cv.reports.size());
  for (const auto &r : cv.reports) cv.mean += r.average_f1;
  cv.mean /= k;
  if (cv.reports.size() > 1) {
    double ss = 0;
    for (const auto &r : cv.reports) {
      ss += (r.average_f1 - cv.mean) * (r.average_f1 - cv.mean);
    }
    cv.stddev = std::sqrt(ss / (k - 1));
  }
  return cv;
}

}  // namespace tensorparse
