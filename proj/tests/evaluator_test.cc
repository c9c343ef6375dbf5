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
#include <random>
#include <sstream>

#include "doctest.h"
#include "tensorparse/dataset.h"
#include "tensorparse/errors.h"
#include "test_util.h"

namespace tensorparse {
namespace {

// Counts the overlap pair by pair over plain vectors.
double BruteForceF1(const std::vector<std::string> &predicted,
                    const std::vector<std::string> &gold) {
  int common = 0;
  for (const auto &p : predicted) {
    for (const auto &g : gold) common += p == g ? 1 : 0;
  }
  if (predicted.empty() || gold.empty() || common == 0) return 0;
  double precision = static_cast<double>(common) / predicted.size();
  double recall = static_cast<double>(common) / gold.size();
  return 2 * precision * recall / (precision + recall);
}

struct Toy {
  KnowledgeGraph kg;
  std::vector<Example> data;
};

const Toy &ToyCorpus() {
  static const Toy toy{
      LoadGraphFiles(TOY_DATA_DIR "/triples.tsv", TOY_DATA_DIR "/catalog.tsv"),
      LoadDatasetFile(TOY_DATA_DIR "/questions.jsonl")};
  return toy;
}

std::vector<Example> Numbered(int n) {
  std::vector<Example> data;
  for (int i = 0; i < n; ++i) {
    data.push_back(MakeExample("question " + std::to_string(i), {"x"}));
  }
  return data;
}

void CheckOracleDominance(const EvalReport &r) {
  CHECK(r.average_f1 <= r.oracle_f1);
  for (const auto &q : r.queries) CHECK(q.predicted_f1 <= q.oracle_f1);
}

TEST_CASE("partial-credit F1") {
  double f = F1({"Jaxon Bieber"}, {"Jazmyn Bieber", "Jaxon Bieber"});
  // precision 1, recall 1/2.
  CHECK(std::abs(f - 2.0 / 3.0) <= 1e-12);
  CHECK(F1({"a", "b"}, {"a", "b"}) == 1.0);
  CHECK(F1({}, {"a"}) == 0.0);
  CHECK(F1({"a"}, {}) == 0.0);
  CHECK(F1({"a"}, {"b"}) == 0.0);
  CHECK(F1({"Brazilian Real"}, {"brazilian  real"}) == 1.0);
}

TEST_CASE("F1 agrees with a brute-force count") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    std::set<std::string> p, g;
    for (int i = 0, n = rng() % 6; i < n; ++i) p.insert("e" + std::to_string(rng() % 8));
    for (int i = 0, n = rng() % 6; i < n; ++i) g.insert("e" + std::to_string(rng() % 8));
    std::vector<std::string> pv(p.begin(), p.end()), gv(g.begin(), g.end());
    double f = F1(p, g);
    CHECK(f == BruteForceF1(pv, gv));
    CHECK(f >= 0);
    CHECK(f <= 1);
    CHECK(f == F1(g, p));
    CHECK((f == 1.0) == (!p.empty() && p == g));
  }
}

TEST_CASE("a query without candidates scores zero") {
  const Toy &toy = ToyCorpus();
  EvalReport r = Evaluate(Model{}, {MakeExample("hello world", {"Paris"})},
                          toy.kg, {});
  REQUIRE(r.queries.size() == 1);
  CHECK(r.queries[0].num_candidates == 0);
  CHECK_FALSE(r.queries[0].predicted.has_value());
  CHECK(r.queries[0].predicted_f1 == 0);
  CHECK(r.queries[0].oracle_f1 == 0);
  CHECK(r.average_f1 == 0);
}

TEST_CASE("an oracle-consistent model reaches the oracle") {
  const Toy &toy = ToyCorpus();
  // On currency questions only the correct form's utterance mentions
  // "currency", so this single weight makes it the unique argmax.
  Model m;
  m.weights.Set(FeatureKey::Pair("currency", "currency"), 1);
  std::vector<Example> sample;
  for (const auto &ex : toy.data) {
    if (std::count(ex.tokens.begin(), ex.tokens.end(), "currency")) {
      sample.push_back(ex);
    }
  }
  REQUIRE(sample.size() > 20);
  for (const auto &ex : sample) {
    auto candidates = GenerateCandidates(ex.tokens, toy.kg, {});
    std::vector<double> scores;
    double best_f1 = 0, top_f1 = 0, top = -1;
    for (const auto &c : candidates) {
      double s = Score(m, Assemble(ex.tokens, c));
      double f = CandidateF1(c, ex.answers, toy.kg);
      best_f1 = std::max(best_f1, f);
      if (s > top) top = s, top_f1 = f;
      scores.push_back(s);
    }
    REQUIRE(std::count(scores.begin(), scores.end(), top) == 1);
    REQUIRE(top_f1 == best_f1);
  }
  EvalReport r = Evaluate(m, sample, toy.kg, {});
  CHECK(r.average_f1 == r.oracle_f1);
  CheckOracleDominance(r);
}

TEST_CASE("evaluation report is independent of thread count") {
  const Toy &toy = ToyCorpus();
  Model m = Train(toy.data, toy.kg, {}, {}).model;
  EvalReport one = Evaluate(m, toy.data, toy.kg, {}, 1);
  EvalReport four = Evaluate(m, toy.data, toy.kg, {}, 4);
  std::ostringstream a, b;
  WriteReport(one, a);
  WriteReport(four, b);
  CHECK(a.str() == b.str());
  CheckOracleDominance(one);
  double sum = 0;
  for (const auto &q : one.queries) sum += q.predicted_f1;
  CHECK(one.average_f1 == doctest::Approx(sum / one.queries.size()));
}

TEST_CASE("report format") {
  EvalReport r;
  r.average_f1 = 0.5;
  r.oracle_f1 = 2.0 / 3.0;
  r.queries.push_back({0, "what\tis it?", "join(a, ent(b))", 1.0, 1.0, 3});
  r.queries.push_back({1, "nothing", std::nullopt, 0.0, 1.0 / 3.0, 0});
  std::ostringstream out;
  WriteReport(r, out);
  CHECK(out.str() ==
        "averageF1=0.5000 oracleF1=0.6667 n=2\n"
        "0\twhat is it?\tjoin(a, ent(b))\t1.0000\t1.0000\t3\n"
        "1\tnothing\t-\t0.0000\t0.3333\t0\n");
}

TEST_CASE("k-fold splits partition the data") {
  SplitSpec spec;
  spec.folds = 5;
  auto splits = MakeSplits(Numbered(10), spec);
  REQUIRE(splits.size() == 5);
  std::multiset<std::string> seen;
  for (const auto &s : splits) {
    CHECK(s.test.size() == 2);
    CHECK(s.train.size() == 8);
    for (const auto &ex : s.test) seen.insert(ex.question);
  }
  CHECK(seen.size() == 10);
  CHECK(std::set<std::string>(seen.begin(), seen.end()).size() == 10);

  spec.folds = 3;
  splits = MakeSplits(Numbered(11), spec);
  std::vector<std::size_t> sizes;
  for (const auto &s : splits) sizes.push_back(s.test.size());
  CHECK(sizes == std::vector<std::size_t>{4, 4, 3});
}

TEST_CASE("random splits are reproducible") {
  SplitSpec spec;
  spec.folds = 4;
  spec.seed = 9;
  auto a = MakeSplits(Numbered(20), spec);
  auto b = MakeSplits(Numbered(20), spec);
  spec.seed = 10;
  auto c = MakeSplits(Numbered(20), spec);
  auto questions = [](const std::vector<Split> &splits) {
    std::vector<std::string> q;
    for (const auto &s : splits) {
      for (const auto &ex : s.test) q.push_back(ex.question);
    }
    return q;
  };
  CHECK(questions(a) == questions(b));
  CHECK(questions(a) != questions(c));
}

TEST_CASE("alphabetical splits keep a topic together") {
  const Toy &toy = ToyCorpus();
  SplitSpec spec;
  spec.order = SplitOrder::kAlphabetical;
  spec.folds = 5;
  auto splits = MakeSplits(toy.data, spec);
  std::size_t topic = 0;
  std::vector<int> folds_with_topic;
  for (std::size_t f = 0; f < splits.size(); ++f) {
    std::size_t here = 0;
    for (const auto &ex : splits[f].test) {
      here += ex.question.rfind("what currency", 0) == 0 ? 1 : 0;
    }
    if (here) folds_with_topic.push_back(static_cast<int>(f));
    topic += here;
  }
  REQUIRE(topic > 0);
  // A contiguous block of m items covers at most ceil(m / size) + 1 folds.
  std::size_t fold_size = toy.data.size() / 5;
  CHECK(folds_with_topic.size() <= (topic + fold_size - 1) / fold_size + 1);
  CHECK(folds_with_topic.back() - folds_with_topic.front() + 1 ==
        static_cast<int>(folds_with_topic.size()));

  // Byte order of the raw text.
  std::vector<std::string> order;
  for (const auto &s : splits) {
    for (const auto &ex : s.test) order.push_back(ex.question);
  }
  CHECK(std::is_sorted(order.begin(), order.end()));
}

TEST_CASE("holdout split") {
  SplitSpec spec;
  spec.holdout = 0.2;
  auto splits = MakeSplits(Numbered(242), spec);
  REQUIRE(splits.size() == 1);
  CHECK(splits[0].test.size() == 48);
  CHECK(splits[0].train.size() == 194);
  CHECK(MakeSplits(Numbered(2), spec)[0].test.size() == 1);
}

TEST_CASE("split configuration errors") {
  SplitSpec spec;
  CHECK_THROWS_AS(MakeSplits(Numbered(10), spec), ConfigError);
  spec.folds = 5;
  spec.holdout = 0.5;
  CHECK_THROWS_AS(MakeSplits(Numbered(10), spec), ConfigError);
  spec.holdout.reset();
  spec.folds = 11;
  CHECK_THROWS_AS(MakeSplits(Numbered(10), spec), ConfigError);
  spec.folds = 1;
  CHECK_THROWS_AS(MakeSplits(Numbered(10), spec), ConfigError);
  spec.folds.reset();
  spec.holdout = 1.0;
  CHECK_THROWS_AS(MakeSplits(Numbered(10), spec), ConfigError);
  spec.holdout = 0.5;
  CHECK_THROWS_AS(MakeSplits(Numbered(1), spec), ConfigError);
}

TEST_CASE("two-fold cross-validation on the toy corpus") {
  const Toy &toy = ToyCorpus();
  SplitSpec spec;
  spec.folds = 2;
  CrossValidation cv = CrossValidate(toy.data, toy.kg, {}, {}, spec);
  REQUIRE(cv.reports.size() == 2);
  double lo = 1, hi = 0;
  for (const auto &r : cv.reports) {
    lo = std::min(lo, r.average_f1);
    hi = std::max(hi, r.average_f1);
    CheckOracleDominance(r);
  }
  CHECK(cv.mean >= lo);
  CHECK(cv.mean <= hi);
  CHECK(cv.stddev >= 0);

  spec.folds = static_cast<int>(toy.data.size()) + 1;
  CHECK_THROWS_AS(CrossValidate(toy.data, toy.kg, {}, {}, spec), ConfigError);
}

TEST_CASE("alphabetical cross-validation scores lower than random") {
  const Toy &toy = ToyCorpus();
  SplitSpec spec;
  spec.folds = 5;
  double random = CrossValidate(toy.data, toy.kg, {}, {}, spec).mean;
  spec.order = SplitOrder::kAlphabetical;
  double alphabetical = CrossValidate(toy.data, toy.kg, {}, {}, spec).mean;
  CHECK(alphabetical < random);
}

}  // namespace
}  // namespace tensorparse
