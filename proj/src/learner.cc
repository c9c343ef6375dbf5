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

#include "tensorparse/learner.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "tensorparse/errors.h"
#include "tensorparse/evaluator.h"
#include "shuffle.h"

namespace tensorparse {
namespace {

constexpr std::string_view kModelMagic = "tensorparse-model";

// log(1 + exp(s)) without overflow.
double Softplus(double s) {
  return std::max(s, 0.0) + std::log1p(std::exp(-std::abs(s)));
}

struct Instance {
  FeatureVector features;
  double label;
};

double Objective(const std::map<FeatureKey, double> &weights,
                 const std::vector<Instance> &instances, double l2) {
  double loss = 0;
  for (const auto &inst : instances) {
    double s = 0;
    for (const auto &[key, x] : inst.features) {
      auto it = weights.find(key);
      if (it != weights.end()) s += it->second * x;
    }
    loss += Softplus(s) - inst.label * s;
  }
  loss /= static_cast<double>(instances.size());
  double norm = 0;
  for (const auto &[key, w] : weights) norm += w * w;
  return loss + 0.5 * l2 * norm;
}

}  // namespace

void TrainConfig::Validate() const {
  if (epochs < 1) throw ConfigError("epochs must be >= 1");
  if (!(learning_rate > 0) || !std::isfinite(learning_rate)) {
    throw ConfigError("learning rate must be positive");
  }
  if (!(l2 >= 0) || !std::isfinite(l2)) {
    throw ConfigError("l2 must be non-negative");
  }
  if (negative_cap < 1) throw ConfigError("negative cap must be >= 1");
}

std::string ConfigFingerprint(const TrainConfig &train, const GenConfig &gen) {
  std::ostringstream canon;
  canon << "epochs=" << train.epochs
        << ";lr=" << FormatDouble(train.learning_rate)
        << ";l2=" << FormatDouble(train.l2) << ";seed=" << train.seed
        << ";negcap=" << train.negative_cap
        << ";maxcand=" << gen.max_candidates
        << ";maxspan=" << gen.max_span_length
        << ";t3=" << (gen.two_constraint_template ? 1 : 0);
  // FNV-1a, 64 bit.
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : canon.str()) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

Example MakeExample(std::string question, std::vector<std::string> answers) {
  Example ex;
  ex.tokens = Tokenize(question);
  ex.question = std::move(question);
  ex.answers.insert(answers.begin(), answers.end());
  return ex;
}

double Score(const Model &model, const FeatureVector &features) {
  return Dot(model.weights, features);
}

double Probability(double score) { return 1.0 / (1.0 + std::exp(-score)); }

std::optional<Candidate> Predict(const Model &model, const Tokens &query,
                                 const std::vector<Candidate> &candidates) {
  const Candidate *best = nullptr;
  double best_score = 0;
  for (const auto &c : candidates) {
    double s = Score(model, Assemble(query, c));
    if (best == nullptr || s > best_score ||
        (s == best_score && c.serialized < best->serialized)) {
      best = &c;
      best_score = s;
    }
  }
  if (best == nullptr) return std::nullopt;
  return *best;
}

std::vector<std::pair<Candidate, bool>> LabelCandidates(
    const std::vector<Candidate> &candidates,
    const std::set<std::string> &gold, const KnowledgeGraph &kg) {
  std::vector<double> scores;
  double best = 0;
  for (const auto &c : candidates) {
    scores.push_back(CandidateF1(c, gold, kg));
    best = std::max(best, scores.back());
  }
  std::vector<std::pair<Candidate, bool>> labeled;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    labeled.emplace_back(candidates[i], best > 0 && scores[i] == best);
  }
  return labeled;
}

TrainResult Train(const std::vector<Example> &data, const KnowledgeGraph &kg,
                  const GenConfig &gen, const TrainConfig &config) {
  if (data.empty()) throw ConfigError("no training data");
  config.Validate();
  gen.Validate();

  TrainResult result;
  result.model.fingerprint = ConfigFingerprint(config, gen);

  std::vector<Instance> instances;
  for (const auto &ex : data) {
    int negatives = 0;
    for (const auto &[c, positive] :
         LabelCandidates(GenerateCandidates(ex.tokens, kg, gen), ex.answers,
                         kg)) {
      if (!positive) {
        if (negatives >= config.negative_cap) continue;
        ++negatives;
      } else {
        ++result.report.positives;
      }
      instances.push_back({Assemble(ex.tokens, c), positive ? 1.0 : 0.0});
    }
  }
  result.report.instances = instances.size();
  if (result.report.positives == 0) {
    result.report.all_negative = true;
    return result;
  }

  std::map<FeatureKey, double> weights;
  std::map<FeatureKey, double> grad_sq;
  std::mt19937_64 rng(config.seed);
  std::vector<std::size_t> order(instances.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    internal::Shuffle(order, rng);
    for (std::size_t i : order) {
      const Instance &inst = instances[i];
      double s = 0;
      for (const auto &[key, x] : inst.features) {
        auto it = weights.find(key);
        if (it != weights.end()) s += it->second * x;
      }
      double residual = Probability(s) - inst.label;
      for (const auto &[key, x] : inst.features) {
        double g = residual * x;
        double &acc = grad_sq[key];
        acc += g * g;
        if (acc == 0) continue;
        double eta = config.learning_rate / std::sqrt(acc);
        double &w = weights[key];
        // Gradient step on the loss, then the closed-form L2 proximal step.
        w = (w - eta * g) / (1.0 + eta * config.l2);
      }
    }
    result.report.epoch_loss.push_back(
        Objective(weights, instances, config.l2));
  }

  for (const auto &[key, w] : weights) result.model.weights.Set(key, w);
  return result;
}

std::vector<std::pair<FeatureKey, double>> TopFeatures(const Model &model,
                                                       std::size_t k) {
  std::vector<std::pair<FeatureKey, double>> all(model.weights.begin(),
                                                 model.weights.end());
  std::stable_sort(all.begin(), all.end(), [](const auto &a, const auto &b) {
    return a.second > b.second;
  });
  if (all.size() > k) all.erase(all.begin() + k, all.end());
  return all;
}

std::string FormatDouble(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

void WriteModel(const Model &model, std::ostream &out) {
  out << kModelMagic << " v" << model.version << " " << model.fingerprint
      << "\n";
  for (const auto &[key, w] : model.weights) {
    out << key.text() << "\t" << FormatDouble(w) << "\n";
  }
}

Model ReadModel(std::istream &in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("model: missing header", 1);
  std::istringstream header(line);
  std::string magic, version, fingerprint, extra;
  header >> magic >> version >> fingerprint;
  if (magic != kModelMagic || fingerprint.empty() || (header >> extra)) {
    throw ParseError("model line 1: bad header", 1);
  }
  if (version != "v" + std::to_string(kModelFormatVersion)) {
    throw ParseError("model line 1: unsupported version " + version, 1);
  }
  Model model;
  model.fingerprint = fingerprint;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto bad = [&](const std::string &what) {
      return ParseError("model line " + std::to_string(lineno) + ": " + what,
                        lineno);
    };
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) throw bad("expected key<TAB>weight");
    auto key = FeatureKey::Decode(std::string_view(line).substr(0, tab));
    if (!key) throw bad("bad feature key");
    double w = 0;
    const char *first = line.data() + tab + 1;
    const char *last = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(first, last, w);
    if (ec != std::errc() || ptr != last || !std::isfinite(w)) {
      throw bad("bad weight");
    }
    model.weights.Set(*key, w);
  }
  return model;
}

void SaveModel(const Model &model, const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  WriteModel(model, out);
  if (!out) throw IoError("write failed: " + path);
}

Model LoadModel(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return ReadModel(in);
}

}  // namespace tensorparse
