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

#include "tensorparse/cli.h"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "tensorparse/dataset.h"
#include "tensorparse/errors.h"
#include "tensorparse/evaluator.h"
#include "tensorparse/features.h"
#include "tensorparse/kgraph.h"
#include "tensorparse/learner.h"
#include "tensorparse/logform.h"

namespace tensorparse {
namespace {

struct Options {
  std::string kg, catalog, data, model, out, report, question;
  std::string order = "random";
  int folds = 5;
  std::size_t top_k = 10;
  GenConfig gen;
  TrainConfig train;
};

std::string Fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

void AddGraphFlags(CLI::App *cmd, Options &o) {
  cmd->add_option("--kg", o.kg, "Triples TSV")->required();
  cmd->add_option("--catalog", o.catalog, "Catalog TSV")->required();
}

void AddGenFlags(CLI::App *cmd, Options &o) {
  cmd->add_option("--max-candidates", o.gen.max_candidates,
                  "Candidate cap per question");
  cmd->add_option("--max-span", o.gen.max_span_length,
                  "Longest entity span in tokens");
}

void AddTrainFlags(CLI::App *cmd, Options &o) {
  cmd->add_option("--epochs", o.train.epochs);
  cmd->add_option("--lr", o.train.learning_rate, "AdaGrad base step");
  cmd->add_option("--l2", o.train.l2, "L2 strength");
  cmd->add_option("--seed", o.train.seed);
  cmd->add_option("--neg-cap", o.train.negative_cap,
                  "Negatives kept per question");
}

void WriteTextFile(const std::string &path, const std::string &body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path);
  f << body;
  if (!f) throw IoError("write failed: " + path);
}

int DoTrain(const Options &o, std::ostream &out, std::ostream &err) {
  KnowledgeGraph kg = LoadGraphFiles(o.kg, o.catalog);
  TrainResult result =
      Train(LoadDatasetFile(o.data), kg, o.gen, o.train);
  if (result.report.all_negative) {
    err << "warning: no question has a positive candidate; model is empty\n";
  }
  SaveModel(result.model, o.out);
  out << "instances=" << result.report.instances
      << " positives=" << result.report.positives << " features="
      << result.model.weights.size() << "\n";
  if (!result.report.epoch_loss.empty()) {
    out << "final loss=" << FormatDouble(result.report.epoch_loss.back())
        << "\n";
  }
  return 0;
}

int DoEval(const Options &o, std::ostream &out) {
  KnowledgeGraph kg = LoadGraphFiles(o.kg, o.catalog);
  Model model = LoadModel(o.model);
  EvalReport report = Evaluate(model, LoadDatasetFile(o.data), kg, o.gen);
  if (!o.report.empty()) {
    std::ostringstream body;
    WriteReport(report, body);
    WriteTextFile(o.report, body.str());
  }
  out << "averageF1=" << Fixed4(report.average_f1)
      << " oracleF1=" << Fixed4(report.oracle_f1) << "\n";
  return 0;
}

int DoPredict(const Options &o, std::ostream &out) {
  KnowledgeGraph kg = LoadGraphFiles(o.kg, o.catalog);
  Model model = LoadModel(o.model);
  Tokens query = Tokenize(o.question);
  auto best = Predict(model, query, GenerateCandidates(query, kg, o.gen));
  if (!best) {
    out << "-\n";
    return 0;
  }
  out << best->serialized << "\n" << CanonicalUtterance(best->form, kg) << "\n";
  for (const auto &name : EntityNames(best->denotation, kg)) {
    out << name << "\n";
  }
  return 0;
}

int DoInspect(const Options &o, std::ostream &out) {
  Model model = LoadModel(o.model);
  for (const auto &[key, w] : TopFeatures(model, o.top_k)) {
    out << key.text() << "\t" << FormatDouble(w) << "\n";
  }
  return 0;
}

int DoCrossValidate(const Options &o, std::ostream &out) {
  KnowledgeGraph kg = LoadGraphFiles(o.kg, o.catalog);
  SplitSpec spec;
  spec.order = o.order == "alphabetical" ? SplitOrder::kAlphabetical
                                         : SplitOrder::kRandom;
  spec.folds = o.folds;
  spec.seed = o.train.seed;
  CrossValidation cv =
      CrossValidate(LoadDatasetFile(o.data), kg, o.gen, o.train, spec);
  std::ostringstream body;
  for (std::size_t i = 0; i < cv.reports.size(); ++i) {
    const auto &r = cv.reports[i];
    out << "fold " << i << " averageF1=" << Fixed4(r.average_f1)
        << " oracleF1=" << Fixed4(r.oracle_f1) << " n=" << r.queries.size()
        << "\n";
    body << "# fold " << i << "\n";
    WriteReport(r, body);
  }
  out << "mean=" << Fixed4(cv.mean) << " stddev=" << Fixed4(cv.stddev) << "\n";
  if (!o.report.empty()) WriteTextFile(o.report, body.str());
  return 0;
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err) {
  Options o;
  std::uint64_t toy_seed = kDefaultToySeed;

  CLI::App app{"Knowledge-graph question answering with tensor product "
               "features",
               "tensorparse"};
  app.require_subcommand(1);

  auto *train = app.add_subcommand("train", "Train a model");
  AddGraphFlags(train, o);
  AddGenFlags(train, o);
  AddTrainFlags(train, o);
  train->add_option("--data", o.data, "Questions JSONL")->required();
  train->add_option("--out", o.out, "Model file to write")->required();

  auto *eval = app.add_subcommand("eval", "Evaluate a model");
  AddGraphFlags(eval, o);
  AddGenFlags(eval, o);
  eval->add_option("--data", o.data)->required();
  eval->add_option("--model", o.model)->required();
  eval->add_option("--report", o.report, "Report file to write");

  auto *predict = app.add_subcommand("predict", "Answer one question");
  AddGraphFlags(predict, o);
  AddGenFlags(predict, o);
  predict->add_option("--model", o.model)->required();
  predict->add_option("--question", o.question)->required();

  auto *inspect = app.add_subcommand("inspect", "List the largest weights");
  inspect->add_option("--model", o.model)->required();
  inspect->add_option("--top-k", o.top_k);

  auto *cv = app.add_subcommand("cv", "K-fold cross-validation");
  AddGraphFlags(cv, o);
  AddGenFlags(cv, o);
  AddTrainFlags(cv, o);
  cv->add_option("--data", o.data)->required();
  cv->add_option("--folds", o.folds);
  cv->add_option("--order", o.order)
      ->check(CLI::IsMember({"random", "alphabetical"}));
  cv->add_option("--report", o.report);

  auto *gen_toy = app.add_subcommand("gen-toy", "Write the toy corpus");
  gen_toy->add_option("--out", o.out, "Output directory")->required();
  gen_toy->add_option("--seed", toy_seed);

  std::vector<std::string> argv_store;
  argv_store.push_back("tensorparse");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char *> argv;
  for (auto &a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*train) return DoTrain(o, out, err);
    if (*eval) return DoEval(o, out);
    if (*predict) return DoPredict(o, out);
    if (*inspect) return DoInspect(o, out);
    if (*cv) return DoCrossValidate(o, out);
    if (*gen_toy) {
      GenerateToyCorpus(o.out, toy_seed);
      out << "wrote " << o.out << "\n";
      return 0;
    }
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace tensorparse
