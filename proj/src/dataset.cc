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

#include "tensorparse/dataset.h"

#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "shuffle.h"
#include "tensorparse/errors.h"

namespace tensorparse {

std::vector<Example> LoadDataset(std::istream &in) {
  std::vector<Example> data;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto bad = [&](const std::string &what) {
      return ParseError("dataset line " + std::to_string(lineno) + ": " + what,
                        lineno);
    };
    nlohmann::json obj = nlohmann::json::parse(line, nullptr, false);
    if (obj.is_discarded()) throw bad("invalid JSON");
    if (!obj.is_object()) throw bad("expected a JSON object");
    auto q = obj.find("question");
    if (q == obj.end() || !q->is_string()) {
      throw bad("missing string field 'question'");
    }
    auto a = obj.find("answers");
    if (a == obj.end() || !a->is_array()) {
      throw bad("missing array field 'answers'");
    }
    std::vector<std::string> answers;
    for (const auto &answer : *a) {
      if (!answer.is_string()) throw bad("answers must be strings");
      answers.push_back(answer.get<std::string>());
    }
    std::string question = q->get<std::string>();
    if (question.empty()) throw bad("empty question");
    if (answers.empty()) throw bad("empty answers");
    data.push_back(MakeExample(std::move(question), std::move(answers)));
  }
  return data;
}

std::vector<Example> LoadDatasetFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return LoadDataset(in);
}

void WriteDataset(const std::vector<Example> &data, std::ostream &out) {
  for (const auto &ex : data) {
    nlohmann::ordered_json obj;
    obj["question"] = ex.question;
    obj["answers"] = ex.answers;
    out << obj.dump() << "\n";
  }
}

namespace {

struct Country {
  const char *id;
  const char *name;
  const char *currency;
  const char *capital;
};

// Real-world facts, frozen so the corpus is stable.
constexpr Country kCountries[] = {
    {"france", "France", "Euro", "Paris"},
    {"spain", "Spain", "Euro", "Madrid"},
    {"portugal", "Portugal", "Euro", "Lisbon"},
    {"germany", "Germany", "Euro", "Berlin"},
    {"italy", "Italy", "Euro", "Rome"},
    {"switzerland", "Switzerland", "Swiss franc", "Bern"},
    {"austria", "Austria", "Euro", "Vienna"},
    {"hungary", "Hungary", "Hungarian forint", "Budapest"},
    {"croatia", "Croatia", "Euro", "Zagreb"},
    {"slovakia", "Slovakia", "Euro", "Bratislava"},
    {"poland", "Poland", "Polish zloty", "Warsaw"},
    {"belgium", "Belgium", "Euro", "Brussels"},
    {"netherlands", "Netherlands", "Euro", "Amsterdam"},
    {"denmark", "Denmark", "Danish krone", "Copenhagen"},
    {"sweden", "Sweden", "Swedish krona", "Stockholm"},
    {"norway", "Norway", "Norwegian krone", "Oslo"},
    {"finland", "Finland", "Euro", "Helsinki"},
    {"brazil", "Brazil", "Brazilian real", "Brasilia"},
    {"argentina", "Argentina", "Argentine peso", "Buenos Aires"},
    {"chile", "Chile", "Chilean peso", "Santiago"},
    {"peru", "Peru", "Peruvian sol", "Lima"},
    {"colombia", "Colombia", "Colombian peso", "Bogota"},
    {"ecuador", "Ecuador", "US dollar", "Quito"},
    {"uruguay", "Uruguay", "Uruguayan peso", "Montevideo"},
    {"paraguay", "Paraguay", "Paraguayan guarani", "Asuncion"},
    {"bolivia", "Bolivia", "Boliviano", "Sucre"},
    {"panama", "Panama", "Panamanian balboa", "Panama City"},
    {"costa_rica", "Costa Rica", "Costa Rican colon", "San Jose"},
    {"mexico", "Mexico", "Mexican peso", "Mexico City"},
    {"guatemala", "Guatemala", "Guatemalan quetzal", "Guatemala City"},
    {"egypt", "Egypt", "Egyptian pound", "Cairo"},
    {"sudan", "Sudan", "Sudanese pound", "Khartoum"},
    {"libya", "Libya", "Libyan dinar", "Tripoli"},
    {"tunisia", "Tunisia", "Tunisian dinar", "Tunis"},
    {"ethiopia", "Ethiopia", "Ethiopian birr", "Addis Ababa"},
    {"kenya", "Kenya", "Kenyan shilling", "Nairobi"},
};

constexpr std::pair<const char *, const char *> kBorders[] = {
    {"france", "spain"},        {"france", "germany"},
    {"france", "italy"},        {"france", "switzerland"},
    {"france", "belgium"},      {"spain", "portugal"},
    {"germany", "switzerland"}, {"germany", "austria"},
    {"germany", "poland"},      {"germany", "belgium"},
    {"germany", "netherlands"}, {"germany", "denmark"},
    {"italy", "switzerland"},   {"italy", "austria"},
    {"switzerland", "austria"}, {"austria", "hungary"},
    {"austria", "slovakia"},    {"hungary", "croatia"},
    {"hungary", "slovakia"},    {"slovakia", "poland"},
    {"belgium", "netherlands"}, {"sweden", "norway"},
    {"sweden", "finland"},      {"norway", "finland"},
    {"brazil", "argentina"},    {"brazil", "uruguay"},
    {"brazil", "paraguay"},     {"brazil", "peru"},
    {"brazil", "colombia"},     {"brazil", "bolivia"},
    {"argentina", "chile"},     {"argentina", "uruguay"},
    {"argentina", "paraguay"},  {"argentina", "bolivia"},
    {"chile", "peru"},          {"chile", "bolivia"},
    {"peru", "colombia"},       {"peru", "bolivia"},
    {"peru", "ecuador"},        {"colombia", "ecuador"},
    {"colombia", "panama"},     {"paraguay", "bolivia"},
    {"panama", "costa_rica"},   {"mexico", "guatemala"},
    {"egypt", "sudan"},         {"egypt", "libya"},
    {"sudan", "libya"},         {"sudan", "ethiopia"},
    {"libya", "tunisia"},       {"ethiopia", "kenya"},
};

// Paraphrase families per topic; {} is replaced by the subject name.
const std::vector<std::string> kCurrencyQuestions = {
    "what currency does {} use?",
    "what is the currency of {}?",
    "what money do they use in {}?",
    "what kind of currency does {} have?",
};
const std::vector<std::string> kCapitalQuestions = {
    "what is the capital of {}?",
    "what city is the capital of {}?",
    "where is the seat of government of {}?",
    "what is {}'s capital city?",
};
const std::vector<std::string> kBorderQuestions = {
    "what countries border {}?",
    "which countries are next to {}?",
    "what are the neighbouring countries of {}?",
    "what nations share a border with {}?",
};
const std::vector<std::string> kCurrencyUserQuestions = {
    "which countries use the {}?",
    "what countries have the {} as their currency?",
    "where is the {} used?",
};

std::string Slug(const std::string &name) {
  std::string out;
  for (char c : name) {
    if (c == ' ') {
      out += '_';
    } else {
      out += static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c);
    }
  }
  return out;
}

std::string Lower(std::string s) {
  for (char &c : s) {
    if (c >= 'A' && c <= 'Z') c = c - 'A' + 'a';
  }
  return s;
}

std::string Fill(const std::string &pattern, const std::string &subject) {
  std::string out = pattern;
  out.replace(out.find("{}"), 2, subject);
  return out;
}

void WriteFile(const std::filesystem::path &path, const std::string &body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << body;
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace

void GenerateToyCorpus(const std::string &out_dir, std::uint64_t seed) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir + ": " + ec.message());

  std::mt19937_64 rng(seed);
  std::map<std::string, std::set<std::string>> neighbours;
  for (const auto &[a, b] : kBorders) {
    neighbours[a].insert(b);
    neighbours[b].insert(a);
  }
  std::map<std::string, std::string> name_of;
  std::map<std::string, std::set<std::string>> users_of;  // currency -> names
  for (const auto &c : kCountries) {
    name_of[c.id] = c.name;
    users_of[c.currency].insert(c.name);
  }

  std::string catalog =
      "# tensorparse toy catalog\n"
      "R\tcurrency\tcurrency\tcountry\tcurrency\n"
      "R\tcapital\tcapital\tcountry\tcity\n"
      "R\tadjoins\tadjoins\tcountry\tcountry\n";
  std::string triples = "# tensorparse toy triples\n";
  for (const auto &c : kCountries) {
    catalog += std::string("E\t") + c.id + "\t" + c.name + "\t" +
               Lower(c.name) + "\n";
  }
  for (const auto &[currency, users] : users_of) {
    catalog += "E\t" + Slug(currency) + "\t" + currency + "\t" +
               Lower(currency) + "\n";
  }
  std::set<std::string> cities;
  for (const auto &c : kCountries) {
    if (cities.insert(c.capital).second) {
      catalog += "E\t" + Slug(c.capital) + "\t" + c.capital + "\t" +
                 Lower(c.capital) + "\n";
    }
  }
  for (const auto &c : kCountries) {
    triples += std::string(c.id) + "\tcurrency\t" + Slug(c.currency) + "\n";
    triples += std::string(c.id) + "\tcapital\t" + Slug(c.capital) + "\n";
    for (const auto &n : neighbours[c.id]) {
      triples += std::string(c.id) + "\tadjoins\t" + n + "\n";
    }
  }

  // Two distinct paraphrases per (country, topic), one question per currency
  // asking who uses it.
  auto pick_two = [&rng](const std::vector<std::string> &family) {
    std::vector<std::size_t> idx(family.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    internal::Shuffle(idx, rng);
    return std::vector<std::string>{family[idx[0]], family[idx[1]]};
  };
  std::vector<Example> questions;
  for (const auto &c : kCountries) {
    std::string subject = Lower(c.name);
    for (const auto &p : pick_two(kCurrencyQuestions)) {
      questions.push_back(MakeExample(Fill(p, subject), {c.currency}));
    }
    for (const auto &p : pick_two(kCapitalQuestions)) {
      questions.push_back(MakeExample(Fill(p, subject), {c.capital}));
    }
    std::vector<std::string> border_names;
    for (const auto &n : neighbours[c.id]) border_names.push_back(name_of[n]);
    for (const auto &p : pick_two(kBorderQuestions)) {
      questions.push_back(MakeExample(Fill(p, subject), border_names));
    }
  }
  for (const auto &[currency, users] : users_of) {
    const auto &family = kCurrencyUserQuestions;
    const auto &p = family[rng() % family.size()];
    questions.push_back(MakeExample(
        Fill(p, Lower(currency)),
        std::vector<std::string>(users.begin(), users.end())));
  }
  internal::Shuffle(questions, rng);

  std::ostringstream dataset;
  WriteDataset(questions, dataset);

  fs::path dir(out_dir);
  WriteFile(dir / "catalog.tsv", catalog);
  WriteFile(dir / "triples.tsv", triples);
  WriteFile(dir / "questions.jsonl", dataset.str());
}

}  // namespace tensorparse
