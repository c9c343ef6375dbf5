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

#include "tensorparse/logform.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "tensorparse/errors.h"
#include "tensorparse/features.h"

namespace tensorparse {

LogicalForm LogicalForm::EntityLit(std::string id) {
  return LogicalForm(Kind::kEntity, std::move(id), {});
}

LogicalForm LogicalForm::Join(std::string relation, LogicalForm arg) {
  return LogicalForm(Kind::kJoin, std::move(relation), {std::move(arg)});
}

LogicalForm LogicalForm::ReverseJoin(std::string relation, LogicalForm arg) {
  return LogicalForm(Kind::kReverseJoin, std::move(relation),
                     {std::move(arg)});
}

LogicalForm LogicalForm::Intersect(LogicalForm left, LogicalForm right) {
  return LogicalForm(Kind::kIntersect, "", {std::move(left), std::move(right)});
}

int LogicalForm::depth() const {
  int deepest = 0;
  for (const auto &child : children_) {
    deepest = std::max(deepest, child.depth());
  }
  return deepest + 1;
}

std::string Serialize(const LogicalForm &lf) {
  switch (lf.kind()) {
    case LogicalForm::Kind::kEntity:
      return "ent(" + lf.id() + ")";
    case LogicalForm::Kind::kJoin:
      return "join(" + lf.id() + ", " + Serialize(lf.arg()) + ")";
    case LogicalForm::Kind::kReverseJoin:
      return "rev(" + lf.id() + ", " + Serialize(lf.arg()) + ")";
    case LogicalForm::Kind::kIntersect:
      return "and(" + Serialize(lf.left()) + ", " + Serialize(lf.right()) +
             ")";
  }
  return {};
}

namespace {

// Recursive-descent parser over the prefix notation.
class FormParser {
 public:
  explicit FormParser(std::string_view text) : text_(text) {}

  LogicalForm ParseAll() {
    LogicalForm lf = ParseForm();
    SkipSpace();
    if (pos_ != text_.size()) Fail("trailing input");
    return lf;
  }

 private:
  static bool IsIdChar(char c) {
    return c != '(' && c != ')' && c != ',' &&
           !std::isspace(static_cast<unsigned char>(c));
  }

  [[noreturn]] void Fail(const std::string &what) const {
    throw ParseError("logical form: " + what + " at offset " +
                         std::to_string(pos_),
                     pos_);
  }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  void Expect(char c) {
    SkipSpace();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      Fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  std::string Word() {
    SkipSpace();
    std::size_t start = pos_;
    while (pos_ < text_.size() && IsIdChar(text_[pos_])) ++pos_;
    if (pos_ == start) Fail("expected identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  LogicalForm ParseForm() {
    std::size_t start = pos_;
    std::string head = Word();
    Expect('(');
    LogicalForm result = LogicalForm::EntityLit("");
    if (head == "ent") {
      result = LogicalForm::EntityLit(Word());
    } else if (head == "join" || head == "rev") {
      std::string relation = Word();
      Expect(',');
      LogicalForm arg = ParseForm();
      result = head == "join"
                   ? LogicalForm::Join(std::move(relation), std::move(arg))
                   : LogicalForm::ReverseJoin(std::move(relation),
                                              std::move(arg));
    } else if (head == "and") {
      LogicalForm left = ParseForm();
      Expect(',');
      LogicalForm right = ParseForm();
      result = LogicalForm::Intersect(std::move(left), std::move(right));
    } else {
      pos_ = start;
      Fail("unknown operator '" + head + "'");
    }
    Expect(')');
    return result;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool IsEntityLit(const LogicalForm &lf) {
  return lf.kind() == LogicalForm::Kind::kEntity;
}

bool IsRevOfEntity(const LogicalForm &lf) {
  return lf.kind() == LogicalForm::Kind::kReverseJoin && IsEntityLit(lf.arg());
}

// A relation's type tag admits an entity when either side is untyped or the
// entity carries the tag.
bool Admits(const std::optional<std::string> &tag,
            const std::set<std::string> &types) {
  return !tag || types.empty() || types.count(*tag) != 0;
}

}  // namespace

LogicalForm ParseLogicalForm(std::string_view text) {
  return FormParser(text).ParseAll();
}

std::string CanonicalUtterance(const LogicalForm &lf,
                               const KnowledgeGraph &kg) {
  auto phrase = [&](const LogicalForm &f) -> const std::string & {
    return kg.relation(f.id()).phrase;
  };
  auto name = [&](const LogicalForm &f) -> const std::string & {
    return kg.entity(f.id()).name;
  };

  if (lf.kind() == LogicalForm::Kind::kJoin && IsEntityLit(lf.arg())) {
    return "the " + phrase(lf) + " of " + name(lf.arg());
  }
  if (IsRevOfEntity(lf)) {
    return "the things whose " + phrase(lf) + " is " + name(lf.arg());
  }
  if (lf.kind() == LogicalForm::Kind::kJoin &&
      lf.arg().kind() == LogicalForm::Kind::kIntersect &&
      IsRevOfEntity(lf.arg().left()) && IsRevOfEntity(lf.arg().right())) {
    const LogicalForm &a = lf.arg().left();
    const LogicalForm &b = lf.arg().right();
    return "the " + phrase(lf) + " of the thing whose " + phrase(a) + " is " +
           name(a.arg()) + " and whose " + phrase(b) + " is " + name(b.arg());
  }
  throw ShapeError("no utterance rule for " + Serialize(lf));
}

Candidate MakeCandidate(LogicalForm lf, const KnowledgeGraph &kg) {
  Candidate c{std::move(lf), "", {}, {}};
  c.serialized = Serialize(c.form);
  c.utterance = Tokenize(CanonicalUtterance(c.form, kg));
  c.denotation = Denotation(c.form, kg);
  return c;
}

void GenConfig::Validate() const {
  if (max_candidates < 1) throw ConfigError("max candidates must be >= 1");
  if (max_span_length < 1) throw ConfigError("max span length must be >= 1");
}

std::vector<Candidate> GenerateCandidates(const Tokens &query,
                                          const KnowledgeGraph &kg,
                                          const GenConfig &config) {
  config.Validate();
  std::span<const std::string> tokens(query);
  std::set<std::string> linked;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    std::size_t longest = std::min<std::size_t>(config.max_span_length,
                                                tokens.size() - i);
    for (std::size_t len = 1; len <= longest; ++len) {
      for (const Entity *e : kg.EntitiesByAlias(tokens.subspan(i, len))) {
        linked.insert(e->id);
      }
    }
  }

  std::map<std::string, LogicalForm> forms;
  auto add = [&forms](LogicalForm lf) {
    std::string key = Serialize(lf);
    forms.emplace(std::move(key), std::move(lf));
  };

  for (const auto &e : linked) {
    const auto &types = kg.TypesOf(e);
    for (const auto &[rid, rel] : kg.relations()) {
      if (Admits(rel.domain_type, types)) {
        add(LogicalForm::Join(rid, LogicalForm::EntityLit(e)));
      }
      if (Admits(rel.range_type, types)) {
        add(LogicalForm::ReverseJoin(rid, LogicalForm::EntityLit(e)));
      }
    }
  }

  if (config.two_constraint_template) {
    for (auto e1 = linked.begin(); e1 != linked.end(); ++e1) {
      for (auto e2 = std::next(e1); e2 != linked.end(); ++e2) {
        for (const auto &[r1, rel1] : kg.relations()) {
          if (!Admits(rel1.range_type, kg.TypesOf(*e1))) continue;
          for (const auto &[r2, rel2] : kg.relations()) {
            if (!Admits(rel2.range_type, kg.TypesOf(*e2))) continue;
            LogicalForm inner = LogicalForm::Intersect(
                LogicalForm::ReverseJoin(r1, LogicalForm::EntityLit(*e1)),
                LogicalForm::ReverseJoin(r2, LogicalForm::EntityLit(*e2)));
            EntitySet things = Denotation(inner, kg);
            if (things.empty()) continue;
            std::set<std::string> thing_types;
            for (const auto &x : things) {
              const auto &t = kg.TypesOf(x);
              thing_types.insert(t.begin(), t.end());
            }
            for (const auto &[r, rel] : kg.relations()) {
              if (Admits(rel.domain_type, thing_types)) {
                add(LogicalForm::Join(r, inner));
              }
            }
          }
        }
      }
    }
  }

  std::vector<Candidate> candidates;
  for (auto &[key, lf] : forms) {
    if (candidates.size() >= static_cast<std::size_t>(config.max_candidates)) {
      break;
    }
    candidates.push_back(MakeCandidate(std::move(lf), kg));
  }
  return candidates;
}

}  // namespace tensorparse
