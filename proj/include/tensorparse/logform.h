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

#ifndef TENSORPARSE_LOGFORM_H_
#define TENSORPARSE_LOGFORM_H_

#include <string>
#include <string_view>
#include <vector>

#include "tensorparse/kgraph.h"

namespace tensorparse {

using Tokens = std::vector<std::string>;

// A small executable query language over the knowledge graph:
//
//   ent(e)        {e}
//   join(r, X)    { x : s in X, (s, r, x) }
//   rev(r, X)     { x : s in X, (x, r, s) }
//   and(X, Y)     X intersected with Y
class LogicalForm {
 public:
  enum class Kind { kEntity, kJoin, kReverseJoin, kIntersect };

  static LogicalForm EntityLit(std::string id);
  static LogicalForm Join(std::string relation, LogicalForm arg);
  static LogicalForm ReverseJoin(std::string relation, LogicalForm arg);
  static LogicalForm Intersect(LogicalForm left, LogicalForm right);

  Kind kind() const { return kind_; }

  // Entity id for kEntity, relation id for kJoin/kReverseJoin, empty for
  // kIntersect.
  const std::string &id() const { return id_; }

  const LogicalForm &arg() const { return children_.at(0); }
  const LogicalForm &left() const { return children_.at(0); }
  const LogicalForm &right() const { return children_.at(1); }

  int depth() const;

  bool operator==(const LogicalForm &) const = default;

 private:
  LogicalForm(Kind kind, std::string id, std::vector<LogicalForm> children)
      : kind_(kind), id_(std::move(id)), children_(std::move(children)) {}

  Kind kind_;
  std::string id_;
  std::vector<LogicalForm> children_;
};

// Prefix notation, e.g. "join(currency, ent(brazil))".
std::string Serialize(const LogicalForm &lf);

// Inverse of Serialize. Throws ParseError with the character offset of the
// first problem.
LogicalForm ParseLogicalForm(std::string_view text);

// Renders a template-shaped form as English. Throws ShapeError for any form
// that is not one of
//   join(r, ent(e))
//   rev(r, ent(e))
//   join(r, and(rev(r1, ent(e1)), rev(r2, ent(e2))))
std::string CanonicalUtterance(const LogicalForm &lf, const KnowledgeGraph &kg);

struct Candidate {
  LogicalForm form;
  std::string serialized;
  Tokens utterance;
  EntitySet denotation;
};

// Builds a candidate, rendering the utterance and executing the form.
Candidate MakeCandidate(LogicalForm lf, const KnowledgeGraph &kg);

struct GenConfig {
  int max_candidates = 100;
  int max_span_length = 4;
  bool two_constraint_template = true;

  void Validate() const;
};

// Links every span of up to `max_span_length` tokens against the alias
// index, applies the templates to the linked entities and returns the
// distinct resulting candidates sorted by serialized form, truncated to
// `max_candidates`. Returns an empty list when nothing links.
std::vector<Candidate> GenerateCandidates(const Tokens &query,
                                          const KnowledgeGraph &kg,
                                          const GenConfig &config);

}  // namespace tensorparse

#endif  // TENSORPARSE_LOGFORM_H_
