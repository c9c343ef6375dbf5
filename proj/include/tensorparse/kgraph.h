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

#ifndef TENSORPARSE_KGRAPH_H_
#define TENSORPARSE_KGRAPH_H_

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tensorparse {

using EntitySet = std::set<std::string>;

struct Entity {
  std::string id;
  std::string name;
  // Normalized surface forms. Always contains the normalized name.
  std::vector<std::string> aliases;
};

struct Relation {
  std::string id;
  std::string phrase;
  std::optional<std::string> domain_type;
  std::optional<std::string> range_type;
};

struct Triple {
  std::string subject;
  std::string relation;
  std::string object;

  auto operator<=>(const Triple &) const = default;
};

class LogicalForm;

// Immutable triple store. Facts are indexed both by (subject, relation) and
// by (object, relation); the two indexes are exact inverses of each other.
// All member functions are const, so a loaded graph may be shared freely
// between threads.
class KnowledgeGraph {
 public:
  // Builds and indexes a graph. Duplicate triples collapse. Throws
  // ReferenceError if a triple names an id missing from the catalogs.
  KnowledgeGraph(std::vector<Entity> entities, std::vector<Relation> relations,
                 std::vector<Triple> triples);

  const Entity *FindEntity(const std::string &id) const;
  const Relation *FindRelation(const std::string &id) const;

  // Same as the Find* variants but throws ReferenceError when missing.
  const Entity &entity(const std::string &id) const;
  const Relation &relation(const std::string &id) const;

  const std::map<std::string, Entity> &entities() const { return entities_; }
  const std::map<std::string, Relation> &relations() const {
    return relations_;
  }
  const std::set<Triple> &triples() const { return triples_; }

  // Objects o with (subject, relation, o). Empty if none.
  const EntitySet &Forward(const std::string &subject,
                           const std::string &relation) const;
  // Subjects s with (s, relation, object). Empty if none.
  const EntitySet &Backward(const std::string &object,
                            const std::string &relation) const;

  // Entities whose normalized alias equals the normalized span, in id order.
  std::vector<const Entity *> EntitiesByAlias(
      std::span<const std::string> span) const;

  // Types implied by the relations an entity takes part in: the domain type
  // of relations it is the subject of and the range type of relations it is
  // the object of.
  const std::set<std::string> &TypesOf(const std::string &entity_id) const;

  std::size_t size() const { return triples_.size(); }

 private:
  using Key = std::pair<std::string, std::string>;

  std::map<std::string, Entity> entities_;
  std::map<std::string, Relation> relations_;
  std::set<Triple> triples_;
  std::map<Key, EntitySet> forward_;
  std::map<Key, EntitySet> backward_;
  std::map<std::string, EntitySet> alias_index_;
  std::map<std::string, std::set<std::string>> entity_types_;
};

// Reads the triple and catalog TSV formats. Throws ParseError (with the
// 1-based line number) on malformed lines and ReferenceError on dangling ids.
KnowledgeGraph LoadGraph(std::istream &triples, std::istream &catalog);
KnowledgeGraph LoadGraphFiles(const std::string &triples_path,
                              const std::string &catalog_path);

// Executes a logical form. Throws ReferenceError for unresolved ids; an
// empty result is a valid answer.
EntitySet Denotation(const LogicalForm &lf, const KnowledgeGraph &kg);

// Display names of a set of entity ids.
std::set<std::string> EntityNames(const EntitySet &ids,
                                  const KnowledgeGraph &kg);

}  // namespace tensorparse

#endif  // TENSORPARSE_KGRAPH_H_
