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

#include "tensorparse/kgraph.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "tensorparse/errors.h"
#include "tensorparse/features.h"
#include "tensorparse/logform.h"

namespace tensorparse {
namespace {

const EntitySet kNoEntities;
const std::set<std::string> kNoTypes;

std::vector<std::string> SplitTabs(const std::string &line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    std::size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

bool Skippable(const std::string &line) {
  return line.find_first_not_of(" \t\r") == std::string::npos ||
         line[0] == '#';
}

void StripCarriageReturn(std::string &line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

std::optional<std::string> OptionalField(const std::vector<std::string> &f,
                                         std::size_t i) {
  if (i >= f.size() || f[i].empty()) return std::nullopt;
  return f[i];
}

}  // namespace

KnowledgeGraph::KnowledgeGraph(std::vector<Entity> entities,
                               std::vector<Relation> relations,
                               std::vector<Triple> triples) {
  for (auto &e : entities) {
    if (e.id.empty()) throw ConfigError("entity with empty id");
    if (e.name.empty()) throw ConfigError("entity " + e.id + " has no name");
    std::set<std::string> aliases;
    for (const auto &alias : e.aliases) {
      std::string normalized = Normalize(alias);
      if (!normalized.empty()) aliases.insert(std::move(normalized));
    }
    std::string name = Normalize(e.name);
    if (!name.empty()) aliases.insert(name);
    e.aliases.assign(aliases.begin(), aliases.end());
    for (const auto &alias : e.aliases) alias_index_[alias].insert(e.id);
    std::string id = e.id;
    if (!entities_.emplace(id, std::move(e)).second) {
      throw ConfigError("duplicate entity id " + id);
    }
  }
  for (auto &r : relations) {
    if (r.id.empty()) throw ConfigError("relation with empty id");
    if (r.phrase.empty()) {
      throw ConfigError("relation " + r.id + " has no phrase");
    }
    std::string id = r.id;
    if (!relations_.emplace(id, std::move(r)).second) {
      throw ConfigError("duplicate relation id " + id);
    }
  }
  for (auto &t : triples) {
    if (!entities_.count(t.subject)) throw ReferenceError(t.subject);
    if (!entities_.count(t.object)) throw ReferenceError(t.object);
    const Relation &rel = relation(t.relation);
    forward_[{t.subject, t.relation}].insert(t.object);
    backward_[{t.object, t.relation}].insert(t.subject);
    if (rel.domain_type) entity_types_[t.subject].insert(*rel.domain_type);
    if (rel.range_type) entity_types_[t.object].insert(*rel.range_type);
    triples_.insert(std::move(t));
  }
}

const Entity *KnowledgeGraph::FindEntity(const std::string &id) const {
  auto it = entities_.find(id);
  return it == entities_.end() ? nullptr : &it->second;
}

const Relation *KnowledgeGraph::FindRelation(const std::string &id) const {
  auto it = relations_.find(id);
  return it == relations_.end() ? nullptr : &it->second;
}

const Entity &KnowledgeGraph::entity(const std::string &id) const {
  const Entity *e = FindEntity(id);
  if (e == nullptr) throw ReferenceError(id);
  return *e;
}

const Relation &KnowledgeGraph::relation(const std::string &id) const {
  const Relation *r = FindRelation(id);
  if (r == nullptr) throw ReferenceError(id);
  return *r;
}

const EntitySet &KnowledgeGraph::Forward(const std::string &subject,
                                         const std::string &relation) const {
  auto it = forward_.find({subject, relation});
  return it == forward_.end() ? kNoEntities : it->second;
}

const EntitySet &KnowledgeGraph::Backward(const std::string &object,
                                          const std::string &relation) const {
  auto it = backward_.find({object, relation});
  return it == backward_.end() ? kNoEntities : it->second;
}

std::vector<const Entity *> KnowledgeGraph::EntitiesByAlias(
    std::span<const std::string> span) const {
  std::string key;
  for (const auto &token : span) {
    if (!key.empty()) key += ' ';
    key += token;
  }
  std::vector<const Entity *> result;
  auto it = alias_index_.find(Normalize(key));
  if (it == alias_index_.end()) return result;
  for (const auto &id : it->second) result.push_back(&entities_.at(id));
  return result;
}

const std::set<std::string> &KnowledgeGraph::TypesOf(
    const std::string &entity_id) const {
  auto it = entity_types_.find(entity_id);
  return it == entity_types_.end() ? kNoTypes : it->second;
}

KnowledgeGraph LoadGraph(std::istream &triples, std::istream &catalog) {
  std::vector<Entity> entities;
  std::vector<Relation> relations;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(catalog, line)) {
    ++lineno;
    StripCarriageReturn(line);
    if (Skippable(line)) continue;
    auto f = SplitTabs(line);
    if (f[0] == "E") {
      if (f.size() != 3 && f.size() != 4) {
        throw ParseError("catalog line " + std::to_string(lineno) +
                             ": entity needs 3 or 4 fields",
                         lineno);
      }
      Entity e{f[1], f[2], {}};
      if (f.size() == 4 && !f[3].empty()) {
        std::stringstream aliases(f[3]);
        std::string alias;
        while (std::getline(aliases, alias, '|')) e.aliases.push_back(alias);
      }
      if (e.id.empty() || e.name.empty()) {
        throw ParseError("catalog line " + std::to_string(lineno) +
                             ": empty entity id or name",
                         lineno);
      }
      entities.push_back(std::move(e));
    } else if (f[0] == "R") {
      if (f.size() < 3 || f.size() > 5) {
        throw ParseError("catalog line " + std::to_string(lineno) +
                             ": relation needs 3 to 5 fields",
                         lineno);
      }
      if (f[1].empty() || f[2].empty()) {
        throw ParseError("catalog line " + std::to_string(lineno) +
                             ": empty relation id or phrase",
                         lineno);
      }
      relations.push_back(
          {f[1], f[2], OptionalField(f, 3), OptionalField(f, 4)});
    } else {
      throw ParseError("catalog line " + std::to_string(lineno) +
                           ": unknown record type '" + f[0] + "'",
                       lineno);
    }
  }

  std::vector<Triple> facts;
  lineno = 0;
  while (std::getline(triples, line)) {
    ++lineno;
    StripCarriageReturn(line);
    if (Skippable(line)) continue;
    auto f = SplitTabs(line);
    if (f.size() != 3 || f[0].empty() || f[1].empty() || f[2].empty()) {
      throw ParseError("triples line " + std::to_string(lineno) +
                           ": expected subject<TAB>relation<TAB>object",
                       lineno);
    }
    facts.push_back({f[0], f[1], f[2]});
  }
  return KnowledgeGraph(std::move(entities), std::move(relations),
                        std::move(facts));
}

KnowledgeGraph LoadGraphFiles(const std::string &triples_path,
                              const std::string &catalog_path) {
  std::ifstream triples(triples_path);
  if (!triples) throw IoError("cannot open " + triples_path);
  std::ifstream catalog(catalog_path);
  if (!catalog) throw IoError("cannot open " + catalog_path);
  return LoadGraph(triples, catalog);
}

EntitySet Denotation(const LogicalForm &lf, const KnowledgeGraph &kg) {
  switch (lf.kind()) {
    case LogicalForm::Kind::kEntity:
      kg.entity(lf.id());
      return {lf.id()};
    case LogicalForm::Kind::kJoin:
    case LogicalForm::Kind::kReverseJoin: {
      kg.relation(lf.id());
      bool forward = lf.kind() == LogicalForm::Kind::kJoin;
      EntitySet result;
      for (const auto &s : Denotation(lf.arg(), kg)) {
        const EntitySet &hits =
            forward ? kg.Forward(s, lf.id()) : kg.Backward(s, lf.id());
        result.insert(hits.begin(), hits.end());
      }
      return result;
    }
    case LogicalForm::Kind::kIntersect: {
      EntitySet left = Denotation(lf.left(), kg);
      EntitySet right = Denotation(lf.right(), kg);
      EntitySet result;
      std::set_intersection(left.begin(), left.end(), right.begin(),
                            right.end(),
                            std::inserter(result, result.end()));
      return result;
    }
  }
  return {};
}

std::set<std::string> EntityNames(const EntitySet &ids,
                                  const KnowledgeGraph &kg) {
  std::set<std::string> names;
  for (const auto &id : ids) names.insert(kg.entity(id).name);
  return names;
}

}  // namespace tensorparse
