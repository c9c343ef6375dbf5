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

#include "tensorparse/features.h"

namespace tensorparse {
namespace {

bool IsAsciiAlnum(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9');
}

char AsciiLower(char c) { return (c >= 'A' && c <= 'Z') ? c - 'A' + 'a' : c; }

}  // namespace

Tokens Tokenize(std::string_view text) {
  Tokens tokens;
  std::string current;
  for (char c : text) {
    if (IsAsciiAlnum(c)) {
      current += AsciiLower(c);
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::string Normalize(std::string_view text) {
  std::string out;
  for (const auto &token : Tokenize(text)) {
    if (!out.empty()) out += ' ';
    out += token;
  }
  return out;
}

FeatureKey FeatureKey::Pair(std::string_view query_term,
                            std::string_view utterance_term) {
  std::string text = "p:";
  text.append(query_term).append("|").append(utterance_term);
  return FeatureKey(Kind::kPair, std::string(query_term),
                    std::string(utterance_term), std::move(text));
}

FeatureKey FeatureKey::Lf(std::string_view name) {
  std::string text = "lf:";
  text.append(name);
  return FeatureKey(Kind::kLogicalForm, std::string(name), "", std::move(text));
}

std::optional<FeatureKey> FeatureKey::Decode(std::string_view text) {
  if (text.starts_with("p:")) {
    std::string_view rest = text.substr(2);
    std::size_t bar = rest.find('|');
    if (bar == std::string_view::npos || bar == 0 || bar + 1 == rest.size() ||
        rest.find('|', bar + 1) != std::string_view::npos) {
      return std::nullopt;
    }
    return Pair(rest.substr(0, bar), rest.substr(bar + 1));
  }
  if (text.starts_with("lf:") && text.size() > 3) return Lf(text.substr(3));
  return std::nullopt;
}

TermVector UnigramFeatures(const Tokens &tokens) {
  TermVector v;
  for (const auto &token : tokens) v.Set(token, 1.0);
  return v;
}

FeatureVector TensorPairFeatures(const TermVector &query,
                                 const TermVector &utterance) {
  FeatureVector v;
  for (const auto &[q, qv] : query) {
    for (const auto &[u, uv] : utterance) {
      v.Set(FeatureKey::Pair(q, u), qv * uv);
    }
  }
  return v;
}

FeatureVector LogicalFormFeatures(const Candidate &candidate) {
  std::size_t n = candidate.denotation.size();
  std::string_view bucket = n == 0   ? lf_features::kEmpty
                            : n == 1 ? lf_features::kSize1
                            : n == 2 ? lf_features::kSize2
                            : n <= 5 ? lf_features::kSize3to5
                                     : lf_features::kSize6Plus;
  FeatureVector v;
  v.Set(FeatureKey::Lf(bucket), 1.0);
  return v;
}

FeatureVector Assemble(const Tokens &query, const Candidate &candidate) {
  FeatureVector v = TensorPairFeatures(UnigramFeatures(query),
                                       UnigramFeatures(candidate.utterance));
  for (const auto &[key, value] : LogicalFormFeatures(candidate)) {
    v.Set(key, value);
  }
  return v;
}

}  // namespace tensorparse
