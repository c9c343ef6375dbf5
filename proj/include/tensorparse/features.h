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

#ifndef TENSORPARSE_FEATURES_H_
#define TENSORPARSE_FEATURES_H_

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "tensorparse/logform.h"
#include "tensorparse/sparse.h"

namespace tensorparse {

// Lowercases, turns every non-alphanumeric ASCII character into a separator
// and splits. Bytes outside ASCII are separators too.
Tokens Tokenize(std::string_view text);

// Tokens joined by single spaces; the form used for alias matching and
// answer comparison.
std::string Normalize(std::string_view text);

// A coordinate of the joint feature space: either a (query term, utterance
// term) pair, i.e. a basis vector of the tensor product of the two unigram
// spaces, or a feature of the logical form itself.
class FeatureKey {
 public:
  enum class Kind { kPair, kLogicalForm };

  static FeatureKey Pair(std::string_view query_term,
                         std::string_view utterance_term);
  static FeatureKey Lf(std::string_view name);

  // Decodes "p:<q>|<u>" or "lf:<name>". Returns nullopt if malformed.
  static std::optional<FeatureKey> Decode(std::string_view text);

  Kind kind() const { return kind_; }
  const std::string &query_term() const { return first_; }
  const std::string &utterance_term() const { return second_; }
  const std::string &name() const { return first_; }

  // Text encoding used in model files and reports.
  const std::string &text() const { return text_; }

  // Keys order by their text encoding.
  std::strong_ordering operator<=>(const FeatureKey &other) const {
    return text_ <=> other.text_;
  }
  bool operator==(const FeatureKey &other) const {
    return text_ == other.text_;
  }

 private:
  FeatureKey(Kind kind, std::string first, std::string second,
             std::string text)
      : kind_(kind),
        first_(std::move(first)),
        second_(std::move(second)),
        text_(std::move(text)) {}

  Kind kind_;
  std::string first_;
  std::string second_;
  std::string text_;
};

// Side-local unigram vector (one space for queries, one for utterances).
using TermVector = SparseVector<std::string>;
using FeatureVector = SparseVector<FeatureKey>;

namespace lf_features {
inline constexpr std::string_view kEmpty = "denot.empty";
inline constexpr std::string_view kSize1 = "denot.size.1";
inline constexpr std::string_view kSize2 = "denot.size.2";
inline constexpr std::string_view kSize3to5 = "denot.size.3to5";
inline constexpr std::string_view kSize6Plus = "denot.size.6plus";
}  // namespace lf_features

// Binary presence: each distinct token maps to 1.
TermVector UnigramFeatures(const Tokens &tokens);

// Explicit tensor product: one Pair key per (query term, utterance term),
// valued by the product of the two coordinates.
FeatureVector TensorPairFeatures(const TermVector &query,
                                 const TermVector &utterance);

// Exactly one denotation-size bucket feature.
FeatureVector LogicalFormFeatures(const Candidate &candidate);

// Joint representation of a (query, candidate) pair: pair features of the
// two unigram vectors plus the logical-form features.
FeatureVector Assemble(const Tokens &query, const Candidate &candidate);

}  // namespace tensorparse

#endif  // TENSORPARSE_FEATURES_H_
