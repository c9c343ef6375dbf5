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

#include <random>

#include "doctest.h"

namespace tensorparse {
namespace {

TermVector RandomTerms(std::mt19937_64 &rng, int vocab, double density,
                       bool binary) {
  TermVector v;
  for (int i = 0; i < vocab; ++i) {
    if (std::uniform_real_distribution<>(0, 1)(rng) < density) {
      double value = binary ? 1.0 : 0.25 * (1 + rng() % 8);
      v.Set("t" + std::to_string(i), value);
    }
  }
  return v;
}

Candidate WithDenotationSize(std::size_t n, Tokens utterance = {}) {
  Candidate c{LogicalForm::EntityLit("x"), "ent(x)", std::move(utterance), {}};
  for (std::size_t i = 0; i < n; ++i) c.denotation.insert("e" + std::to_string(i));
  return c;
}

TEST_CASE("tokenize") {
  CHECK(Tokenize("What 5 countries border ethiopia?") ==
        Tokens{"what", "5", "countries", "border", "ethiopia"});
  CHECK(Tokenize("what's sweden's currency?") ==
        Tokens{"what", "s", "sweden", "s", "currency"});
  CHECK(Tokenize("").empty());
  CHECK(Tokenize(" ,;  ").empty());
  CHECK(Tokenize("S\xC3\xA3o Paulo") == Tokens{"s", "o", "paulo"});
  CHECK(Tokenize("a|b\tc") == Tokens{"a", "b", "c"});
  CHECK(Normalize("  The Dominican-Republic ") == "the dominican republic");
}

TEST_CASE("unigram features are binary presence") {
  TermVector v = UnigramFeatures({"the", "adjoins", "of", "ethiopia"});
  CHECK(v == TermVector{{"the", 1}, {"adjoins", 1}, {"of", 1}, {"ethiopia", 1}});
  CHECK(UnigramFeatures({"a", "a", "b"}) == TermVector{{"a", 1}, {"b", 1}});
  CHECK(UnigramFeatures({}).empty());
}

TEST_CASE("tensor pair features of the border example") {
  TermVector q{{"countries", 1}, {"border", 1}};
  TermVector u{{"adjoins", 1}, {"ethiopia", 1}};
  FeatureVector expected{{FeatureKey::Pair("countries", "adjoins"), 1},
                         {FeatureKey::Pair("countries", "ethiopia"), 1},
                         {FeatureKey::Pair("border", "adjoins"), 1},
                         {FeatureKey::Pair("border", "ethiopia"), 1}};
  CHECK(TensorPairFeatures(q, u) == expected);
  CHECK(TensorPairFeatures({}, u).empty());
  CHECK(TensorPairFeatures(q, {}).empty());
  TermVector three{{"a", 1}, {"b", 1}, {"c", 1}};
  CHECK(TensorPairFeatures(three, u).size() == 6);
}

TEST_CASE("denotation size buckets") {
  auto bucket = [](std::size_t n) {
    FeatureVector f = LogicalFormFeatures(WithDenotationSize(n));
    REQUIRE(f.size() == 1);
    CHECK(f.begin()->second == 1.0);
    return f.begin()->first.name();
  };
  CHECK(bucket(0) == "denot.empty");
  CHECK(bucket(1) == "denot.size.1");
  CHECK(bucket(2) == "denot.size.2");
  CHECK(bucket(3) == "denot.size.3to5");
  CHECK(bucket(4) == "denot.size.3to5");
  CHECK(bucket(5) == "denot.size.3to5");
  CHECK(bucket(6) == "denot.size.6plus");
  CHECK(bucket(100) == "denot.size.6plus");
}

TEST_CASE("assemble joins pair and logical-form features") {
  FeatureVector f = Assemble({"borders"}, WithDenotationSize(1, {"adjoins"}));
  CHECK(f == FeatureVector{{FeatureKey::Pair("borders", "adjoins"), 1},
                           {FeatureKey::Lf("denot.size.1"), 1}});
  CHECK(Assemble({}, WithDenotationSize(0, {"x"})) ==
        FeatureVector{{FeatureKey::Lf("denot.empty"), 1}});
  // Keys of the two kinds never collide, even for look-alike terms.
  CHECK(FeatureKey::Pair("lf", "denot.empty") != FeatureKey::Lf("denot.empty"));
  FeatureVector g = Assemble({"lf", "denot"}, WithDenotationSize(0, {"empty"}));
  CHECK(g.size() == 3);
}

TEST_CASE("feature key text encoding") {
  CHECK(FeatureKey::Pair("currency", "currency").text() == "p:currency|currency");
  CHECK(FeatureKey::Lf("denot.size.1").text() == "lf:denot.size.1");
  auto pair = FeatureKey::Decode("p:border|adjoins");
  REQUIRE(pair);
  CHECK(pair->kind() == FeatureKey::Kind::kPair);
  CHECK(pair->query_term() == "border");
  CHECK(pair->utterance_term() == "adjoins");
  auto lf = FeatureKey::Decode("lf:denot.empty");
  REQUIRE(lf);
  CHECK(lf->kind() == FeatureKey::Kind::kLogicalForm);
  CHECK(lf->name() == "denot.empty");
  CHECK_FALSE(FeatureKey::Decode("p:nobar"));
  CHECK_FALSE(FeatureKey::Decode("p:|x"));
  CHECK_FALSE(FeatureKey::Decode("p:a|b|c"));
  CHECK_FALSE(FeatureKey::Decode("lf:"));
  CHECK_FALSE(FeatureKey::Decode("w:x"));
}

TEST_CASE("pair features: size, bilinearity, binarity, determinism") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    bool binary = trial % 2 == 0;
    TermVector a = RandomTerms(rng, 30, 0.3, binary);
    TermVector b = RandomTerms(rng, 30, 0.3, binary);
    FeatureVector ab = TensorPairFeatures(a, b);
    CHECK(ab.size() == a.size() * b.size());
    CHECK(TensorPairFeatures(a, b) == ab);

    double alpha = 0.5 * (1 + rng() % 6);
    FeatureVector scaled = TensorPairFeatures(alpha * a, b);
    FeatureVector expected = alpha * ab;
    REQUIRE(scaled.size() == expected.size());
    for (const auto &[key, value] : expected) {
      CHECK(scaled.Get(key) == doctest::Approx(value).epsilon(1e-15));
    }
    FeatureVector scaled_b = TensorPairFeatures(a, alpha * b);
    for (const auto &[key, value] : expected) {
      CHECK(scaled_b.Get(key) == doctest::Approx(value).epsilon(1e-15));
    }
    if (binary) {
      for (const auto &[key, value] : ab) CHECK(value == 1.0);
    }
  }
}

}  // namespace
}  // namespace tensorparse
