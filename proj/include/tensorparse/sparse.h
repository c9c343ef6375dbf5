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

#ifndef TENSORPARSE_SPARSE_H_
#define TENSORPARSE_SPARSE_H_

#include <cstddef>
#include <initializer_list>
#include <map>
#include <utility>

namespace tensorparse {

// Sparse vector over an ordered key universe. Never stores explicit zeros;
// iteration is in ascending key order.
template <typename Key, typename Scalar = double>
class SparseVector {
 public:
  using key_type = Key;
  using scalar_type = Scalar;
  using Storage = std::map<Key, Scalar>;
  using const_iterator = typename Storage::const_iterator;

  SparseVector() = default;
  SparseVector(std::initializer_list<std::pair<const Key, Scalar>> init) {
    for (const auto &[key, value] : init) Set(key, value);
  }

  // Sets a coordinate; setting zero removes it.
  void Set(const Key &key, Scalar value) {
    if (value == Scalar(0)) {
      entries_.erase(key);
    } else {
      entries_.insert_or_assign(key, value);
    }
  }

  void Add(const Key &key, Scalar delta) { Set(key, Get(key) + delta); }

  Scalar Get(const Key &key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? Scalar(0) : it->second;
  }

  bool Contains(const Key &key) const { return entries_.count(key) != 0; }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const_iterator begin() const { return entries_.begin(); }
  const_iterator end() const { return entries_.end(); }

  SparseVector &operator*=(Scalar alpha) {
    if (alpha == Scalar(0)) {
      entries_.clear();
    } else {
      for (auto &entry : entries_) entry.second *= alpha;
    }
    return *this;
  }

  bool operator==(const SparseVector &) const = default;

 private:
  Storage entries_;
};

template <typename Key, typename Scalar>
SparseVector<Key, Scalar> operator*(Scalar alpha,
                                    SparseVector<Key, Scalar> v) {
  v *= alpha;
  return v;
}

// Sum over shared keys of the coordinate products. Walks the smaller operand
// and probes the larger one.
template <typename Key, typename Scalar>
Scalar Dot(const SparseVector<Key, Scalar> &a,
           const SparseVector<Key, Scalar> &b) {
  if (b.size() < a.size()) return Dot(b, a);
  Scalar sum(0);
  for (const auto &[key, value] : a) sum += value * b.Get(key);
  return sum;
}

}  // namespace tensorparse

#endif  // TENSORPARSE_SPARSE_H_
