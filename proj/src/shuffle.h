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

#ifndef TENSORPARSE_SRC_SHUFFLE_H_
#define TENSORPARSE_SRC_SHUFFLE_H_

#include <cstddef>
#include <random>
#include <utility>
#include <vector>

namespace tensorparse::internal {

// Fisher-Yates driven directly by the 64-bit engine so permutations do not
// depend on the standard library's distribution implementation.
template <typename T>
void Shuffle(std::vector<T> &items, std::mt19937_64 &rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[rng() % i]);
  }
}

}  // namespace tensorparse::internal

#endif  // TENSORPARSE_SRC_SHUFFLE_H_
