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

#ifndef TENSORPARSE_KERNEL_H_
#define TENSORPARSE_KERNEL_H_

#include "tensorparse/features.h"
#include "tensorparse/sparse.h"

namespace tensorparse {

// Kernel on (query, utterance) pairs induced by the tensor product map:
//
//   k((q1, u1), (q2, u2)) = <q1, q2> * <u1, u2>
//
// which equals Dot(TensorPairFeatures(q1, u1), TensorPairFeatures(q2, u2))
// without materializing the pair space.
template <typename Key, typename Scalar>
Scalar TensorKernel(const SparseVector<Key, Scalar> &q1,
                    const SparseVector<Key, Scalar> &u1,
                    const SparseVector<Key, Scalar> &q2,
                    const SparseVector<Key, Scalar> &u2) {
  return Dot(q1, q2) * Dot(u1, u2);
}

}  // namespace tensorparse

#endif  // TENSORPARSE_KERNEL_H_
