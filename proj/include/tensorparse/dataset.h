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

#ifndef TENSORPARSE_DATASET_H_
#define TENSORPARSE_DATASET_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tensorparse/learner.h"

namespace tensorparse {

// One JSON object per line: {"question": "...", "answers": ["...", ...]}.
// Blank lines are skipped. Throws ParseError with the 1-based line number.
std::vector<Example> LoadDataset(std::istream &in);
std::vector<Example> LoadDatasetFile(const std::string &path);

void WriteDataset(const std::vector<Example> &data, std::ostream &out);

inline constexpr std::uint64_t kDefaultToySeed = 42;

// Writes triples.tsv, catalog.tsv and questions.jsonl for a small
// country/currency/capital/border graph with paraphrased questions.
// Byte-identical for a given seed.
void GenerateToyCorpus(const std::string &out_dir,
                       std::uint64_t seed = kDefaultToySeed);

}  // namespace tensorparse

#endif  // TENSORPARSE_DATASET_H_
