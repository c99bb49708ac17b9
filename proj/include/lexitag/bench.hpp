// Copyright 2026 The Lexitag Authors.
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

#ifndef LEXITAG_BENCH_HPP_
#define LEXITAG_BENCH_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lexitag/analysis.hpp"
#include "lexitag/edit_distance.hpp"
#include "lexitag/misspell_gen.hpp"

namespace lexitag {

enum class BenchMethod { kBase, kKeyboard, kEmbedding, kSymspell, kNorvig };

std::string_view to_string(BenchMethod m);
std::optional<BenchMethod> parse_bench_method(std::string_view s);

// Documents are normalized to this many per row in the average column.
inline constexpr double kBenchDocumentUnit = 600000.0;

struct BenchInputs {
  std::filesystem::path corpus;
  std::vector<std::filesystem::path> lexicons;
  std::optional<std::filesystem::path> freq_dict;    // symspell, norvig
  std::optional<std::filesystem::path> embeddings;   // embedding
  std::optional<std::filesystem::path> stoplist;
  std::vector<BenchMethod> methods;
  double key_threshold = kDefaultKeyThreshold;
  ExpansionParams expansion;
  Distance max_distance = 2;
  std::size_t warmup_documents = 1000;
};

struct BenchRow {
  BenchMethod method = BenchMethod::kBase;
  // Lexicon load or variant generation; absent for the correction methods.
  std::optional<double> generation_ms;
  // Everything needed to go from raw documents to matches, including
  // building the correction index where there is one.
  double tagging_ms = 0.0;
  double avg_ms_per_unit = 0.0;
  std::uint64_t documents = 0;
  std::uint64_t matches = 0;
};

// Times each requested pipeline on the in-memory corpus. One untimed warm-up
// pass over the first warmup_documents documents precedes each measurement.
// Missing inputs are reported as UsageError naming the file or flag.
std::vector<BenchRow> run_bench(const BenchInputs& inputs);

Table bench_table(const std::vector<BenchRow>& rows);

}  // namespace lexitag

#endif  // LEXITAG_BENCH_HPP_
