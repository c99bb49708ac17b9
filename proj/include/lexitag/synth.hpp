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

#ifndef LEXITAG_SYNTH_HPP_
#define LEXITAG_SYNTH_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "lexitag/core_model.hpp"

namespace lexitag {

struct SynthConfig {
  std::size_t documents = 10000;
  // Fraction of planted mentions that carry exactly one random edit.
  double perturb_rate = 0.2;
  std::uint64_t seed = 42;
  // Distinct non-lexicon words used as document filler.
  std::size_t filler_vocabulary = 5000;
  std::size_t embedding_dimension = 16;
};

// One planted lexicon mention. token_index/token_count locate it in the
// normalized token stream of the document; start/end are code point offsets.
struct PlantedMention {
  std::string doc_id;
  std::size_t token_index = 0;
  std::size_t token_count = 0;
  std::size_t start = 0;
  std::size_t end = 0;
  std::string surface;
  std::string term_id;
  std::string written;
  bool perturbed = false;
  std::string edit;  // none, delete, insert, substitute, transpose
};

struct SynthCorpus {
  std::vector<Document> documents;
  std::vector<PlantedMention> mentions;
  // Every lexicon token plus the filler vocabulary.
  FrequencyDictionary dictionary;
  // Lexicon tokens, the misspelled forms written into the corpus (placed
  // next to the token they misspell) and the filler vocabulary.
  std::vector<std::string> embedding_vocab;
  std::vector<double> embedding_vectors;
  std::size_t embedding_dimension = 0;
};

// Deterministic for a given lexicon and config. Perturbed mentions are
// guaranteed not to normalize to any lexicon surface or dictionary token.
SynthCorpus synthesize_corpus(const Lexicon& lexicon, const SynthConfig& config);

void write_corpus(const std::vector<Document>& docs, const std::filesystem::path& path);
// doc_id, token_index, token_count, start, end, surface, term_id, written,
// perturbed (0/1), edit.
void write_truth(const std::vector<PlantedMention>& mentions, const std::filesystem::path& path);
std::vector<PlantedMention> load_truth(const std::filesystem::path& path);
void write_embeddings(const SynthCorpus& corpus, const std::filesystem::path& path);

}  // namespace lexitag

#endif  // LEXITAG_SYNTH_HPP_
