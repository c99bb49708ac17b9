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

#ifndef LEXITAG_MISSPELL_GEN_HPP_
#define LEXITAG_MISSPELL_GEN_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexitag/core_model.hpp"
#include "lexitag/errors.hpp"

namespace lexitag {

inline constexpr double kDefaultKeyThreshold = 1.2;
inline constexpr std::size_t kDefaultNeighborCount = 25;
inline constexpr double kDefaultLexRatio = 0.25;
inline constexpr int kMaxExpansionRounds = 10;

class UnknownCharacter : public UsageError {
 public:
  using UsageError::UsageError;
};

// Key-center coordinates in key-width units.
struct KeyPosition {
  double row = 0.0;
  double col = 0.0;
};

// Physical keyboard layout plus the distance threshold that defines which
// keys count as "close". Requires all 26 lowercase latin letters with
// distinct coordinates and a positive threshold.
class KeyboardGeometry {
 public:
  KeyboardGeometry(std::map<char32_t, KeyPosition> keys, double threshold);

  // Staggered QWERTY: letter rows offset by 0, 0.25 and 0.75 key widths.
  static KeyboardGeometry qwerty(double threshold = kDefaultKeyThreshold);
  // TSV char<TAB>row<TAB>col; '#' comments.
  static KeyboardGeometry load(const std::filesystem::path& path,
                               double threshold = kDefaultKeyThreshold);

  double threshold() const { return threshold_; }
  bool contains(char32_t ch) const { return keys_.contains(ch); }
  const std::map<char32_t, KeyPosition>& keys() const { return keys_; }

  // Keys other than ch within threshold of it, in code point order. Throws
  // UnknownCharacter when ch has no key.
  std::vector<char32_t> neighbors(char32_t ch) const;

 private:
  std::map<char32_t, KeyPosition> keys_;
  double threshold_;
};

// Every single-key substitution of term using neighboring keys. Positions
// whose character has no key are skipped.
MisspellingSet generate_keyboard_misspellings(std::string_view term,
                                              const KeyboardGeometry& geometry);

class Stoplist {
 public:
  Stoplist() = default;
  // One token per line; tokens are lowercased. Blank lines are ignored.
  static Stoplist load(const std::filesystem::path& path);

  void add(std::string_view token);
  bool contains(std::string_view token) const { return tokens_.contains(token); }
  std::size_t size() const { return tokens_.size(); }

 private:
  StringSet tokens_;
};

MisspellingSet filter_common(const MisspellingSet& variants, const Stoplist& stop);

// Throws UsageError on dimension mismatch, DataError on a zero vector.
double cosine(std::span<const double> u, std::span<const double> v);

// Dense word vectors, L2-normalized at construction.
class EmbeddingModel {
 public:
  // vectors is row-major, vocab.size() x dimension. Rejects duplicate tokens
  // and zero vectors (DataError).
  EmbeddingModel(std::vector<std::string> vocab, std::vector<double> vectors,
                 std::size_t dimension);

  // Word2vec text format: "<vocab_size> <dimension>" header, then
  // "<token> <f1> ... <fD>" per line. Errors carry the line number.
  static EmbeddingModel load(const std::filesystem::path& path);

  std::size_t size() const { return vocab_.size(); }
  std::size_t dimension() const { return dimension_; }
  bool unit_normalized() const { return true; }
  const std::vector<std::string>& vocab() const { return vocab_; }
  std::optional<std::size_t> index_of(std::string_view token) const;
  std::span<const double> vector(std::size_t i) const {
    return {vectors_.data() + i * dimension_, dimension_};
  }

 private:
  std::vector<std::string> vocab_;
  std::vector<double> vectors_;
  std::size_t dimension_;
  StringMap<std::size_t> index_;
};

struct Neighbor {
  std::string token;
  double score = 0.0;
};

// Exact top-k by cosine, excluding term; score descending, then token.
// Empty when term is not in the vocabulary.
std::vector<Neighbor> nearest_neighbors(const EmbeddingModel& model, std::string_view term,
                                        std::size_t k);

struct ExpansionParams {
  std::size_t k = kDefaultNeighborCount;
  double lex_ratio = kDefaultLexRatio;
};

// Breadth-first neighborhood expansion from seed. A neighbor is kept when its
// OSA distance to the seed, divided by the longer length, is at most
// lex_ratio, it is not in the stoplist and it has not been seen before. Kept
// terms form the next frontier. Stops when a round adds nothing or after
// kMaxExpansionRounds rounds.
MisspellingSet expand_misspellings(const EmbeddingModel& model, std::string_view seed,
                                   const ExpansionParams& params, const Stoplist& stop);

}  // namespace lexitag

#endif  // LEXITAG_MISSPELL_GEN_HPP_
