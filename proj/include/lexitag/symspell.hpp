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

#ifndef LEXITAG_SYMSPELL_HPP_
#define LEXITAG_SYMSPELL_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lexitag/core_model.hpp"
#include "lexitag/edit_distance.hpp"

namespace lexitag {

inline constexpr Distance kDefaultMaxDistance = 2;
inline constexpr std::u32string_view kLatinAlphabet = U"abcdefghijklmnopqrstuvwxyz";

// All distinct strings reachable from term by deleting 1..max_deletes code
// points, sorted. The term itself is not included.
std::vector<std::string> generate_deletes(std::string_view term, Distance max_deletes);

struct Correction {
  std::string original;
  std::string corrected;
  Distance distance = 0;
  std::uint64_t frequency = 0;

  bool operator==(const Correction&) const = default;
};

enum class LookupMode { kClosest, kAll };

// Symmetric-delete index. Every dictionary token is filed under itself and
// under each of its deletion variants (up to max_distance deletions); a query
// is answered by probing the index with the query's own deletion variants and
// verifying each hit with the OSA distance.
//
// Variants are stored by 64-bit hash in a sorted flat table. A hash collision
// can only add candidates, and verification removes them.
//
// Immutable after construction; all const members are safe to call
// concurrently.
class DeleteIndex {
 public:
  // max_distance must be 1, 2 or 3 and dict non-empty (UsageError).
  DeleteIndex(FrequencyDictionary dict, Distance max_distance);

  Distance max_distance() const { return max_distance_; }
  const FrequencyDictionary& dictionary() const { return dict_; }
  std::size_t token_count() const { return words_.size(); }
  // Distinct variant keys in the table (including the tokens themselves).
  std::size_t key_count() const { return keys_.size(); }

  // Dictionary tokens filed under this variant string, sorted.
  std::vector<std::string> originals_for(std::string_view variant) const;

  // Verified candidates within d of query, ordered by distance, then
  // frequency (descending), then token. kClosest keeps only the smallest
  // distance found. d must not exceed max_distance() (UsageError).
  std::vector<Correction> lookup(std::string_view query, Distance d,
                                 LookupMode mode = LookupMode::kClosest) const;

  // Dictionary tokens, tokens shorter than 3 code points and tokens with a
  // digit pass through unchanged; anything else becomes its closest
  // dictionary token, if there is one within max_distance().
  std::string correct_token(std::string_view token) const;

  // normalize(), correct_token() on each token, join with single spaces.
  std::string correct_text(std::string_view text) const;

 private:
  const std::uint32_t* postings(std::uint64_t key, std::size_t& count) const;

  FrequencyDictionary dict_;
  Distance max_distance_;
  std::vector<std::string> words_;
  std::vector<std::uint32_t> word_lengths_;
  std::vector<std::uint64_t> keys_;
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> ids_;
};

bool is_correction_exempt(std::string_view token);

// Distance-1 edits of term: deletions, adjacent transpositions, replacements
// with a different alphabet letter, insertions. Sorted, deduplicated; the
// term itself is excluded.
std::vector<std::string> norvig_candidates(std::string_view term,
                                           std::u32string_view alphabet = kLatinAlphabet);

// Dictionary hit, else the most frequent distance-1 candidate, else the most
// frequent distance-2 candidate (ties to the smaller token), else unchanged.
std::string norvig_correct(const FrequencyDictionary& dict, std::string_view token,
                           std::u32string_view alphabet = kLatinAlphabet);

}  // namespace lexitag

#endif  // LEXITAG_SYMSPELL_HPP_
