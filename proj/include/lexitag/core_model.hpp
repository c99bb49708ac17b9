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

#ifndef LEXITAG_CORE_MODEL_HPP_
#define LEXITAG_CORE_MODEL_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace lexitag {

// Heterogeneous lookup for string-keyed hash containers.
struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};
template <typename V>
using StringMap = std::unordered_map<std::string, V, StringHash, std::equal_to<>>;
using StringSet = std::unordered_set<std::string, StringHash, std::equal_to<>>;

enum class TermSource { kBase, kKeyboard, kEmbedding };

enum class MatchMethod { kBase, kKeyboard, kEmbedding, kSymspellCorrected };

std::string_view to_string(TermSource source);
std::string_view to_string(MatchMethod method);
std::optional<TermSource> parse_term_source(std::string_view s);
std::optional<MatchMethod> parse_match_method(std::string_view s);
MatchMethod method_for(TermSource source);

// Lexicon -----------------------------------------------------------------

inline constexpr std::size_t kMaxPhraseTokens = 5;

struct LexiconEntry {
  std::string term_id;
  std::string surface;
  TermSource source = TermSource::kBase;

  bool operator==(const LexiconEntry&) const = default;
};

// Term dictionary keyed by normalized surface. Surfaces are run through the
// tweet normalizer on insertion and stored as space-joined tokens, so lexicon
// keys and document tokens always agree. The first entry for a surface wins.
class Lexicon {
 public:
  enum class AddResult { kAdded, kDuplicate, kRejected };

  // Rejected when term_id is empty or the surface normalizes to zero or
  // more than kMaxPhraseTokens tokens.
  AddResult add(std::string term_id, std::string_view raw_surface,
                TermSource source = TermSource::kBase);

  // Reads a lexicon file and adds its entries. Two layouts are accepted:
  //   term_id<TAB>surface
  //   seed<TAB>variant<TAB>generator<TAB>metadata   (generated misspellings)
  // '#' comments and blank lines are ignored. Throws DataError on structural
  // problems, IoError when the file cannot be read.
  void load(const std::filesystem::path& path);
  static Lexicon from_file(const std::filesystem::path& path);

  // term_id<TAB>surface, entry order. Generated entries keep their source
  // through a trailing third column.
  void save(const std::filesystem::path& path) const;

  const LexiconEntry* find(std::string_view surface) const;
  // True when some multi-token surface starts with this token.
  bool starts_phrase(std::string_view token) const {
    return phrase_heads_.contains(token);
  }

  const std::vector<LexiconEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::size_t max_phrase_len() const { return max_phrase_len_; }
  std::size_t duplicates() const { return duplicates_; }
  std::size_t rejected() const { return rejected_; }

  bool operator==(const Lexicon& other) const { return entries_ == other.entries_; }

 private:
  std::vector<LexiconEntry> entries_;
  StringMap<std::size_t> by_surface_;
  StringSet phrase_heads_;
  std::size_t max_phrase_len_ = 0;
  std::size_t duplicates_ = 0;
  std::size_t rejected_ = 0;
};

// Frequency dictionary ----------------------------------------------------

class FrequencyDictionary {
 public:
  using Entry = std::pair<std::string, std::uint64_t>;

  // Adds count to token. Token must be non-empty, lowercase and free of
  // whitespace (DataError otherwise); count must be positive.
  void add(std::string_view token, std::uint64_t count);
  // Raises token's count to at least count.
  void raise_to(std::string_view token, std::uint64_t count);

  std::uint64_t count(std::string_view token) const;
  bool contains(std::string_view token) const { return counts_.contains(token); }
  std::uint64_t total() const { return total_; }
  std::size_t size() const { return counts_.size(); }
  bool empty() const { return counts_.empty(); }
  const StringMap<std::uint64_t>& counts() const { return counts_; }

  // Descending count, then ascending token.
  std::vector<Entry> sorted() const;

  // "token count" per line. Keys are NFC-normalized and lowercased on load;
  // keys that collide after that are summed.
  static FrequencyDictionary load(const std::filesystem::path& path);
  // Sorted, written to a temporary file and renamed into place.
  void save(const std::filesystem::path& path) const;

  bool operator==(const FrequencyDictionary& other) const {
    return total_ == other.total_ && counts_ == other.counts_;
  }

 private:
  StringMap<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

bool is_valid_dictionary_token(std::string_view token);

// Documents and matches ---------------------------------------------------

struct Document {
  std::string doc_id;
  std::string text;
};

struct TagMatch {
  std::string doc_id;
  std::size_t start = 0;
  std::size_t end = 0;
  std::string matched_text;
  std::string canonical_surface;
  std::string term_id;
  MatchMethod method = MatchMethod::kBase;

  bool operator==(const TagMatch&) const = default;
};

// doc_id, start, end, matched_text, canonical_surface, term_id, method.
std::string format_match(const TagMatch& m);

// Misspellings ------------------------------------------------------------

enum class Generator { kKeyboard, kEmbedding };
std::string_view to_string(Generator g);

struct Variant {
  std::string text;
  Generator generator = Generator::kKeyboard;
  // Keyboard: substituted code point position.
  std::size_t position = 0;
  // Embedding: cosine to the term it was discovered from, and the round.
  double score = 0.0;
  int round = 0;

  std::string metadata() const;
  bool operator==(const Variant&) const = default;
};

// Variants of one seed. Insertion order is kept; texts are unique and never
// equal to the seed.
class MisspellingSet {
 public:
  MisspellingSet() = default;
  explicit MisspellingSet(std::string seed) : seed_(std::move(seed)) {}

  // False if the variant is the seed, empty, not lowercase, or already present.
  bool add(Variant v);
  bool contains(std::string_view text) const { return index_.contains(text); }

  const std::string& seed() const { return seed_; }
  const std::vector<Variant>& variants() const { return variants_; }
  std::size_t size() const { return variants_.size(); }
  bool empty() const { return variants_.empty(); }

  // One line per variant: seed<TAB>variant<TAB>generator<TAB>metadata.
  std::string to_tsv() const;

 private:
  std::string seed_;
  std::vector<Variant> variants_;
  StringSet index_;
};

}  // namespace lexitag

#endif  // LEXITAG_CORE_MODEL_HPP_
