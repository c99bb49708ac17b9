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

#ifndef LEXITAG_ANALYSIS_HPP_
#define LEXITAG_ANALYSIS_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace lexitag {

// Per-surface occurrence counts, e.g. from a matches file.
class TermCounts {
 public:
  void add(const std::string& surface, std::uint64_t count);

  // Accepts a matches TSV (7 columns, canonical surface in the 5th) or a
  // counts TSV (surface<TAB>count).
  static TermCounts load(const std::filesystem::path& path);

  std::uint64_t count(const std::string& surface) const;
  std::uint64_t total() const { return total_; }
  const std::map<std::string, std::uint64_t>& counts() const { return counts_; }

 private:
  std::map<std::string, std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

// Fixed-point percentage rounded half-up: value = scaled / 10^decimals.
struct Percent {
  std::int64_t scaled = 0;
  int decimals = 2;

  double value() const;
  std::string str() const;
  bool operator==(const Percent&) const = default;
};

// part / whole * 100, rounded half-up to `decimals` places. whole must be > 0.
Percent percent_of(std::uint64_t part, std::uint64_t whole, int decimals);

struct FrequencyRow {
  std::string surface;
  std::uint64_t count = 0;
  Percent percent;
};

// Top n surfaces by count (ties by surface), percent of the total.
std::vector<FrequencyRow> term_frequency_table(const TermCounts& counts, std::size_t n);

struct Delta {
  std::uint64_t added_total = 0;
  std::map<std::string, std::uint64_t> added;
};

// Occurrences in `other` beyond those in `base`, per surface.
Delta delta_terms(const TermCounts& base, const TermCounts& other);

struct NamedSet {
  std::string name;
  std::set<std::string> items;
};

// Surfaces from a plain list (one per line), a counts TSV or a matches TSV.
NamedSet load_surface_set(const std::filesystem::path& path, std::string name);

struct OverlapRow {
  std::vector<std::string> names;
  std::size_t intersection = 0;
  std::size_t union_size = 0;
  Percent percent;  // intersection / union, one decimal
};

// Every pair, plus the triple when three sets are given. Sets must be
// non-empty (DataError naming the set).
std::vector<OverlapRow> overlap_report(const std::vector<NamedSet>& sets);

// additional / base * 100, two decimals. base must be > 0 (UsageError).
Percent percentage_increase(std::uint64_t additional, std::uint64_t base);

enum class TableFormat { kTsv, kMarkdown };

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string render(TableFormat format) const;
};

Table frequency_table(const std::vector<FrequencyRow>& rows);
Table delta_table(const Delta& delta);
Table overlap_table(const std::vector<OverlapRow>& rows);

}  // namespace lexitag

#endif  // LEXITAG_ANALYSIS_HPP_
