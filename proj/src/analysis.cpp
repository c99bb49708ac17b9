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

#include "lexitag/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "io_util.hpp"
#include "lexitag/errors.hpp"

namespace lexitag {

void TermCounts::add(const std::string& surface, std::uint64_t count) {
  if (count == 0) return;
  counts_[surface] += count;
  total_ += count;
}

TermCounts TermCounts::load(const std::filesystem::path& path) {
  TermCounts tc;
  io::LineReader reader(path);
  std::string line;
  while (reader.next(line)) {
    if (line.empty() || line.front() == '#') continue;
    const auto cols = io::split(line, '\t');
    if (cols.size() == 7) {
      tc.add(std::string(cols[4]), 1);
    } else if (cols.size() == 2) {
      std::uint64_t n = 0;
      if (!io::parse_u64(cols[1], n)) throw DataError("bad count", reader.line_number());
      tc.add(std::string(cols[0]), n);
    } else {
      throw DataError("expected a matches line or surface<TAB>count", reader.line_number());
    }
  }
  return tc;
}

std::uint64_t TermCounts::count(const std::string& surface) const {
  auto it = counts_.find(surface);
  return it == counts_.end() ? 0 : it->second;
}

double Percent::value() const { return static_cast<double>(scaled) / std::pow(10.0, decimals); }

std::string Percent::str() const {
  std::int64_t unit = 1;
  for (int i = 0; i < decimals; ++i) unit *= 10;
  std::string out = std::to_string(scaled / unit);
  if (decimals > 0) {
    std::string frac = std::to_string(scaled % unit);
    out += '.' + std::string(static_cast<std::size_t>(decimals) - frac.size(), '0') + frac;
  }
  return out;
}

Percent percent_of(std::uint64_t part, std::uint64_t whole, int decimals) {
  if (whole == 0) throw UsageError("percentage of a zero total");
  unsigned __int128 scale = 100;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  const unsigned __int128 num = static_cast<unsigned __int128>(part) * scale;
  const auto rounded = static_cast<std::int64_t>((2 * num + whole) / (2 * static_cast<unsigned __int128>(whole)));
  return Percent{rounded, decimals};
}

std::vector<FrequencyRow> term_frequency_table(const TermCounts& counts, std::size_t n) {
  if (n == 0) throw UsageError("table size must be at least 1");
  std::vector<std::pair<std::string, std::uint64_t>> all(counts.counts().begin(),
                                                         counts.counts().end());
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  all.resize(std::min(n, all.size()));
  std::vector<FrequencyRow> rows;
  for (auto& [surface, count] : all) {
    rows.push_back({surface, count, percent_of(count, counts.total(), 2)});
  }
  return rows;
}

Delta delta_terms(const TermCounts& base, const TermCounts& other) {
  Delta d;
  for (const auto& [surface, count] : other.counts()) {
    const std::uint64_t had = base.count(surface);
    if (count > had) {
      d.added[surface] = count - had;
      d.added_total += count - had;
    }
  }
  return d;
}

NamedSet load_surface_set(const std::filesystem::path& path, std::string name) {
  NamedSet set{std::move(name), {}};
  io::LineReader reader(path);
  std::string line;
  while (reader.next(line)) {
    if (line.empty() || line.front() == '#') continue;
    const auto cols = io::split(line, '\t');
    if (cols.size() == 7) {
      set.items.emplace(cols[4]);
    } else if (cols.size() <= 2) {
      set.items.emplace(cols[0]);
    } else {
      throw DataError("expected a surface, surface<TAB>count or a matches line",
                      reader.line_number());
    }
  }
  return set;
}

namespace {

OverlapRow overlap_of(const std::vector<const NamedSet*>& group) {
  OverlapRow row;
  std::set<std::string> inter = group.front()->items;
  std::set<std::string> uni;
  for (const NamedSet* s : group) {
    row.names.push_back(s->name);
    uni.insert(s->items.begin(), s->items.end());
    std::set<std::string> next;
    std::set_intersection(inter.begin(), inter.end(), s->items.begin(), s->items.end(),
                          std::inserter(next, next.end()));
    inter = std::move(next);
  }
  row.intersection = inter.size();
  row.union_size = uni.size();
  row.percent = percent_of(row.intersection, row.union_size, 1);
  return row;
}

}  // namespace

std::vector<OverlapRow> overlap_report(const std::vector<NamedSet>& sets) {
  if (sets.size() != 2 && sets.size() != 3) throw UsageError("overlap needs 2 or 3 sets");
  for (const auto& s : sets) {
    if (s.items.empty()) throw DataError("set '" + s.name + "' is empty");
  }
  std::vector<OverlapRow> rows;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) rows.push_back(overlap_of({&sets[i], &sets[j]}));
  }
  if (sets.size() == 3) rows.push_back(overlap_of({&sets[0], &sets[1], &sets[2]}));
  return rows;
}

Percent percentage_increase(std::uint64_t additional, std::uint64_t base) {
  if (base == 0) throw UsageError("base count must be positive");
  return percent_of(additional, base, 2);
}

std::string Table::render(TableFormat format) const {
  std::string out;
  const auto line = [&](const std::vector<std::string>& cells) {
    if (format == TableFormat::kTsv) {
      for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "\t" : "") + cells[i];
    } else {
      out += "|";
      for (const auto& c : cells) out += " " + c + " |";
    }
    out += '\n';
  };
  line(header);
  if (format == TableFormat::kMarkdown) {
    out += "|";
    for (std::size_t i = 0; i < header.size(); ++i) out += i == 0 ? " --- |" : " ---: |";
    out += '\n';
  }
  for (const auto& r : rows) line(r);
  return out;
}

Table frequency_table(const std::vector<FrequencyRow>& rows) {
  Table t{{"surface", "count", "percent"}, {}};
  for (const auto& r : rows) t.rows.push_back({r.surface, std::to_string(r.count), r.percent.str()});
  return t;
}

Table delta_table(const Delta& delta) {
  Table t{{"surface", "added"}, {}};
  for (const auto& [surface, n] : delta.added) t.rows.push_back({surface, std::to_string(n)});
  return t;
}

Table overlap_table(const std::vector<OverlapRow>& rows) {
  Table t{{"sets", "intersection", "union", "percent"}, {}};
  for (const auto& r : rows) {
    std::string names;
    for (const auto& n : r.names) names += (names.empty() ? "" : "&") + n;
    t.rows.push_back({names, std::to_string(r.intersection), std::to_string(r.union_size),
                      r.percent.str()});
  }
  return t;
}

}  // namespace lexitag
