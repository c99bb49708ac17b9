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

#include "lexitag/symspell.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <utility>

#include "lexitag/errors.hpp"
#include "lexitag/normalize.hpp"
#include "lexitag/unicode.hpp"

namespace lexitag {
namespace {

std::uint64_t variant_hash(std::u32string_view s) {
  return std::hash<std::u32string_view>{}(s);
}

// Visits every string obtained by deleting 1..remaining positions of s at
// index >= from. Each position set is visited once; equal strings from
// different position sets are visited more than once.
template <typename Fn>
void for_each_deletion(const std::u32string& s, std::size_t from, Distance remaining,
                       Fn& fn) {
  for (std::size_t i = from; i < s.size(); ++i) {
    std::u32string t = s;
    t.erase(i, 1);
    fn(t);
    if (remaining > 1) for_each_deletion(t, i, remaining - 1, fn);
  }
}

template <typename Fn>
void for_each_deletion(const std::u32string& s, Distance max_deletes, Fn&& fn) {
  if (max_deletes == 0) return;
  for_each_deletion(s, 0, max_deletes, fn);
}

std::vector<std::uint64_t> deletion_hashes(const std::u32string& w, Distance max_deletes) {
  std::vector<std::uint64_t> hashes{variant_hash(w)};
  for_each_deletion(w, max_deletes,
                    [&](const std::u32string& t) { hashes.push_back(variant_hash(t)); });
  std::sort(hashes.begin(), hashes.end());
  hashes.erase(std::unique(hashes.begin(), hashes.end()), hashes.end());
  return hashes;
}

bool better(const Correction& a, const Correction& b) {
  if (a.distance != b.distance) return a.distance < b.distance;
  if (a.frequency != b.frequency) return a.frequency > b.frequency;
  return a.corrected < b.corrected;
}

}  // namespace

std::vector<std::string> generate_deletes(std::string_view term, Distance max_deletes) {
  std::set<std::u32string> seen;
  for_each_deletion(unicode::decode(term), max_deletes,
                    [&](const std::u32string& t) { seen.insert(t); });
  std::vector<std::string> out;
  out.reserve(seen.size());
  for (const auto& s : seen) out.push_back(unicode::encode(s));
  std::sort(out.begin(), out.end());
  return out;
}

DeleteIndex::DeleteIndex(FrequencyDictionary dict, Distance max_distance)
    : dict_(std::move(dict)), max_distance_(max_distance) {
  if (max_distance_ < 1 || max_distance_ > 3) {
    throw UsageError("max distance must be 1, 2 or 3, got " + std::to_string(max_distance_));
  }
  if (dict_.empty()) throw UsageError("cannot index an empty frequency dictionary");

  words_.reserve(dict_.size());
  for (const auto& [token, count] : dict_.counts()) words_.push_back(token);
  std::sort(words_.begin(), words_.end());
  if (words_.size() >= std::numeric_limits<std::uint32_t>::max()) {
    throw UsageError("dictionary too large");
  }

  std::vector<std::pair<std::uint64_t, std::uint32_t>> pairs;
  pairs.reserve(words_.size() * (max_distance_ == 1 ? 10 : 40));
  word_lengths_.reserve(words_.size());
  for (std::uint32_t id = 0; id < words_.size(); ++id) {
    const std::u32string w = unicode::decode(words_[id]);
    word_lengths_.push_back(static_cast<std::uint32_t>(w.size()));
    for (std::uint64_t h : deletion_hashes(w, max_distance_)) pairs.emplace_back(h, id);
  }
  std::sort(pairs.begin(), pairs.end());
  if (pairs.size() >= std::numeric_limits<std::uint32_t>::max()) {
    throw UsageError("delete index too large");
  }

  ids_.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i == 0 || pairs[i].first != pairs[i - 1].first) {
      keys_.push_back(pairs[i].first);
      offsets_.push_back(static_cast<std::uint32_t>(i));
    }
    ids_.push_back(pairs[i].second);
  }
  offsets_.push_back(static_cast<std::uint32_t>(ids_.size()));
}

const std::uint32_t* DeleteIndex::postings(std::uint64_t key, std::size_t& count) const {
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key) {
    count = 0;
    return nullptr;
  }
  const auto k = static_cast<std::size_t>(it - keys_.begin());
  count = offsets_[k + 1] - offsets_[k];
  return ids_.data() + offsets_[k];
}

std::vector<std::string> DeleteIndex::originals_for(std::string_view variant) const {
  const std::u32string v = unicode::decode(variant);
  std::size_t n = 0;
  const std::uint32_t* ids = postings(variant_hash(v), n);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& word = words_[ids[i]];
    if (word_lengths_[ids[i]] < v.size() || word_lengths_[ids[i]] - v.size() > max_distance_) {
      continue;
    }
    // Drop hash collisions: v must be a subsequence of the word.
    const std::u32string w = unicode::decode(word);
    std::size_t j = 0;
    for (char32_t c : w) {
      if (j < v.size() && v[j] == c) ++j;
    }
    if (j == v.size()) out.push_back(word);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Correction> DeleteIndex::lookup(std::string_view query, Distance d,
                                            LookupMode mode) const {
  if (d > max_distance_) {
    throw UsageError("lookup distance " + std::to_string(d) + " exceeds index max distance " +
                     std::to_string(max_distance_));
  }
  const std::u32string q = unicode::decode(query);

  std::vector<std::uint32_t> candidates;
  for (std::uint64_t h : deletion_hashes(q, d)) {
    std::size_t n = 0;
    const std::uint32_t* ids = postings(h, n);
    candidates.insert(candidates.end(), ids, ids + n);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<Correction> out;
  for (std::uint32_t id : candidates) {
    const std::size_t len = word_lengths_[id];
    if ((len > q.size() ? len - q.size() : q.size() - len) > d) continue;
    const std::string& word = words_[id];
    auto dist = osa_distance_bounded(q, unicode::decode(word), d);
    if (!dist) continue;
    out.push_back(Correction{std::string(query), word, *dist, dict_.count(word)});
  }
  std::sort(out.begin(), out.end(), better);
  if (mode == LookupMode::kClosest && !out.empty()) {
    const Distance best = out.front().distance;
    out.erase(std::find_if(out.begin(), out.end(),
                           [best](const Correction& c) { return c.distance != best; }),
              out.end());
  }
  return out;
}

bool is_correction_exempt(std::string_view token) {
  const std::u32string cps = unicode::decode(token);
  if (cps.size() < 3) return true;
  return std::any_of(cps.begin(), cps.end(), [](char32_t c) { return unicode::is_digit(c); });
}

std::string DeleteIndex::correct_token(std::string_view token) const {
  if (dict_.contains(token) || is_correction_exempt(token)) return std::string(token);
  auto hits = lookup(token, max_distance_, LookupMode::kClosest);
  if (hits.empty()) return std::string(token);
  return std::move(hits.front().corrected);
}

std::string DeleteIndex::correct_text(std::string_view text) const {
  std::string out;
  for (const auto& span : normalize(text)) {
    if (!out.empty()) out.push_back(' ');
    out += correct_token(span.token);
  }
  return out;
}

// Norvig-style baseline ---------------------------------------------------

namespace {

template <typename Fn>
void for_each_edit1(const std::u32string& w, std::u32string_view alphabet, Fn&& fn) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::u32string t = w;
    t.erase(i, 1);
    fn(t);
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::u32string t = w;
    std::swap(t[i], t[i + 1]);
    fn(t);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (char32_t c : alphabet) {
      if (c == w[i]) continue;
      std::u32string t = w;
      t[i] = c;
      fn(t);
    }
  }
  for (std::size_t i = 0; i <= n; ++i) {
    for (char32_t c : alphabet) {
      std::u32string t = w;
      t.insert(t.begin() + static_cast<std::ptrdiff_t>(i), c);
      fn(t);
    }
  }
}

}  // namespace

std::vector<std::string> norvig_candidates(std::string_view term, std::u32string_view alphabet) {
  const std::u32string w = unicode::decode(term);
  std::set<std::u32string> seen;
  for_each_edit1(w, alphabet, [&](const std::u32string& t) {
    if (t != w) seen.insert(t);
  });
  std::vector<std::string> out;
  out.reserve(seen.size());
  for (const auto& s : seen) out.push_back(unicode::encode(s));
  std::sort(out.begin(), out.end());
  return out;
}

std::string norvig_correct(const FrequencyDictionary& dict, std::string_view token,
                           std::u32string_view alphabet) {
  if (dict.contains(token)) return std::string(token);

  std::string best;
  std::uint64_t best_count = 0;
  const auto consider = [&](const std::u32string& cand) {
    const std::string s = unicode::encode(cand);
    const std::uint64_t c = dict.count(s);
    if (c == 0) return;
    if (c > best_count || (c == best_count && s < best)) {
      best = s;
      best_count = c;
    }
  };

  const std::u32string w = unicode::decode(token);
  std::vector<std::u32string> edits1;
  for_each_edit1(w, alphabet, [&](const std::u32string& t) {
    consider(t);
    edits1.push_back(t);
  });
  if (best_count > 0) return best;

  for (const auto& e : edits1) {
    for_each_edit1(e, alphabet, consider);
  }
  return best_count > 0 ? best : std::string(token);
}

}  // namespace lexitag
