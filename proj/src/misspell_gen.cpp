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

#include "lexitag/misspell_gen.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "io_util.hpp"
#include "lexitag/edit_distance.hpp"
#include "lexitag/unicode.hpp"

namespace lexitag {

// Keyboard ----------------------------------------------------------------

KeyboardGeometry::KeyboardGeometry(std::map<char32_t, KeyPosition> keys, double threshold)
    : keys_(std::move(keys)), threshold_(threshold) {
  if (!(threshold_ > 0.0)) throw UsageError("keyboard threshold must be positive");
  for (char32_t c = U'a'; c <= U'z'; ++c) {
    if (!keys_.contains(c)) {
      throw DataError(std::string("keyboard geometry lacks key '") + static_cast<char>(c) + "'");
    }
  }
  std::set<std::pair<double, double>> coords;
  for (const auto& [ch, pos] : keys_) {
    if (!coords.emplace(pos.row, pos.col).second) {
      throw DataError("keyboard geometry has two keys at the same position");
    }
  }
}

KeyboardGeometry KeyboardGeometry::qwerty(double threshold) {
  static constexpr std::u32string_view kRows[] = {U"qwertyuiop", U"asdfghjkl", U"zxcvbnm"};
  static constexpr double kOffsets[] = {0.0, 0.25, 0.75};
  std::map<char32_t, KeyPosition> keys;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < kRows[r].size(); ++c) {
      keys[kRows[r][c]] = KeyPosition{static_cast<double>(r), static_cast<double>(c) + kOffsets[r]};
    }
  }
  return KeyboardGeometry(std::move(keys), threshold);
}

KeyboardGeometry KeyboardGeometry::load(const std::filesystem::path& path, double threshold) {
  io::LineReader reader(path);
  std::map<char32_t, KeyPosition> keys;
  std::string line;
  while (reader.next(line)) {
    if (line.empty() || line.front() == '#') continue;
    const auto cols = io::split(line, '\t');
    KeyPosition pos;
    const std::u32string ch = unicode::decode(cols[0]);
    if (cols.size() != 3 || ch.size() != 1 || !io::parse_double(cols[1], pos.row) ||
        !io::parse_double(cols[2], pos.col)) {
      throw DataError("expected char<TAB>row<TAB>col", reader.line_number());
    }
    if (!keys.emplace(unicode::to_lower(ch[0]), pos).second) {
      throw DataError("duplicate key", reader.line_number());
    }
  }
  return KeyboardGeometry(std::move(keys), threshold);
}

std::vector<char32_t> KeyboardGeometry::neighbors(char32_t ch) const {
  auto it = keys_.find(ch);
  if (it == keys_.end()) throw UnknownCharacter("no key for character");
  const KeyPosition& from = it->second;
  std::vector<char32_t> out;
  for (const auto& [other, pos] : keys_) {
    if (other == ch) continue;
    const double dist = std::hypot(pos.row - from.row, pos.col - from.col);
    if (dist <= threshold_ + 1e-9) out.push_back(other);
  }
  return out;
}

MisspellingSet generate_keyboard_misspellings(std::string_view term,
                                              const KeyboardGeometry& geometry) {
  MisspellingSet set{std::string(term)};
  const std::u32string w = unicode::decode(term);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!geometry.contains(w[i])) continue;
    for (char32_t c : geometry.neighbors(w[i])) {
      std::u32string v = w;
      v[i] = c;
      set.add(Variant{unicode::encode(v), Generator::kKeyboard, i, 0.0, 0});
    }
  }
  return set;
}

// Stoplist ----------------------------------------------------------------

Stoplist Stoplist::load(const std::filesystem::path& path) {
  Stoplist stop;
  io::LineReader reader(path);
  std::string line;
  while (reader.next(line)) {
    std::string_view v = line;
    while (!v.empty() && unicode::is_space(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    while (!v.empty() && unicode::is_space(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    if (!v.empty()) stop.add(v);
  }
  return stop;
}

void Stoplist::add(std::string_view token) {
  tokens_.insert(unicode::to_lower(unicode::nfc(token)));
}

MisspellingSet filter_common(const MisspellingSet& variants, const Stoplist& stop) {
  MisspellingSet out{variants.seed()};
  for (const auto& v : variants.variants()) {
    if (!stop.contains(v.text)) out.add(v);
  }
  return out;
}

// Embeddings --------------------------------------------------------------

double cosine(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) throw UsageError("cosine of vectors with different dimensions");
  double dot = 0.0, nu = 0.0, nv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    nu += u[i] * u[i];
    nv += v[i] * v[i];
  }
  if (nu == 0.0 || nv == 0.0) throw DataError("cosine of a zero vector");
  return std::clamp(dot / (std::sqrt(nu) * std::sqrt(nv)), -1.0, 1.0);
}

EmbeddingModel::EmbeddingModel(std::vector<std::string> vocab, std::vector<double> vectors,
                               std::size_t dimension)
    : vocab_(std::move(vocab)), vectors_(std::move(vectors)), dimension_(dimension) {
  if (dimension_ == 0) throw DataError("embedding dimension must be positive");
  if (vectors_.size() != vocab_.size() * dimension_) {
    throw DataError("embedding matrix does not match vocabulary size");
  }
  for (std::size_t i = 0; i < vocab_.size(); ++i) {
    if (!index_.emplace(vocab_[i], i).second) {
      throw DataError("duplicate embedding token '" + vocab_[i] + "'");
    }
    double* row = vectors_.data() + i * dimension_;
    double norm = 0.0;
    for (std::size_t j = 0; j < dimension_; ++j) norm += row[j] * row[j];
    if (norm == 0.0) throw DataError("zero vector for '" + vocab_[i] + "'");
    norm = std::sqrt(norm);
    for (std::size_t j = 0; j < dimension_; ++j) row[j] /= norm;
  }
}

EmbeddingModel EmbeddingModel::load(const std::filesystem::path& path) {
  io::LineReader reader(path);
  std::string line;
  if (!reader.next(line)) throw DataError("empty embedding file", 1);
  const auto header = io::split(line, ' ');
  std::uint64_t expected = 0, dim = 0;
  if (header.size() != 2 || !io::parse_u64(header[0], expected) || !io::parse_u64(header[1], dim) ||
      dim == 0) {
    throw DataError("expected '<vocab_size> <dimension>' header", 1);
  }

  std::vector<std::string> vocab;
  std::vector<double> vectors;
  vocab.reserve(expected);
  vectors.reserve(expected * dim);
  StringSet seen;
  while (reader.next(line)) {
    std::string_view view = line;
    while (!view.empty() && view.back() == ' ') view.remove_suffix(1);
    if (view.empty()) continue;
    const auto fields = io::split(view, ' ');
    if (fields.size() != dim + 1 || fields[0].empty()) {
      throw DataError("expected token and " + std::to_string(dim) + " values",
                      reader.line_number());
    }
    if (!seen.emplace(fields[0]).second) {
      throw DataError("duplicate token '" + std::string(fields[0]) + "'", reader.line_number());
    }
    double norm = 0.0;
    for (std::size_t j = 1; j <= dim; ++j) {
      double x = 0.0;
      if (!io::parse_double(fields[j], x) || !std::isfinite(x)) {
        throw DataError("bad float '" + std::string(fields[j]) + "'", reader.line_number());
      }
      vectors.push_back(x);
      norm += x * x;
    }
    if (norm == 0.0) throw DataError("zero vector", reader.line_number());
    vocab.emplace_back(fields[0]);
  }
  if (vocab.size() != expected) {
    throw DataError("header declares " + std::to_string(expected) + " tokens, found " +
                    std::to_string(vocab.size()),
                    1);
  }
  return EmbeddingModel(std::move(vocab), std::move(vectors), dim);
}

std::optional<std::size_t> EmbeddingModel::index_of(std::string_view token) const {
  auto it = index_.find(token);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Neighbor> nearest_neighbors(const EmbeddingModel& model, std::string_view term,
                                        std::size_t k) {
  std::vector<Neighbor> out;
  const auto self = model.index_of(term);
  if (!self || k == 0) return out;

  const auto q = model.vector(*self);
  std::vector<std::pair<double, std::size_t>> scored;
  scored.reserve(model.size());
  for (std::size_t i = 0; i < model.size(); ++i) {
    if (i == *self) continue;
    const auto v = model.vector(i);
    double dot = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j) dot += q[j] * v[j];
    scored.emplace_back(std::clamp(dot, -1.0, 1.0), i);
  }
  const auto& vocab = model.vocab();
  const auto order = [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return vocab[a.second] < vocab[b.second];
  };
  const std::size_t n = std::min(k, scored.size());
  std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(n), scored.end(),
                    order);
  for (std::size_t i = 0; i < n; ++i) out.push_back({vocab[scored[i].second], scored[i].first});
  return out;
}

MisspellingSet expand_misspellings(const EmbeddingModel& model, std::string_view seed,
                                   const ExpansionParams& params, const Stoplist& stop) {
  if (params.k == 0) throw UsageError("k must be at least 1");
  if (!(params.lex_ratio > 0.0 && params.lex_ratio < 1.0)) {
    throw UsageError("lexical ratio must be in (0, 1)");
  }
  MisspellingSet out{std::string(seed)};
  if (!model.index_of(seed)) return out;

  const std::u32string seed_cps = unicode::decode(seed);
  StringSet seen{std::string(seed)};
  std::vector<std::string> frontier{std::string(seed)};

  for (int round = 1; round <= kMaxExpansionRounds && !frontier.empty(); ++round) {
    std::vector<std::string> next;
    for (const auto& term : frontier) {
      for (auto& nb : nearest_neighbors(model, term, params.k)) {
        if (!seen.insert(nb.token).second) continue;
        if (stop.contains(nb.token)) continue;
        const std::u32string cand = unicode::decode(nb.token);
        const double longest = static_cast<double>(std::max(cand.size(), seed_cps.size()));
        const double ratio = static_cast<double>(osa_distance(cand, seed_cps)) / longest;
        if (ratio > params.lex_ratio) continue;
        if (out.add(Variant{nb.token, Generator::kEmbedding, 0, nb.score, round})) {
          next.push_back(std::move(nb.token));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace lexitag
