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

#include "lexitag/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <random>

#include "io_util.hpp"
#include "lexitag/errors.hpp"
#include "lexitag/normalize.hpp"
#include "lexitag/unicode.hpp"

namespace lexitag {
namespace {

// mt19937_64 is fully specified by the standard; the helpers below avoid the
// implementation-defined std distributions so output is stable everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }
  double normal() {
    const double u1 = 1.0 - unit();
    const double u2 = unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }
  char letter() { return static_cast<char>('a' + below(26)); }

 private:
  std::mt19937_64 engine_;
};

bool all_letters(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c >= 'a' && c <= 'z'; });
}

bool eligible_token(std::string_view t) { return t.size() >= 4 && all_letters(t); }

std::string perturb(const std::string& w, Rng& rng, std::string& edit) {
  while (true) {
    std::string v = w;
    switch (rng.below(4)) {
      case 0:
        v.erase(rng.below(v.size()), 1);
        edit = "delete";
        return v;
      case 1:
        v.insert(v.begin() + static_cast<std::ptrdiff_t>(rng.below(v.size() + 1)), rng.letter());
        edit = "insert";
        return v;
      case 2: {
        const std::size_t p = rng.below(v.size());
        char c = rng.letter();
        while (c == v[p]) c = rng.letter();
        v[p] = c;
        edit = "substitute";
        return v;
      }
      default: {
        std::vector<std::size_t> spots;
        for (std::size_t i = 0; i + 1 < v.size(); ++i) {
          if (v[i] != v[i + 1]) spots.push_back(i);
        }
        if (spots.empty()) continue;
        const std::size_t p = spots[rng.below(spots.size())];
        std::swap(v[p], v[p + 1]);
        edit = "transpose";
        return v;
      }
    }
  }
}

std::string capitalize(std::string s, Rng& rng) {
  if (rng.chance(0.5)) {
    s[0] = static_cast<char>(s[0] - 'a' + 'A');
  } else {
    for (char& c : s) {
      if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    }
  }
  return s;
}

}  // namespace

SynthCorpus synthesize_corpus(const Lexicon& lexicon, const SynthConfig& config) {
  if (lexicon.empty()) throw UsageError("synthetic corpus needs a non-empty lexicon");
  if (!(config.perturb_rate >= 0.0 && config.perturb_rate <= 1.0)) {
    throw UsageError("perturbation rate must be in [0, 1]");
  }
  Rng rng(config.seed);
  SynthCorpus out;

  // Only plain lowercase-ASCII surfaces are planted, so byte offsets are
  // code point offsets and every edit keeps the token count.
  std::vector<const LexiconEntry*> plantable, perturbable;
  StringSet lexicon_tokens;
  for (const auto& e : lexicon.entries()) {
    const auto toks = io::split(e.surface, ' ');
    for (auto t : toks) lexicon_tokens.emplace(t);
    if (!std::all_of(toks.begin(), toks.end(), [](auto t) { return all_letters(t); })) continue;
    plantable.push_back(&e);
    if (std::any_of(toks.begin(), toks.end(), [](auto t) { return eligible_token(t); })) {
      perturbable.push_back(&e);
    }
  }
  if (plantable.empty()) throw UsageError("lexicon has no plain-letter surfaces to plant");

  for (const auto& t : lexicon_tokens) out.dictionary.add(t, 10000);
  std::vector<std::string> fillers;
  StringSet filler_set;
  while (fillers.size() < config.filler_vocabulary) {
    std::string w(3 + rng.below(7), 'a');
    for (char& c : w) c = rng.letter();
    if (lexicon_tokens.contains(w) || !filler_set.insert(w).second) continue;
    fillers.push_back(w);
    out.dictionary.add(w, 1 + rng.below(500));
  }
  if (fillers.empty()) throw UsageError("filler vocabulary must not be empty");

  std::map<std::string, std::string> misspelled_from;  // written form -> lexicon token
  char id_buf[32];
  for (std::size_t d = 0; d < config.documents; ++d) {
    std::snprintf(id_buf, sizeof id_buf, "d%06zu", d + 1);
    const std::string doc_id = id_buf;

    const std::size_t n_fill = 6 + rng.below(9);
    const std::uint64_t roll = rng.below(10);
    const std::size_t n_mentions = roll < 2 ? 0 : (roll < 7 ? 1 : 2);
    std::vector<std::size_t> slots;
    while (slots.size() < n_mentions) {
      const std::size_t s = 1 + rng.below(n_fill - 1);
      if (std::find(slots.begin(), slots.end(), s) == slots.end()) slots.push_back(s);
    }
    std::sort(slots.begin(), slots.end());

    std::string text;
    std::vector<PlantedMention> doc_mentions;
    const auto put = [&](const std::string& word) {
      if (!text.empty()) text.push_back(' ');
      text += word;
    };
    std::size_t next_slot = 0;
    for (std::size_t f = 0; f < n_fill; ++f) {
      if (next_slot < slots.size() && slots[next_slot] == f) {
        ++next_slot;
        PlantedMention m;
        m.doc_id = doc_id;
        m.perturbed = !perturbable.empty() && rng.chance(config.perturb_rate);
        const auto& pool = m.perturbed ? perturbable : plantable;
        const LexiconEntry& entry = *pool[rng.below(pool.size())];
        m.surface = entry.surface;
        m.term_id = entry.term_id;
        m.edit = "none";

        std::vector<std::string> toks;
        for (auto t : io::split(entry.surface, ' ')) toks.emplace_back(t);
        m.token_count = toks.size();
        if (m.perturbed) {
          std::vector<std::size_t> eligible;
          for (std::size_t i = 0; i < toks.size(); ++i) {
            if (eligible_token(toks[i])) eligible.push_back(i);
          }
          while (true) {
            const std::size_t ti = eligible[rng.below(eligible.size())];
            std::string edit;
            std::string v = perturb(toks[ti], rng, edit);
            if (out.dictionary.contains(v)) continue;
            std::vector<std::string> trial = toks;
            trial[ti] = v;
            std::string phrase;
            for (const auto& t : trial) phrase += (phrase.empty() ? "" : " ") + t;
            if (lexicon.find(phrase) != nullptr) continue;
            misspelled_from.emplace(v, toks[ti]);
            toks = std::move(trial);
            m.edit = edit;
            break;
          }
        }
        std::string written;
        for (const auto& t : toks) written += (written.empty() ? "" : " ") + t;
        m.written = written;
        if (rng.chance(0.25)) written = capitalize(written, rng);
        if (toks.size() == 1 && rng.chance(0.1)) written = "#" + written;

        if (!text.empty()) text.push_back(' ');
        m.start = text.size() + (written[0] == '#' ? 1 : 0);
        text += written;
        m.end = text.size();
        if (rng.chance(0.2)) text += rng.chance(0.5) ? "!!" : ",";
        doc_mentions.push_back(std::move(m));
      }
      put(fillers[rng.below(fillers.size())]);
      if (rng.chance(0.05)) put("@user" + std::to_string(rng.below(1000)));
      if (rng.chance(0.03)) put("http://t.co/" + fillers[rng.below(fillers.size())]);
    }

    const std::vector<TokenSpan> spans = normalize(text);
    for (auto& m : doc_mentions) {
      auto it = std::find_if(spans.begin(), spans.end(),
                             [&](const TokenSpan& s) { return s.start == m.start; });
      if (it == spans.end()) throw std::logic_error("planted mention lost in normalization");
      m.token_index = static_cast<std::size_t>(it - spans.begin());
      out.mentions.push_back(std::move(m));
    }
    out.documents.push_back(Document{doc_id, std::move(text)});
  }

  // Embeddings: misspellings sit next to the token they misspell.
  const std::size_t dim = config.embedding_dimension;
  std::map<std::string, std::vector<double>> vectors;
  const auto random_vector = [&] {
    std::vector<double> v(dim);
    for (double& x : v) x = rng.normal();
    return v;
  };
  std::vector<std::string> sorted_tokens(lexicon_tokens.begin(), lexicon_tokens.end());
  std::sort(sorted_tokens.begin(), sorted_tokens.end());
  for (const auto& t : sorted_tokens) vectors.emplace(t, random_vector());
  for (const auto& [written, source] : misspelled_from) {
    std::vector<double> v = vectors.at(source);
    for (double& x : v) x += 0.05 * rng.normal();
    vectors.emplace(written, std::move(v));
  }
  for (const auto& f : fillers) vectors.emplace(f, random_vector());
  out.embedding_dimension = dim;
  for (auto& [token, v] : vectors) {
    out.embedding_vocab.push_back(token);
    out.embedding_vectors.insert(out.embedding_vectors.end(), v.begin(), v.end());
  }
  return out;
}

void write_corpus(const std::vector<Document>& docs, const std::filesystem::path& path) {
  io::AtomicWriter writer(path);
  for (const auto& d : docs) writer.stream() << d.doc_id << '\t' << d.text << '\n';
  writer.commit();
}

void write_truth(const std::vector<PlantedMention>& mentions, const std::filesystem::path& path) {
  io::AtomicWriter writer(path);
  auto& out = writer.stream();
  for (const auto& m : mentions) {
    out << m.doc_id << '\t' << m.token_index << '\t' << m.token_count << '\t' << m.start << '\t'
        << m.end << '\t' << m.surface << '\t' << m.term_id << '\t' << m.written << '\t'
        << (m.perturbed ? 1 : 0) << '\t' << m.edit << '\n';
  }
  writer.commit();
}

std::vector<PlantedMention> load_truth(const std::filesystem::path& path) {
  std::vector<PlantedMention> out;
  io::LineReader reader(path);
  std::string line;
  while (reader.next(line)) {
    if (line.empty()) continue;
    const auto c = io::split(line, '\t');
    PlantedMention m;
    std::uint64_t ti = 0, tc = 0, s = 0, e = 0;
    if (c.size() != 10 || !io::parse_u64(c[1], ti) || !io::parse_u64(c[2], tc) ||
        !io::parse_u64(c[3], s) || !io::parse_u64(c[4], e)) {
      throw DataError("malformed truth line", reader.line_number());
    }
    m.doc_id = c[0];
    m.token_index = ti;
    m.token_count = tc;
    m.start = s;
    m.end = e;
    m.surface = c[5];
    m.term_id = c[6];
    m.written = c[7];
    m.perturbed = c[8] == "1";
    m.edit = c[9];
    out.push_back(std::move(m));
  }
  return out;
}

void write_embeddings(const SynthCorpus& corpus, const std::filesystem::path& path) {
  io::AtomicWriter writer(path);
  auto& out = writer.stream();
  const std::size_t dim = corpus.embedding_dimension;
  out << corpus.embedding_vocab.size() << ' ' << dim << '\n';
  char buf[32];
  for (std::size_t i = 0; i < corpus.embedding_vocab.size(); ++i) {
    out << corpus.embedding_vocab[i];
    for (std::size_t j = 0; j < dim; ++j) {
      std::snprintf(buf, sizeof buf, " %.6f", corpus.embedding_vectors[i * dim + j]);
      out << buf;
    }
    out << '\n';
  }
  writer.commit();
}

}  // namespace lexitag
