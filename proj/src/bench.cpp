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

#include "lexitag/bench.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

#include "lexitag/corpus_io.hpp"
#include "lexitag/errors.hpp"
#include "lexitag/normalize.hpp"
#include "lexitag/symspell.hpp"
#include "lexitag/tagger.hpp"

namespace lexitag {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

void require_file(const std::optional<std::filesystem::path>& p, const char* flag,
                  BenchMethod method) {
  if (!p) {
    throw UsageError(std::string("method ") + std::string(to_string(method)) + " needs " + flag);
  }
  if (!std::filesystem::exists(*p)) throw UsageError("missing input: " + p->string());
}

Lexicon load_lexicons(const std::vector<std::filesystem::path>& paths) {
  Lexicon lex;
  for (const auto& p : paths) lex.load(p);
  return lex;
}

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

// Runs pipeline over docs[0, limit) and returns the number of matches.
using Pipeline = std::function<std::uint64_t(const std::vector<Document>&, std::size_t)>;

std::uint64_t tag_all(const Lexicon& lex, const std::vector<Document>& docs, std::size_t limit) {
  std::uint64_t n = 0;
  for (std::size_t i = 0; i < limit; ++i) n += tag_document(lex, docs[i]).size();
  return n;
}

}  // namespace

std::string_view to_string(BenchMethod m) {
  switch (m) {
    case BenchMethod::kBase: return "base";
    case BenchMethod::kKeyboard: return "keyboard";
    case BenchMethod::kEmbedding: return "embedding";
    case BenchMethod::kSymspell: return "symspell";
    case BenchMethod::kNorvig: return "norvig";
  }
  return "base";
}

std::optional<BenchMethod> parse_bench_method(std::string_view s) {
  for (auto m : {BenchMethod::kBase, BenchMethod::kKeyboard, BenchMethod::kEmbedding,
                 BenchMethod::kSymspell, BenchMethod::kNorvig}) {
    if (s == to_string(m)) return m;
  }
  return std::nullopt;
}

std::vector<BenchRow> run_bench(const BenchInputs& in) {
  if (in.methods.empty()) throw UsageError("no bench methods requested");
  if (in.lexicons.empty()) throw UsageError("bench needs --lexicon");
  if (!std::filesystem::exists(in.corpus)) throw UsageError("missing input: " + in.corpus.string());
  for (const auto& p : in.lexicons) {
    if (!std::filesystem::exists(p)) throw UsageError("missing input: " + p.string());
  }
  for (auto m : in.methods) {
    if (m == BenchMethod::kSymspell || m == BenchMethod::kNorvig) {
      require_file(in.freq_dict, "--freq", m);
    }
    if (m == BenchMethod::kEmbedding) require_file(in.embeddings, "--embeddings", m);
  }

  std::vector<Document> docs;
  {
    CorpusReader reader(in.corpus);
    Document d;
    while (reader.next(d)) docs.push_back(d);
  }
  const Stoplist stop = in.stoplist ? Stoplist::load(*in.stoplist) : Stoplist{};
  const Lexicon base = load_lexicons(in.lexicons);
  std::optional<FrequencyDictionary> dict;
  if (in.freq_dict) dict = FrequencyDictionary::load(*in.freq_dict);
  const std::size_t warmup = std::min(in.warmup_documents, docs.size());

  std::vector<BenchRow> rows;
  for (BenchMethod method : in.methods) {
    BenchRow row;
    row.method = method;
    row.documents = docs.size();
    Lexicon variants;
    Pipeline pipeline;

    switch (method) {
      case BenchMethod::kBase: {
        const auto t0 = Clock::now();
        const Lexicon fresh = load_lexicons(in.lexicons);
        if (fresh.empty()) throw DataError("lexicon is empty");
        row.generation_ms = elapsed_ms(t0);
        pipeline = [&](const auto& d, std::size_t n) { return tag_all(base, d, n); };
        break;
      }
      case BenchMethod::kKeyboard: {
        const auto t0 = Clock::now();
        const KeyboardGeometry geom = KeyboardGeometry::qwerty(in.key_threshold);
        for (const auto& e : base.entries()) {
          const MisspellingSet set =
              filter_common(generate_keyboard_misspellings(e.surface, geom), stop);
          for (const auto& v : set.variants()) {
            variants.add(e.term_id, v.text, TermSource::kKeyboard);
          }
        }
        row.generation_ms = elapsed_ms(t0);
        pipeline = [&](const auto& d, std::size_t n) { return tag_all(variants, d, n); };
        break;
      }
      case BenchMethod::kEmbedding: {
        const EmbeddingModel model = EmbeddingModel::load(*in.embeddings);
        const auto t0 = Clock::now();
        for (const auto& e : base.entries()) {
          const MisspellingSet set = expand_misspellings(model, e.surface, in.expansion, stop);
          for (const auto& v : set.variants()) {
            variants.add(e.term_id, v.text, TermSource::kEmbedding);
          }
        }
        row.generation_ms = elapsed_ms(t0);
        pipeline = [&](const auto& d, std::size_t n) { return tag_all(variants, d, n); };
        break;
      }
      case BenchMethod::kSymspell:
        pipeline = [&](const auto& d, std::size_t n) {
          const DeleteIndex index(*dict, in.max_distance);
          std::uint64_t matches = 0;
          for (std::size_t i = 0; i < n; ++i) {
            const Document corrected{d[i].doc_id, index.correct_text(d[i].text)};
            matches += tag_document(base, corrected, MatchMethod::kSymspellCorrected).size();
          }
          return matches;
        };
        break;
      case BenchMethod::kNorvig:
        pipeline = [&](const auto& d, std::size_t n) {
          std::uint64_t matches = 0;
          for (std::size_t i = 0; i < n; ++i) {
            std::string text;
            for (const auto& span : normalize(d[i].text)) {
              if (!text.empty()) text.push_back(' ');
              text += norvig_correct(*dict, span.token);
            }
            matches += tag_document(base, Document{d[i].doc_id, text}).size();
          }
          return matches;
        };
        break;
    }

    if (warmup > 0) pipeline(docs, warmup);
    const auto t0 = Clock::now();
    row.matches = pipeline(docs, docs.size());
    row.tagging_ms = elapsed_ms(t0);
    row.avg_ms_per_unit =
        docs.empty() ? 0.0 : row.tagging_ms / static_cast<double>(docs.size()) * kBenchDocumentUnit;
    rows.push_back(row);
  }
  return rows;
}

Table bench_table(const std::vector<BenchRow>& rows) {
  Table t{{"method", "generation_time_ms", "total_tagging_time_ms",
           "avg_tagging_time_ms_per_600000_docs"},
          {}};
  for (const auto& r : rows) {
    t.rows.push_back({std::string(to_string(r.method)),
                      r.generation_ms ? format_ms(*r.generation_ms) : "NA", format_ms(r.tagging_ms),
                      format_ms(r.avg_ms_per_unit)});
  }
  return t;
}

}  // namespace lexitag
