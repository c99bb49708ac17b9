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

#include "lexitag/lexitag.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <new>
#include <string>
#include <vector>

#include "io_util.hpp"
#include "lexitag/analysis.hpp"
#include "lexitag/bench.hpp"
#include "lexitag/corpus_io.hpp"
#include "lexitag/edit_distance.hpp"
#include "lexitag/errors.hpp"
#include "lexitag/misspell_gen.hpp"
#include "lexitag/normalize.hpp"
#include "lexitag/symspell.hpp"
#include "lexitag/synth.hpp"
#include "lexitag/tagger.hpp"
#include "lexitag/unicode.hpp"

struct lt_freq_dict {
  lexitag::FrequencyDictionary dict;
};

struct lt_index {
  explicit lt_index(lexitag::DeleteIndex i) : index(std::move(i)) {}
  lexitag::DeleteIndex index;
};

struct lt_corrections {
  std::vector<lexitag::Correction> items;
};

struct lt_lexicon {
  lexitag::Lexicon lex;
};

struct lt_matches {
  std::vector<lexitag::TagMatch> items;
};

struct lt_geometry {
  explicit lt_geometry(lexitag::KeyboardGeometry g) : geom(std::move(g)) {}
  lexitag::KeyboardGeometry geom;
};

struct lt_stoplist {
  lexitag::Stoplist stop;
};

struct lt_embeddings {
  explicit lt_embeddings(lexitag::EmbeddingModel m) : model(std::move(m)) {}
  lexitag::EmbeddingModel model;
};

struct lt_misspellings {
  struct Row {
    std::string seed, variant, generator, metadata;
  };
  std::vector<Row> rows;
};

namespace {

using namespace lexitag;

thread_local std::string g_last_error;

template <typename Fn>
lt_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    g_last_error.clear();
    return LT_OK;
  } catch (const UsageError& e) {
    g_last_error = e.what();
    return LT_ERR_USAGE;
  } catch (const DataError& e) {
    g_last_error = e.what();
    return LT_ERR_DATA;
  } catch (const IoError& e) {
    g_last_error = e.what();
    return LT_ERR_IO;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return LT_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LT_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return LT_ERR_INTERNAL;
  }
}

template <typename... Ptrs>
void require(const Ptrs*... ptrs) {
  if (((ptrs == nullptr) || ...)) throw UsageError("null argument");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

TableFormat table_format(lt_format f) {
  return f == LT_FORMAT_MARKDOWN ? TableFormat::kMarkdown : TableFormat::kTsv;
}

std::optional<MatchMethod> match_method(const char* method) {
  if (method == nullptr) return std::nullopt;
  auto m = parse_match_method(method);
  if (!m) throw UsageError(std::string("unknown method '") + method + "'");
  return m;
}

}  // namespace

extern "C" {

const char* lt_version(void) { return "0.1.0"; }

const char* lt_last_error(void) { return g_last_error.c_str(); }

void lt_string_free(char* s) { std::free(s); }

lt_status lt_normalize(const char* text, char** out) {
  return guarded([&] {
    require(text, out);
    *out = dup_string(normalize_join(text));
  });
}

lt_status lt_osa_distance(const char* a, const char* b, uint32_t* out) {
  return guarded([&] {
    require(a, b, out);
    *out = static_cast<uint32_t>(osa_distance(std::string_view(a), std::string_view(b)));
  });
}

// Frequency dictionaries -------------------------------------------------

lt_status lt_freq_dict_new(lt_freq_dict** out) {
  return guarded([&] {
    require(out);
    *out = new lt_freq_dict{};
  });
}

lt_status lt_freq_dict_load(const char* path, lt_freq_dict** out) {
  return guarded([&] {
    require(path, out);
    *out = new lt_freq_dict{FrequencyDictionary::load(path)};
  });
}

lt_status lt_freq_dict_build(const char* corpus_path, lt_freq_dict** out,
                             uint64_t* skipped_lines) {
  return guarded([&] {
    require(corpus_path, out);
    std::uint64_t skipped = 0;
    *out = new lt_freq_dict{build_freq_dict(corpus_path, &skipped)};
    if (skipped_lines != nullptr) *skipped_lines = skipped;
  });
}

lt_status lt_freq_dict_add(lt_freq_dict* dict, const char* token, uint64_t count) {
  return guarded([&] {
    require(dict, token);
    dict->dict.add(token, count);
  });
}

lt_status lt_freq_dict_merge(const lt_freq_dict* a, const lt_freq_dict* b, lt_freq_dict** out) {
  return guarded([&] {
    require(a, b, out);
    *out = new lt_freq_dict{merge(a->dict, b->dict)};
  });
}

lt_status lt_freq_dict_inject(lt_freq_dict* dict, const char* token, int64_t count) {
  return guarded([&] {
    require(dict, token);
    if (count <= 0) {
      throw DataError(std::string("injected count for '") + token + "' must be positive");
    }
    dict->dict = inject_terms(std::move(dict->dict), {{token, static_cast<std::uint64_t>(count)}});
  });
}

lt_status lt_freq_dict_inject_file(lt_freq_dict* dict, const char* path) {
  return guarded([&] {
    require(dict, path);
    dict->dict = inject_terms(std::move(dict->dict), load_injection_file(path));
  });
}

lt_status lt_freq_dict_save(const lt_freq_dict* dict, const char* path) {
  return guarded([&] {
    require(dict, path);
    dict->dict.save(path);
  });
}

uint64_t lt_freq_dict_count(const lt_freq_dict* dict, const char* token) {
  return dict == nullptr || token == nullptr ? 0 : dict->dict.count(token);
}

uint64_t lt_freq_dict_total(const lt_freq_dict* dict) {
  return dict == nullptr ? 0 : dict->dict.total();
}

size_t lt_freq_dict_size(const lt_freq_dict* dict) {
  return dict == nullptr ? 0 : dict->dict.size();
}

void lt_freq_dict_free(lt_freq_dict* dict) { delete dict; }

// Correction --------------------------------------------------------------

lt_status lt_index_build(const lt_freq_dict* dict, uint32_t max_distance, lt_index** out) {
  return guarded([&] {
    require(dict, out);
    *out = new lt_index(DeleteIndex(dict->dict, max_distance));
  });
}

uint32_t lt_index_max_distance(const lt_index* index) {
  return index == nullptr ? 0 : static_cast<uint32_t>(index->index.max_distance());
}

lt_status lt_index_lookup(const lt_index* index, const char* query, uint32_t distance,
                          lt_lookup_mode mode, lt_corrections** out) {
  return guarded([&] {
    require(index, query, out);
    const LookupMode m = mode == LT_LOOKUP_ALL ? LookupMode::kAll : LookupMode::kClosest;
    *out = new lt_corrections{index->index.lookup(query, distance, m)};
  });
}

size_t lt_corrections_size(const lt_corrections* c) { return c == nullptr ? 0 : c->items.size(); }

lt_status lt_corrections_get(const lt_corrections* c, size_t i, lt_correction* out) {
  return guarded([&] {
    require(c, out);
    if (i >= c->items.size()) throw UsageError("correction index out of range");
    const Correction& item = c->items[i];
    *out = lt_correction{item.original.c_str(), item.corrected.c_str(),
                         static_cast<uint32_t>(item.distance), item.frequency};
  });
}

void lt_corrections_free(lt_corrections* c) { delete c; }

lt_status lt_index_correct_token(const lt_index* index, const char* token, char** out) {
  return guarded([&] {
    require(index, token, out);
    *out = dup_string(index->index.correct_token(token));
  });
}

lt_status lt_index_correct_text(const lt_index* index, const char* text, char** out) {
  return guarded([&] {
    require(index, text, out);
    *out = dup_string(index->index.correct_text(text));
  });
}

lt_status lt_index_correct_corpus(const lt_index* index, const char* corpus_path,
                                  const char* out_path, uint32_t threads, uint64_t* documents,
                                  uint64_t* skipped_lines) {
  return guarded([&] {
    require(index, corpus_path, out_path);
    io::AtomicWriter writer(out_path);
    const CorpusStats stats = correct_corpus(index->index, corpus_path, writer.stream(), threads);
    writer.commit();
    if (documents != nullptr) *documents = stats.documents;
    if (skipped_lines != nullptr) *skipped_lines = stats.skipped_lines;
  });
}

void lt_index_free(lt_index* index) { delete index; }

lt_status lt_norvig_correct(const lt_freq_dict* dict, const char* token, char** out) {
  return guarded([&] {
    require(dict, token, out);
    *out = dup_string(norvig_correct(dict->dict, token));
  });
}

// Lexicons and tagging ----------------------------------------------------

lt_status lt_lexicon_new(lt_lexicon** out) {
  return guarded([&] {
    require(out);
    *out = new lt_lexicon{};
  });
}

lt_status lt_lexicon_load(lt_lexicon* lex, const char* path) {
  return guarded([&] {
    require(lex, path);
    lex->lex.load(path);
  });
}

lt_status lt_lexicon_add(lt_lexicon* lex, const char* term_id, const char* surface,
                         const char* source, int* added) {
  return guarded([&] {
    require(lex, term_id, surface);
    TermSource src = TermSource::kBase;
    if (source != nullptr) {
      auto parsed = parse_term_source(source);
      if (!parsed) throw UsageError(std::string("unknown term source '") + source + "'");
      src = *parsed;
    }
    const auto result = lex->lex.add(term_id, surface, src);
    if (added != nullptr) *added = result == Lexicon::AddResult::kAdded ? 1 : 0;
  });
}

size_t lt_lexicon_size(const lt_lexicon* lex) { return lex == nullptr ? 0 : lex->lex.size(); }

size_t lt_lexicon_max_phrase_len(const lt_lexicon* lex) {
  return lex == nullptr ? 0 : lex->lex.max_phrase_len();
}

size_t lt_lexicon_duplicates(const lt_lexicon* lex) {
  return lex == nullptr ? 0 : lex->lex.duplicates();
}

size_t lt_lexicon_rejected(const lt_lexicon* lex) {
  return lex == nullptr ? 0 : lex->lex.rejected();
}

lt_status lt_lexicon_get(const lt_lexicon* lex, size_t i, lt_lexicon_entry* out) {
  return guarded([&] {
    require(lex, out);
    if (i >= lex->lex.size()) throw UsageError("lexicon index out of range");
    const LexiconEntry& e = lex->lex.entries()[i];
    *out = lt_lexicon_entry{e.term_id.c_str(), e.surface.c_str(), to_string(e.source).data()};
  });
}

lt_status lt_lexicon_save(const lt_lexicon* lex, const char* path) {
  return guarded([&] {
    require(lex, path);
    lex->lex.save(path);
  });
}

void lt_lexicon_free(lt_lexicon* lex) { delete lex; }

lt_status lt_tag_text(const lt_lexicon* lex, const char* doc_id, const char* text,
                      const char* method, lt_matches** out) {
  return guarded([&] {
    require(lex, doc_id, text, out);
    *out = new lt_matches{tag_document(lex->lex, Document{doc_id, text}, match_method(method))};
  });
}

size_t lt_matches_size(const lt_matches* m) { return m == nullptr ? 0 : m->items.size(); }

lt_status lt_matches_get(const lt_matches* m, size_t i, lt_match* out) {
  return guarded([&] {
    require(m, out);
    if (i >= m->items.size()) throw UsageError("match index out of range");
    const TagMatch& t = m->items[i];
    *out = lt_match{t.doc_id.c_str(),         t.start,          t.end,
                    t.matched_text.c_str(),   t.canonical_surface.c_str(),
                    t.term_id.c_str(),        to_string(t.method).data()};
  });
}

void lt_matches_free(lt_matches* m) { delete m; }

lt_status lt_tag_corpus(const lt_lexicon* lex, const char* corpus_path, const char* matches_path,
                        const char* method, uint32_t threads, lt_tag_summary* summary) {
  return guarded([&] {
    require(lex, corpus_path, matches_path);
    TagOptions options;
    options.method = match_method(method);
    options.threads = threads == 0 ? 1 : threads;
    io::AtomicWriter writer(matches_path);
    const TagSummary s = tag_corpus(lex->lex, corpus_path, writer.stream(), options);
    writer.commit();
    if (summary != nullptr) {
      *summary = lt_tag_summary{s.total_matches, s.documents, s.documents_with_match,
                                s.skipped_lines, s.per_surface.size()};
    }
  });
}

// Misspelling generation --------------------------------------------------

lt_status lt_geometry_qwerty(double threshold, lt_geometry** out) {
  return guarded([&] {
    require(out);
    *out = new lt_geometry(KeyboardGeometry::qwerty(threshold));
  });
}

lt_status lt_geometry_load(const char* path, double threshold, lt_geometry** out) {
  return guarded([&] {
    require(path, out);
    *out = new lt_geometry(KeyboardGeometry::load(path, threshold));
  });
}

lt_status lt_geometry_neighbors(const lt_geometry* geom, const char* ch, char** out) {
  return guarded([&] {
    require(geom, ch, out);
    const std::u32string cps = unicode::decode(ch);
    if (cps.size() != 1) throw UsageError("expected a single character");
    const auto nb = geom->geom.neighbors(cps[0]);
    *out = dup_string(unicode::encode(std::u32string(nb.begin(), nb.end())));
  });
}

void lt_geometry_free(lt_geometry* geom) { delete geom; }

lt_status lt_stoplist_new(lt_stoplist** out) {
  return guarded([&] {
    require(out);
    *out = new lt_stoplist{};
  });
}

lt_status lt_stoplist_load(const char* path, lt_stoplist** out) {
  return guarded([&] {
    require(path, out);
    *out = new lt_stoplist{Stoplist::load(path)};
  });
}

lt_status lt_stoplist_add(lt_stoplist* stop, const char* token) {
  return guarded([&] {
    require(stop, token);
    stop->stop.add(token);
  });
}

void lt_stoplist_free(lt_stoplist* stop) { delete stop; }

lt_status lt_embeddings_load(const char* path, lt_embeddings** out) {
  return guarded([&] {
    require(path, out);
    *out = new lt_embeddings(EmbeddingModel::load(path));
  });
}

size_t lt_embeddings_size(const lt_embeddings* emb) {
  return emb == nullptr ? 0 : emb->model.size();
}

size_t lt_embeddings_dimension(const lt_embeddings* emb) {
  return emb == nullptr ? 0 : emb->model.dimension();
}

void lt_embeddings_free(lt_embeddings* emb) { delete emb; }

lt_status lt_misspellings_new(lt_misspellings** out) {
  return guarded([&] {
    require(out);
    *out = new lt_misspellings{};
  });
}

namespace {
void append_set(lt_misspellings* out, const MisspellingSet& set) {
  for (const auto& v : set.variants()) {
    out->rows.push_back(
        {set.seed(), v.text, std::string(to_string(v.generator)), v.metadata()});
  }
}
}  // namespace

lt_status lt_generate_keyboard(const lt_geometry* geom, const char* seed, const lt_stoplist* stop,
                               lt_misspellings* out) {
  return guarded([&] {
    require(geom, seed, out);
    MisspellingSet set = generate_keyboard_misspellings(seed, geom->geom);
    if (stop != nullptr) set = filter_common(set, stop->stop);
    append_set(out, set);
  });
}

lt_status lt_generate_embedding(const lt_embeddings* emb, const char* seed, uint32_t k,
                                double lex_ratio, const lt_stoplist* stop, lt_misspellings* out) {
  return guarded([&] {
    require(emb, seed, out);
    const Stoplist none;
    append_set(out, expand_misspellings(emb->model, seed, ExpansionParams{k, lex_ratio},
                                        stop != nullptr ? stop->stop : none));
  });
}

size_t lt_misspellings_size(const lt_misspellings* m) { return m == nullptr ? 0 : m->rows.size(); }

lt_status lt_misspellings_get(const lt_misspellings* m, size_t i, lt_variant* out) {
  return guarded([&] {
    require(m, out);
    if (i >= m->rows.size()) throw UsageError("variant index out of range");
    const auto& r = m->rows[i];
    *out = lt_variant{r.seed.c_str(), r.variant.c_str(), r.generator.c_str(), r.metadata.c_str()};
  });
}

lt_status lt_misspellings_save(const lt_misspellings* m, const char* path) {
  return guarded([&] {
    require(m, path);
    io::AtomicWriter writer(path);
    for (const auto& r : m->rows) {
      writer.stream() << r.seed << '\t' << r.variant << '\t' << r.generator << '\t' << r.metadata
                      << '\n';
    }
    writer.commit();
  });
}

void lt_misspellings_free(lt_misspellings* m) { delete m; }

// Analysis ----------------------------------------------------------------

lt_status lt_percentage_increase(uint64_t additional, uint64_t base, int64_t* hundredths) {
  return guarded([&] {
    require(hundredths);
    *hundredths = percentage_increase(additional, base).scaled;
  });
}

lt_status lt_analyze_top(const char* counts_path, size_t n, lt_format format, char** table) {
  return guarded([&] {
    require(counts_path, table);
    const TermCounts counts = TermCounts::load(counts_path);
    *table = dup_string(
        frequency_table(term_frequency_table(counts, n)).render(table_format(format)));
  });
}

lt_status lt_analyze_delta(const char* base_path, const char* other_path, lt_format format,
                           uint64_t* added_total, char** table) {
  return guarded([&] {
    require(base_path, other_path, table);
    const Delta d = delta_terms(TermCounts::load(base_path), TermCounts::load(other_path));
    if (added_total != nullptr) *added_total = d.added_total;
    *table = dup_string(delta_table(d).render(table_format(format)));
  });
}

lt_status lt_analyze_overlap(const char* const* paths, const char* const* names, size_t count,
                             lt_format format, char** table) {
  return guarded([&] {
    require(paths, table);
    std::vector<NamedSet> sets;
    for (size_t i = 0; i < count; ++i) {
      require(paths[i]);
      const std::string name = names != nullptr && names[i] != nullptr
                                   ? std::string(names[i])
                                   : std::filesystem::path(paths[i]).stem().string();
      sets.push_back(load_surface_set(paths[i], name));
    }
    *table = dup_string(overlap_table(overlap_report(sets)).render(table_format(format)));
  });
}

// Synthetic corpora and benchmarking --------------------------------------

void lt_synth_config_default(lt_synth_config* config) {
  if (config == nullptr) return;
  const SynthConfig d;
  *config = lt_synth_config{d.documents, d.perturb_rate, d.seed, d.filler_vocabulary,
                            d.embedding_dimension};
}

lt_status lt_synth_corpus(const lt_lexicon* lex, const lt_synth_config* config,
                          const lt_synth_outputs* outputs, lt_synth_summary* summary) {
  return guarded([&] {
    require(lex, config, outputs);
    require(outputs->corpus_path);
    const SynthConfig cfg{config->documents, config->perturb_rate, config->seed,
                          config->filler_vocabulary, config->embedding_dimension};
    const SynthCorpus corpus = synthesize_corpus(lex->lex, cfg);
    write_corpus(corpus.documents, outputs->corpus_path);
    if (outputs->truth_path != nullptr) write_truth(corpus.mentions, outputs->truth_path);
    if (outputs->freq_path != nullptr) corpus.dictionary.save(outputs->freq_path);
    if (outputs->embeddings_path != nullptr) write_embeddings(corpus, outputs->embeddings_path);
    if (summary != nullptr) {
      summary->documents = corpus.documents.size();
      summary->mentions = corpus.mentions.size();
      summary->perturbed = 0;
      for (const auto& m : corpus.mentions) summary->perturbed += m.perturbed ? 1 : 0;
    }
  });
}

void lt_bench_config_default(lt_bench_config* config) {
  if (config == nullptr) return;
  const BenchInputs d;
  *config = lt_bench_config{nullptr,
                            nullptr,
                            0,
                            nullptr,
                            nullptr,
                            nullptr,
                            "base",
                            d.key_threshold,
                            static_cast<uint32_t>(d.expansion.k),
                            d.expansion.lex_ratio,
                            static_cast<uint32_t>(d.max_distance),
                            d.warmup_documents};
}

lt_status lt_bench(const lt_bench_config* config, lt_format format, char** report) {
  return guarded([&] {
    require(config, report);
    require(config->corpus_path, config->methods);
    BenchInputs in;
    in.corpus = config->corpus_path;
    for (size_t i = 0; i < config->lexicon_count; ++i) {
      require(config->lexicon_paths, config->lexicon_paths[i]);
      in.lexicons.emplace_back(config->lexicon_paths[i]);
    }
    if (config->freq_path != nullptr) in.freq_dict = config->freq_path;
    if (config->embeddings_path != nullptr) in.embeddings = config->embeddings_path;
    if (config->stoplist_path != nullptr) in.stoplist = config->stoplist_path;
    for (auto name : io::split(config->methods, ',')) {
      if (name.empty()) continue;
      auto m = parse_bench_method(name);
      if (!m) throw UsageError("unknown bench method '" + std::string(name) + "'");
      in.methods.push_back(*m);
    }
    in.key_threshold = config->key_threshold;
    in.expansion = ExpansionParams{config->k, config->lex_ratio};
    in.max_distance = config->max_distance;
    in.warmup_documents = config->warmup_documents;
    *report = dup_string(bench_table(run_bench(in)).render(table_format(format)));
  });
}

}  // extern "C"
