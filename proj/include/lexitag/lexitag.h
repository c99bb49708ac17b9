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

/* C interface to lexitag: misspelling-aware lexicon tagging.
 *
 * Every object is an opaque handle created by a *_new/_load/_build call and
 * released with the matching *_free. Fallible calls return lt_status; on
 * failure lt_last_error() describes the problem (per thread). Strings
 * returned through char** are heap-allocated and released with
 * lt_string_free(). Strings reachable through accessor structs are owned by
 * the handle they came from and live until it is freed.
 *
 * Handles are immutable after construction unless a function says otherwise
 * and may be shared across threads for read-only calls.
 */
#ifndef LEXITAG_LEXITAG_H_
#define LEXITAG_LEXITAG_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(LEXITAG_BUILDING)
#define LT_API __declspec(dllexport)
#else
#define LT_API __declspec(dllimport)
#endif
#else
#define LT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lt_status {
  LT_OK = 0,
  LT_ERR_USAGE = 1,    /* bad argument, option or configuration */
  LT_ERR_DATA = 2,     /* malformed or inconsistent input data */
  LT_ERR_IO = 3,       /* a file could not be read or written */
  LT_ERR_INTERNAL = 4
} lt_status;

typedef enum lt_format { LT_FORMAT_TSV = 0, LT_FORMAT_MARKDOWN = 1 } lt_format;

LT_API const char* lt_version(void);
LT_API const char* lt_last_error(void);
LT_API void lt_string_free(char* s);

/* Space-joined tokens of the tweet normalizer. */
LT_API lt_status lt_normalize(const char* text, char** out);
LT_API lt_status lt_osa_distance(const char* a, const char* b, uint32_t* out);

/* ---- Frequency dictionaries ------------------------------------------- */

typedef struct lt_freq_dict lt_freq_dict;

LT_API lt_status lt_freq_dict_new(lt_freq_dict** out);
/* "token count" per line. */
LT_API lt_status lt_freq_dict_load(const char* path, lt_freq_dict** out);
/* Token counts over a doc_id<TAB>text corpus. skipped_lines may be NULL. */
LT_API lt_status lt_freq_dict_build(const char* corpus_path, lt_freq_dict** out,
                                    uint64_t* skipped_lines);
LT_API lt_status lt_freq_dict_add(lt_freq_dict* dict, const char* token, uint64_t count);
LT_API lt_status lt_freq_dict_merge(const lt_freq_dict* a, const lt_freq_dict* b,
                                    lt_freq_dict** out);
/* Raises token to at least count. count <= 0 fails with LT_ERR_DATA. */
LT_API lt_status lt_freq_dict_inject(lt_freq_dict* dict, const char* token, int64_t count);
LT_API lt_status lt_freq_dict_inject_file(lt_freq_dict* dict, const char* path);
/* Sorted by count (descending) then token; written atomically. */
LT_API lt_status lt_freq_dict_save(const lt_freq_dict* dict, const char* path);
LT_API uint64_t lt_freq_dict_count(const lt_freq_dict* dict, const char* token);
LT_API uint64_t lt_freq_dict_total(const lt_freq_dict* dict);
LT_API size_t lt_freq_dict_size(const lt_freq_dict* dict);
LT_API void lt_freq_dict_free(lt_freq_dict* dict);

/* ---- Symmetric-delete correction -------------------------------------- */

typedef struct lt_index lt_index;
typedef struct lt_corrections lt_corrections;

typedef enum lt_lookup_mode { LT_LOOKUP_CLOSEST = 0, LT_LOOKUP_ALL = 1 } lt_lookup_mode;

typedef struct lt_correction {
  const char* original;
  const char* corrected;
  uint32_t distance;
  uint64_t frequency;
} lt_correction;

/* max_distance must be 1, 2 or 3. The dictionary is copied. */
LT_API lt_status lt_index_build(const lt_freq_dict* dict, uint32_t max_distance, lt_index** out);
LT_API uint32_t lt_index_max_distance(const lt_index* index);
LT_API lt_status lt_index_lookup(const lt_index* index, const char* query, uint32_t distance,
                                 lt_lookup_mode mode, lt_corrections** out);
LT_API size_t lt_corrections_size(const lt_corrections* c);
LT_API lt_status lt_corrections_get(const lt_corrections* c, size_t i, lt_correction* out);
LT_API void lt_corrections_free(lt_corrections* c);
LT_API lt_status lt_index_correct_token(const lt_index* index, const char* token, char** out);
LT_API lt_status lt_index_correct_text(const lt_index* index, const char* text, char** out);
/* Writes doc_id<TAB>corrected text per document. Output order equals input
 * order for every thread count. documents/skipped_lines may be NULL. */
LT_API lt_status lt_index_correct_corpus(const lt_index* index, const char* corpus_path,
                                         const char* out_path, uint32_t threads,
                                         uint64_t* documents, uint64_t* skipped_lines);
LT_API void lt_index_free(lt_index* index);

/* Norvig-style distance-1/2 correction over a-z. */
LT_API lt_status lt_norvig_correct(const lt_freq_dict* dict, const char* token, char** out);

/* ---- Lexicons and tagging --------------------------------------------- */

typedef struct lt_lexicon lt_lexicon;
typedef struct lt_matches lt_matches;

typedef struct lt_lexicon_entry {
  const char* term_id;
  const char* surface;
  const char* source; /* base, keyboard or embedding */
} lt_lexicon_entry;

typedef struct lt_match {
  const char* doc_id;
  uint64_t start;
  uint64_t end;
  const char* matched_text;
  const char* canonical_surface;
  const char* term_id;
  const char* method;
} lt_match;

typedef struct lt_tag_summary {
  uint64_t total_matches;
  uint64_t documents;
  uint64_t documents_with_match;
  uint64_t skipped_lines;
  uint64_t distinct_surfaces;
} lt_tag_summary;

LT_API lt_status lt_lexicon_new(lt_lexicon** out);
/* Adds the entries of a lexicon file (term_id<TAB>surface, or a generated
 * misspellings file). Surfaces already present keep their first entry. */
LT_API lt_status lt_lexicon_load(lt_lexicon* lex, const char* path);
/* source may be NULL (base). *added is 1 when the surface was new. */
LT_API lt_status lt_lexicon_add(lt_lexicon* lex, const char* term_id, const char* surface,
                                const char* source, int* added);
LT_API size_t lt_lexicon_size(const lt_lexicon* lex);
LT_API size_t lt_lexicon_max_phrase_len(const lt_lexicon* lex);
LT_API size_t lt_lexicon_duplicates(const lt_lexicon* lex);
LT_API size_t lt_lexicon_rejected(const lt_lexicon* lex);
LT_API lt_status lt_lexicon_get(const lt_lexicon* lex, size_t i, lt_lexicon_entry* out);
LT_API lt_status lt_lexicon_save(const lt_lexicon* lex, const char* path);
LT_API void lt_lexicon_free(lt_lexicon* lex);

/* method NULL labels matches by entry source; otherwise one of base,
 * keyboard, embedding, symspell-corrected. */
LT_API lt_status lt_tag_text(const lt_lexicon* lex, const char* doc_id, const char* text,
                             const char* method, lt_matches** out);
LT_API size_t lt_matches_size(const lt_matches* m);
LT_API lt_status lt_matches_get(const lt_matches* m, size_t i, lt_match* out);
LT_API void lt_matches_free(lt_matches* m);

/* Matches TSV: doc_id, start, end, matched_text, canonical_surface, term_id,
 * method. Byte-identical for every thread count. */
LT_API lt_status lt_tag_corpus(const lt_lexicon* lex, const char* corpus_path,
                               const char* matches_path, const char* method, uint32_t threads,
                               lt_tag_summary* summary);

/* ---- Misspelling generation ------------------------------------------- */

typedef struct lt_geometry lt_geometry;
typedef struct lt_stoplist lt_stoplist;
typedef struct lt_embeddings lt_embeddings;
typedef struct lt_misspellings lt_misspellings;

typedef struct lt_variant {
  const char* seed;
  const char* variant;
  const char* generator;
  const char* metadata;
} lt_variant;

LT_API lt_status lt_geometry_qwerty(double threshold, lt_geometry** out);
/* TSV char<TAB>row<TAB>col. */
LT_API lt_status lt_geometry_load(const char* path, double threshold, lt_geometry** out);
/* Neighbor letters of ch (one UTF-8 character) as a UTF-8 string. */
LT_API lt_status lt_geometry_neighbors(const lt_geometry* geom, const char* ch, char** out);
LT_API void lt_geometry_free(lt_geometry* geom);

LT_API lt_status lt_stoplist_new(lt_stoplist** out);
LT_API lt_status lt_stoplist_load(const char* path, lt_stoplist** out);
LT_API lt_status lt_stoplist_add(lt_stoplist* stop, const char* token);
LT_API void lt_stoplist_free(lt_stoplist* stop);

LT_API lt_status lt_embeddings_load(const char* path, lt_embeddings** out);
LT_API size_t lt_embeddings_size(const lt_embeddings* emb);
LT_API size_t lt_embeddings_dimension(const lt_embeddings* emb);
LT_API void lt_embeddings_free(lt_embeddings* emb);

/* Accumulates variants across seeds (mutable). */
LT_API lt_status lt_misspellings_new(lt_misspellings** out);
/* stop may be NULL. */
LT_API lt_status lt_generate_keyboard(const lt_geometry* geom, const char* seed,
                                      const lt_stoplist* stop, lt_misspellings* out);
LT_API lt_status lt_generate_embedding(const lt_embeddings* emb, const char* seed, uint32_t k,
                                       double lex_ratio, const lt_stoplist* stop,
                                       lt_misspellings* out);
LT_API size_t lt_misspellings_size(const lt_misspellings* m);
LT_API lt_status lt_misspellings_get(const lt_misspellings* m, size_t i, lt_variant* out);
/* seed<TAB>variant<TAB>generator<TAB>metadata per line. */
LT_API lt_status lt_misspellings_save(const lt_misspellings* m, const char* path);
LT_API void lt_misspellings_free(lt_misspellings* m);

/* ---- Analysis ---------------------------------------------------------- */

/* additional / base * 100 in hundredths of a percent, rounded half-up. */
LT_API lt_status lt_percentage_increase(uint64_t additional, uint64_t base, int64_t* hundredths);
/* Inputs are matches TSVs or surface<TAB>count files. */
LT_API lt_status lt_analyze_top(const char* counts_path, size_t n, lt_format format,
                                char** table);
LT_API lt_status lt_analyze_delta(const char* base_path, const char* other_path, lt_format format,
                                  uint64_t* added_total, char** table);
/* 2 or 3 surface sets; names may be NULL (file names are used). */
LT_API lt_status lt_analyze_overlap(const char* const* paths, const char* const* names,
                                    size_t count, lt_format format, char** table);

/* ---- Synthetic corpora and benchmarking --------------------------------- */

typedef struct lt_synth_config {
  size_t documents;
  double perturb_rate;
  uint64_t seed;
  size_t filler_vocabulary;
  size_t embedding_dimension;
} lt_synth_config;

/* Any path except corpus_path may be NULL to skip that output. */
typedef struct lt_synth_outputs {
  const char* corpus_path;
  const char* truth_path;
  const char* freq_path;
  const char* embeddings_path;
} lt_synth_outputs;

typedef struct lt_synth_summary {
  uint64_t documents;
  uint64_t mentions;
  uint64_t perturbed;
} lt_synth_summary;

LT_API void lt_synth_config_default(lt_synth_config* config);
LT_API lt_status lt_synth_corpus(const lt_lexicon* lex, const lt_synth_config* config,
                                 const lt_synth_outputs* outputs, lt_synth_summary* summary);

typedef struct lt_bench_config {
  const char* corpus_path;
  const char* const* lexicon_paths;
  size_t lexicon_count;
  const char* freq_path;       /* symspell, norvig */
  const char* embeddings_path; /* embedding */
  const char* stoplist_path;   /* optional */
  const char* methods;         /* comma-separated: base,keyboard,embedding,symspell,norvig */
  double key_threshold;
  uint32_t k;
  double lex_ratio;
  uint32_t max_distance;
  size_t warmup_documents;
} lt_bench_config;

LT_API void lt_bench_config_default(lt_bench_config* config);
/* Report columns: method, generation_time_ms (NA when not applicable),
 * total_tagging_time_ms, avg_tagging_time_ms_per_600000_docs. */
LT_API lt_status lt_bench(const lt_bench_config* config, lt_format format, char** report);

#ifdef __cplusplus
}
#endif

#endif /* LEXITAG_LEXITAG_H_ */
