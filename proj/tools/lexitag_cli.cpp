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

// lexitag command-line tool. Talks to the library only through lexitag.h.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lexitag/lexitag.h"

namespace {

// Thrown when a library call fails; carries the status for the exit code.
struct Failure {
  lt_status status;
};

void check(lt_status s) {
  if (s != LT_OK) throw Failure{s};
}

int exit_code(lt_status s) { return s == LT_ERR_USAGE ? 1 : 2; }

const char* status_name(lt_status s) {
  switch (s) {
    case LT_ERR_USAGE: return "usage error";
    case LT_ERR_DATA: return "data error";
    case LT_ERR_IO: return "io error";
    default: return "internal error";
  }
}

// Owns a malloc'd string returned by the library.
class OwnedString {
 public:
  OwnedString() = default;
  OwnedString(const OwnedString&) = delete;
  OwnedString& operator=(const OwnedString&) = delete;
  ~OwnedString() { lt_string_free(p_); }
  char** out() { return &p_; }
  const char* get() const { return p_ == nullptr ? "" : p_; }

 private:
  char* p_ = nullptr;
};

template <typename T, void (*Free)(T*)>
class Handle {
 public:
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p_); }
  T** out() { return &p_; }
  T* get() const { return p_; }

 private:
  T* p_ = nullptr;
};

using Lexicon = Handle<lt_lexicon, lt_lexicon_free>;
using FreqDict = Handle<lt_freq_dict, lt_freq_dict_free>;
using Index = Handle<lt_index, lt_index_free>;
using Stoplist = Handle<lt_stoplist, lt_stoplist_free>;
using Geometry = Handle<lt_geometry, lt_geometry_free>;
using Embeddings = Handle<lt_embeddings, lt_embeddings_free>;
using Misspellings = Handle<lt_misspellings, lt_misspellings_free>;

lt_format parse_format(const std::string& f) {
  return f == "md" ? LT_FORMAT_MARKDOWN : LT_FORMAT_TSV;
}

void load_lexicons(Lexicon& lex, const std::vector<std::string>& paths) {
  check(lt_lexicon_new(lex.out()));
  for (const auto& p : paths) check(lt_lexicon_load(lex.get(), p.c_str()));
}

void load_stoplist(Stoplist& stop, const std::string& path) {
  if (path.empty()) {
    check(lt_stoplist_new(stop.out()));
  } else {
    check(lt_stoplist_load(path.c_str(), stop.out()));
  }
}

// Seeds come from --term values first, then lexicon surfaces in load order.
std::vector<std::string> collect_seeds(const std::vector<std::string>& terms,
                                       const std::vector<std::string>& lexicons) {
  std::vector<std::string> seeds = terms;
  if (!lexicons.empty()) {
    Lexicon lex;
    load_lexicons(lex, lexicons);
    for (size_t i = 0; i < lt_lexicon_size(lex.get()); ++i) {
      lt_lexicon_entry e;
      check(lt_lexicon_get(lex.get(), i, &e));
      seeds.emplace_back(e.surface);
    }
  }
  if (seeds.empty()) {
    std::fprintf(stderr, "error: give at least one --term or --lexicon\n");
    throw Failure{LT_ERR_USAGE};
  }
  return seeds;
}

void print_variants(const lt_misspellings* m) {
  for (size_t i = 0; i < lt_misspellings_size(m); ++i) {
    lt_variant v;
    check(lt_misspellings_get(m, i, &v));
    std::printf("%s\t%s\t%s\t%s\n", v.seed, v.variant, v.generator, v.metadata);
  }
}

struct Options {
  std::vector<std::string> lexicons;
  std::vector<std::string> terms;
  std::vector<std::string> inputs;
  std::vector<std::string> names;
  std::string corpus, freq, out, inject, stoplist, embeddings, method, geometry, truth;
  std::string freq_out, embeddings_out, methods = "base,keyboard,embedding,symspell";
  std::string format = "tsv";
  unsigned max_distance = 2;
  double threshold = 1.2;
  unsigned k = 25;
  double lex_ratio = 0.25;
  unsigned threads = 1;
  unsigned long long seed = 42;
  size_t n = 10;
  size_t docs = 10000;
  double rate = 0.2;
  size_t warmup = 1000;
  unsigned long long additional = 0, base = 0;
};

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "table layout")
      ->check(CLI::IsMember({"tsv", "md"}))
      ->capture_default_str();
}

void add_threads(CLI::App* cmd, Options& o) {
  cmd->add_option("--threads", o.threads, "worker threads")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
}

int run_build_freq(const Options& o) {
  FreqDict dict;
  uint64_t skipped = 0;
  check(lt_freq_dict_build(o.corpus.c_str(), dict.out(), &skipped));
  if (!o.freq.empty()) {
    FreqDict extra, merged;
    check(lt_freq_dict_load(o.freq.c_str(), extra.out()));
    check(lt_freq_dict_merge(dict.get(), extra.get(), merged.out()));
    std::swap(*dict.out(), *merged.out());
  }
  if (!o.inject.empty()) check(lt_freq_dict_inject_file(dict.get(), o.inject.c_str()));
  check(lt_freq_dict_save(dict.get(), o.out.c_str()));
  std::printf("OK tokens=%zu total=%llu skipped_lines=%llu out=%s\n", lt_freq_dict_size(dict.get()),
              static_cast<unsigned long long>(lt_freq_dict_total(dict.get())),
              static_cast<unsigned long long>(skipped), o.out.c_str());
  return 0;
}

int finish_variants(const Options& o, const Misspellings& m, size_t seeds) {
  if (o.out.empty()) {
    print_variants(m.get());
  } else {
    check(lt_misspellings_save(m.get(), o.out.c_str()));
  }
  std::printf("OK seeds=%zu variants=%zu%s%s\n", seeds, lt_misspellings_size(m.get()),
              o.out.empty() ? "" : " out=", o.out.c_str());
  return 0;
}

int run_gen_keyboard(const Options& o) {
  const auto seeds = collect_seeds(o.terms, o.lexicons);
  Geometry geom;
  if (o.geometry.empty()) {
    check(lt_geometry_qwerty(o.threshold, geom.out()));
  } else {
    check(lt_geometry_load(o.geometry.c_str(), o.threshold, geom.out()));
  }
  Stoplist stop;
  load_stoplist(stop, o.stoplist);
  Misspellings m;
  check(lt_misspellings_new(m.out()));
  for (const auto& s : seeds) check(lt_generate_keyboard(geom.get(), s.c_str(), stop.get(), m.get()));
  return finish_variants(o, m, seeds.size());
}

int run_gen_embedding(const Options& o) {
  const auto seeds = collect_seeds(o.terms, o.lexicons);
  Embeddings emb;
  check(lt_embeddings_load(o.embeddings.c_str(), emb.out()));
  Stoplist stop;
  load_stoplist(stop, o.stoplist);
  Misspellings m;
  check(lt_misspellings_new(m.out()));
  for (const auto& s : seeds) {
    check(lt_generate_embedding(emb.get(), s.c_str(), o.k, o.lex_ratio, stop.get(), m.get()));
  }
  return finish_variants(o, m, seeds.size());
}

int run_correct(const Options& o) {
  FreqDict dict;
  check(lt_freq_dict_load(o.freq.c_str(), dict.out()));
  Index index;
  check(lt_index_build(dict.get(), o.max_distance, index.out()));
  uint64_t documents = 0, skipped = 0;
  check(lt_index_correct_corpus(index.get(), o.corpus.c_str(), o.out.c_str(), o.threads,
                                &documents, &skipped));
  std::printf("OK documents=%llu skipped_lines=%llu max_distance=%u out=%s\n",
              static_cast<unsigned long long>(documents), static_cast<unsigned long long>(skipped),
              o.max_distance, o.out.c_str());
  return 0;
}

int run_tag(const Options& o) {
  Lexicon lex;
  load_lexicons(lex, o.lexicons);
  lt_tag_summary s{};
  check(lt_tag_corpus(lex.get(), o.corpus.c_str(), o.out.c_str(),
                      o.method.empty() ? nullptr : o.method.c_str(), o.threads, &s));
  std::printf(
      "OK documents=%llu documents_with_match=%llu matches=%llu surfaces=%llu skipped_lines=%llu "
      "out=%s\n",
      static_cast<unsigned long long>(s.documents),
      static_cast<unsigned long long>(s.documents_with_match),
      static_cast<unsigned long long>(s.total_matches),
      static_cast<unsigned long long>(s.distinct_surfaces),
      static_cast<unsigned long long>(s.skipped_lines), o.out.c_str());
  return 0;
}

int run_analyze_top(const Options& o) {
  OwnedString table;
  check(lt_analyze_top(o.inputs.at(0).c_str(), o.n, parse_format(o.format), table.out()));
  std::fputs(table.get(), stdout);
  std::printf("OK rows=%zu\n", o.n);
  return 0;
}

int run_analyze_delta(const Options& o) {
  OwnedString table;
  uint64_t added = 0;
  check(lt_analyze_delta(o.inputs.at(0).c_str(), o.inputs.at(1).c_str(), parse_format(o.format),
                         &added, table.out()));
  std::fputs(table.get(), stdout);
  std::printf("OK added_total=%llu\n", static_cast<unsigned long long>(added));
  return 0;
}

int run_analyze_overlap(const Options& o) {
  if (!o.names.empty() && o.names.size() != o.inputs.size()) {
    std::fprintf(stderr, "error: --name must be given once per input or not at all\n");
    return 1;
  }
  std::vector<const char*> paths, names;
  for (const auto& p : o.inputs) paths.push_back(p.c_str());
  for (const auto& n : o.names) names.push_back(n.c_str());
  OwnedString table;
  check(lt_analyze_overlap(paths.data(), names.empty() ? nullptr : names.data(), paths.size(),
                           parse_format(o.format), table.out()));
  std::fputs(table.get(), stdout);
  std::printf("OK sets=%zu\n", paths.size());
  return 0;
}

int run_analyze_increase(const Options& o) {
  int64_t hundredths = 0;
  check(lt_percentage_increase(o.additional, o.base, &hundredths));
  std::printf("%lld.%02lld\n", static_cast<long long>(hundredths / 100),
              static_cast<long long>(hundredths % 100));
  std::printf("OK percent=%lld.%02lld\n", static_cast<long long>(hundredths / 100),
              static_cast<long long>(hundredths % 100));
  return 0;
}

int run_bench(const Options& o) {
  lt_bench_config cfg;
  lt_bench_config_default(&cfg);
  std::vector<const char*> lexicons;
  for (const auto& p : o.lexicons) lexicons.push_back(p.c_str());
  cfg.corpus_path = o.corpus.c_str();
  cfg.lexicon_paths = lexicons.data();
  cfg.lexicon_count = lexicons.size();
  cfg.freq_path = o.freq.empty() ? nullptr : o.freq.c_str();
  cfg.embeddings_path = o.embeddings.empty() ? nullptr : o.embeddings.c_str();
  cfg.stoplist_path = o.stoplist.empty() ? nullptr : o.stoplist.c_str();
  cfg.methods = o.methods.c_str();
  cfg.key_threshold = o.threshold;
  cfg.k = o.k;
  cfg.lex_ratio = o.lex_ratio;
  cfg.max_distance = o.max_distance;
  cfg.warmup_documents = o.warmup;
  OwnedString report;
  check(lt_bench(&cfg, parse_format(o.format), report.out()));
  std::fputs(report.get(), stdout);
  std::printf("OK methods=%s\n", o.methods.c_str());
  return 0;
}

int run_synth(const Options& o) {
  Lexicon lex;
  load_lexicons(lex, o.lexicons);
  lt_synth_config cfg;
  lt_synth_config_default(&cfg);
  cfg.documents = o.docs;
  cfg.perturb_rate = o.rate;
  cfg.seed = o.seed;
  const lt_synth_outputs outputs{o.out.c_str(), o.truth.empty() ? nullptr : o.truth.c_str(),
                                 o.freq_out.empty() ? nullptr : o.freq_out.c_str(),
                                 o.embeddings_out.empty() ? nullptr : o.embeddings_out.c_str()};
  lt_synth_summary s{};
  check(lt_synth_corpus(lex.get(), &cfg, &outputs, &s));
  std::printf("OK documents=%llu mentions=%llu perturbed=%llu seed=%llu out=%s\n",
              static_cast<unsigned long long>(s.documents),
              static_cast<unsigned long long>(s.mentions),
              static_cast<unsigned long long>(s.perturbed), o.seed, o.out.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Misspelling-aware lexicon tagging", "lexitag"};
  app.require_subcommand(1);
  app.set_version_flag("--version", lt_version());
  Options o;
  int (*action)(const Options&) = nullptr;

  auto* build = app.add_subcommand("build-freq", "Count tokens of a corpus into a frequency dictionary");
  build->add_option("--corpus", o.corpus, "corpus TSV")->required();
  build->add_option("--out", o.out, "output dictionary")->required();
  build->add_option("--freq", o.freq, "dictionary to merge in");
  build->add_option("--inject", o.inject, "keyword file of 'token count' floors");
  build->callback([&] { action = run_build_freq; });

  auto* gen = app.add_subcommand("gen-misspell", "Generate misspelling variants");
  gen->require_subcommand(1);
  auto* keyboard = gen->add_subcommand("keyboard", "Single keyboard-neighbor substitutions");
  auto* embedding = gen->add_subcommand("embedding", "Iterative embedding-neighbor expansion");
  for (auto* cmd : {keyboard, embedding}) {
    cmd->add_option("--lexicon", o.lexicons, "seed lexicon (repeatable)");
    cmd->add_option("--term", o.terms, "seed term (repeatable)");
    cmd->add_option("--stoplist", o.stoplist, "common words to drop");
    cmd->add_option("--out", o.out, "output TSV (stdout when absent)");
  }
  keyboard->add_option("--threshold", o.threshold, "max key distance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  keyboard->add_option("--geometry", o.geometry, "key coordinate TSV (default QWERTY)");
  keyboard->callback([&] { action = run_gen_keyboard; });
  embedding->add_option("--embeddings", o.embeddings, "word2vec text file")->required();
  embedding->add_option("--k", o.k, "neighbors per round")
      ->check(CLI::Range(1u, 100000u))
      ->capture_default_str();
  embedding->add_option("--lex-ratio", o.lex_ratio, "max edit distance / length")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  embedding->callback([&] { action = run_gen_embedding; });

  auto* correct = app.add_subcommand("correct", "Spell-correct a corpus");
  correct->add_option("--freq", o.freq, "frequency dictionary")->required();
  correct->add_option("--corpus", o.corpus, "corpus TSV")->required();
  correct->add_option("--out", o.out, "corrected corpus TSV")->required();
  correct->add_option("--max-distance", o.max_distance, "max edit distance")
      ->check(CLI::Range(1u, 3u))
      ->capture_default_str();
  add_threads(correct, o);
  correct->callback([&] { action = run_correct; });

  auto* tag = app.add_subcommand("tag", "Tag lexicon terms in a corpus");
  tag->add_option("--lexicon", o.lexicons, "lexicon TSV (repeatable)")->required();
  tag->add_option("--corpus", o.corpus, "corpus TSV")->required();
  tag->add_option("--out", o.out, "matches TSV")->required();
  tag->add_option("--method", o.method, "method label for every match")
      ->check(CLI::IsMember({"base", "keyboard", "embedding", "symspell-corrected"}));
  add_threads(tag, o);
  tag->callback([&] { action = run_tag; });

  auto* analyze = app.add_subcommand("analyze", "Summarize matches files");
  analyze->require_subcommand(1);
  auto* top = analyze->add_subcommand("top", "Most frequent surfaces");
  top->add_option("input", o.inputs, "matches or counts TSV")->required()->expected(1);
  top->add_option("--n", o.n, "rows")->check(CLI::PositiveNumber)->capture_default_str();
  add_format(top, o);
  top->callback([&] { action = run_analyze_top; });
  auto* delta = analyze->add_subcommand("delta", "Counts gained over a base run");
  delta->add_option("inputs", o.inputs, "base then other")->required()->expected(2);
  add_format(delta, o);
  delta->callback([&] { action = run_analyze_delta; });
  auto* overlap = analyze->add_subcommand("overlap", "Surface set overlaps");
  overlap->add_option("inputs", o.inputs, "2 or 3 matches or counts files")
      ->required()
      ->expected(2, 3);
  overlap->add_option("--name", o.names, "set name per input (repeatable)");
  add_format(overlap, o);
  overlap->callback([&] { action = run_analyze_overlap; });
  auto* increase = analyze->add_subcommand("increase", "Percentage increase");
  increase->add_option("--additional", o.additional, "additional count")->required();
  increase->add_option("--base", o.base, "base count")->required();
  increase->callback([&] { action = run_analyze_increase; });

  auto* bench = app.add_subcommand("bench", "Time generation and tagging per method");
  bench->add_option("--corpus", o.corpus, "corpus TSV")->required();
  bench->add_option("--lexicon", o.lexicons, "lexicon TSV (repeatable)")->required();
  bench->add_option("--freq", o.freq, "frequency dictionary (symspell, norvig)");
  bench->add_option("--embeddings", o.embeddings, "word2vec text file (embedding)");
  bench->add_option("--stoplist", o.stoplist, "common words to drop");
  bench->add_option("--methods", o.methods, "comma-separated methods")->capture_default_str();
  bench->add_option("--threshold", o.threshold, "keyboard max key distance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--k", o.k, "neighbors per round")->capture_default_str();
  bench->add_option("--lex-ratio", o.lex_ratio, "max edit distance / length")
      ->capture_default_str();
  bench->add_option("--max-distance", o.max_distance, "max edit distance")
      ->check(CLI::Range(1u, 3u))
      ->capture_default_str();
  bench->add_option("--warmup", o.warmup, "warm-up documents")->capture_default_str();
  add_format(bench, o);
  bench->callback([&] { action = run_bench; });

  auto* synth = app.add_subcommand("synth-corpus", "Write a seeded corpus with planted mentions");
  synth->add_option("--lexicon", o.lexicons, "lexicon TSV (repeatable)")->required();
  synth->add_option("--out", o.out, "corpus TSV")->required();
  synth->add_option("--truth", o.truth, "planted mentions TSV");
  synth->add_option("--freq-out", o.freq_out, "frequency dictionary");
  synth->add_option("--embeddings-out", o.embeddings_out, "word2vec text file");
  synth->add_option("--docs", o.docs, "documents")->capture_default_str();
  synth->add_option("--rate", o.rate, "fraction of mentions with one edit")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  synth->add_option("--seed", o.seed, "random seed")->capture_default_str();
  synth->callback([&] { action = run_synth; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 1;
  }
  if (action == nullptr) {
    std::cerr << app.help();
    return 1;
  }
  try {
    return action(o);
  } catch (const Failure& f) {
    if (f.status != LT_OK && *lt_last_error() != '\0') {
      std::fprintf(stderr, "error: %s: %s\n", status_name(f.status), lt_last_error());
    }
    return exit_code(f.status);
  }
}
