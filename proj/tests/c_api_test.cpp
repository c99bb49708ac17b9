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

// Exercises the shared library through its C interface only.

#include "lexitag/lexitag.h"

#include <gtest/gtest.h>

#include <string>

#include "test_util.hpp"

namespace {

using lexitag::testing::data_dir;
using lexitag::testing::read_file;
using lexitag::testing::TempDir;
using lexitag::testing::write_file;

std::string take(char* s) {
  std::string out = s == nullptr ? "" : s;
  lt_string_free(s);
  return out;
}

TEST(CApi, NormalizeAndDistance) {
  char* out = nullptr;
  ASSERT_EQ(lt_normalize("Took #Zinc @bob http://x.y", &out), LT_OK);
  EXPECT_EQ(take(out), "took zinc");
  uint32_t d = 0;
  ASSERT_EQ(lt_osa_distance("ca", "abc", &d), LT_OK);
  EXPECT_EQ(d, 3u);
  EXPECT_EQ(lt_osa_distance(nullptr, "abc", &d), LT_ERR_USAGE);
  EXPECT_STRNE(lt_last_error(), "");
  EXPECT_STRNE(lt_version(), "");
}

TEST(CApi, FrequencyDictionaryAndCorrection) {
  lt_freq_dict* dict = nullptr;
  ASSERT_EQ(lt_freq_dict_new(&dict), LT_OK);
  ASSERT_EQ(lt_freq_dict_add(dict, "chloroquine", 100), LT_OK);
  ASSERT_EQ(lt_freq_dict_add(dict, "remdesivir", 50), LT_OK);
  EXPECT_EQ(lt_freq_dict_add(dict, "Bad Token", 1), LT_ERR_DATA);
  EXPECT_EQ(lt_freq_dict_inject(dict, "covid", 0), LT_ERR_DATA);
  EXPECT_NE(std::string(lt_last_error()).find("covid"), std::string::npos);
  ASSERT_EQ(lt_freq_dict_inject(dict, "covid", 1000), LT_OK);
  EXPECT_EQ(lt_freq_dict_count(dict, "covid"), 1000u);
  EXPECT_EQ(lt_freq_dict_total(dict), 1150u);
  EXPECT_EQ(lt_freq_dict_size(dict), 3u);

  lt_index* index = nullptr;
  EXPECT_EQ(lt_index_build(dict, 4, &index), LT_ERR_USAGE);
  ASSERT_EQ(lt_index_build(dict, 2, &index), LT_OK);
  EXPECT_EQ(lt_index_max_distance(index), 2u);
  lt_corrections* cs = nullptr;
  ASSERT_EQ(lt_index_lookup(index, "cloroquine", 1, LT_LOOKUP_CLOSEST, &cs), LT_OK);
  ASSERT_EQ(lt_corrections_size(cs), 1u);
  lt_correction c;
  ASSERT_EQ(lt_corrections_get(cs, 0, &c), LT_OK);
  EXPECT_STREQ(c.corrected, "chloroquine");
  EXPECT_EQ(c.distance, 1u);
  EXPECT_EQ(c.frequency, 100u);
  EXPECT_EQ(lt_corrections_get(cs, 1, &c), LT_ERR_USAGE);
  lt_corrections_free(cs);
  EXPECT_EQ(lt_index_lookup(index, "x", 3, LT_LOOKUP_ALL, &cs), LT_ERR_USAGE);

  char* out = nullptr;
  ASSERT_EQ(lt_index_correct_text(index, "CLOROQUINE and covid19", &out), LT_OK);
  EXPECT_EQ(take(out), "chloroquine and covid19");
  ASSERT_EQ(lt_index_correct_token(index, "remdesivr", &out), LT_OK);
  EXPECT_EQ(take(out), "remdesivir");
  ASSERT_EQ(lt_norvig_correct(dict, "cloroquine", &out), LT_OK);
  EXPECT_EQ(take(out), "chloroquine");

  TempDir dir;
  write_file(dir / "c.tsv", "1\tcloroquine now\n2\tremdesivr\n");
  uint64_t docs = 0, skipped = 0;
  ASSERT_EQ(lt_index_correct_corpus(index, (dir / "c.tsv").c_str(), (dir / "o.tsv").c_str(), 4,
                                    &docs, &skipped),
            LT_OK);
  EXPECT_EQ(docs, 2u);
  EXPECT_EQ(read_file(dir / "o.tsv"), "1\tchloroquine now\n2\tremdesivir\n");

  ASSERT_EQ(lt_freq_dict_save(dict, (dir / "f.txt").c_str()), LT_OK);
  lt_freq_dict* back = nullptr;
  ASSERT_EQ(lt_freq_dict_load((dir / "f.txt").c_str(), &back), LT_OK);
  EXPECT_EQ(lt_freq_dict_total(back), 1150u);
  lt_freq_dict* merged = nullptr;
  ASSERT_EQ(lt_freq_dict_merge(dict, back, &merged), LT_OK);
  EXPECT_EQ(lt_freq_dict_total(merged), 2300u);
  EXPECT_EQ(lt_freq_dict_load((dir / "none.txt").c_str(), &back), LT_ERR_IO);
  lt_freq_dict_free(merged);
  lt_freq_dict_free(back);
  lt_index_free(index);
  lt_freq_dict_free(dict);
}

TEST(CApi, LexiconAndTagging) {
  lt_lexicon* lex = nullptr;
  ASSERT_EQ(lt_lexicon_new(&lex), LT_OK);
  int added = 0;
  ASSERT_EQ(lt_lexicon_add(lex, "D1", "Vitamin D", nullptr, &added), LT_OK);
  EXPECT_EQ(added, 1);
  ASSERT_EQ(lt_lexicon_add(lex, "D1", "vitamin d", "base", &added), LT_OK);
  EXPECT_EQ(added, 0);
  ASSERT_EQ(lt_lexicon_add(lex, "D2", "zync", "keyboard", &added), LT_OK);
  EXPECT_EQ(lt_lexicon_add(lex, "D2", "zinc", "bogus", &added), LT_ERR_USAGE);
  EXPECT_EQ(lt_lexicon_size(lex), 2u);
  EXPECT_EQ(lt_lexicon_duplicates(lex), 1u);
  EXPECT_EQ(lt_lexicon_max_phrase_len(lex), 2u);
  lt_lexicon_entry e;
  ASSERT_EQ(lt_lexicon_get(lex, 1, &e), LT_OK);
  EXPECT_STREQ(e.surface, "zync");
  EXPECT_STREQ(e.source, "keyboard");

  lt_matches* ms = nullptr;
  ASSERT_EQ(lt_tag_text(lex, "d1", "more VITAMIN D and zync", nullptr, &ms), LT_OK);
  ASSERT_EQ(lt_matches_size(ms), 2u);
  lt_match m;
  ASSERT_EQ(lt_matches_get(ms, 0, &m), LT_OK);
  EXPECT_EQ(m.start, 5u);
  EXPECT_EQ(m.end, 14u);
  EXPECT_STREQ(m.matched_text, "VITAMIN D");
  EXPECT_STREQ(m.method, "base");
  ASSERT_EQ(lt_matches_get(ms, 1, &m), LT_OK);
  EXPECT_STREQ(m.method, "keyboard");
  lt_matches_free(ms);
  EXPECT_EQ(lt_tag_text(lex, "d1", "x", "nonsense", &ms), LT_ERR_USAGE);

  lt_lexicon* cli = nullptr;
  ASSERT_EQ(lt_lexicon_new(&cli), LT_OK);
  ASSERT_EQ(lt_lexicon_load(cli, (data_dir() / "cli_lexicon.tsv").c_str()), LT_OK);
  TempDir dir;
  lt_tag_summary s{};
  ASSERT_EQ(lt_tag_corpus(cli, (data_dir() / "cli_corpus.tsv").c_str(), (dir / "m.tsv").c_str(),
                          nullptr, 3, &s),
            LT_OK);
  EXPECT_EQ(s.total_matches, 8u);
  EXPECT_EQ(s.documents, 5u);
  EXPECT_EQ(s.documents_with_match, 4u);
  EXPECT_EQ(s.skipped_lines, 1u);
  EXPECT_EQ(read_file(dir / "m.tsv"), read_file(data_dir() / "cli_matches.golden.tsv"));
  write_file(dir / "bad.tsv", "D1\tzinc\nbroken\n");
  EXPECT_EQ(lt_lexicon_load(cli, (dir / "bad.tsv").c_str()), LT_ERR_DATA);
  EXPECT_NE(std::string(lt_last_error()).find("line 2"), std::string::npos);
  lt_lexicon_free(cli);
  lt_lexicon_free(lex);
}

TEST(CApi, Misspellings) {
  lt_geometry* geom = nullptr;
  ASSERT_EQ(lt_geometry_qwerty(2.0, &geom), LT_OK);
  char* nb = nullptr;
  ASSERT_EQ(lt_geometry_neighbors(geom, "e", &nb), LT_OK);
  EXPECT_NE(take(nb).find('t'), std::string::npos);
  EXPECT_EQ(lt_geometry_neighbors(geom, "4", &nb), LT_ERR_USAGE);
  EXPECT_EQ(lt_geometry_qwerty(0.0, &geom), LT_ERR_USAGE);

  lt_stoplist* stop = nullptr;
  ASSERT_EQ(lt_stoplist_new(&stop), LT_OK);
  ASSERT_EQ(lt_stoplist_add(stop, "xocaine"), LT_OK);
  lt_misspellings* out = nullptr;
  ASSERT_EQ(lt_misspellings_new(&out), LT_OK);
  ASSERT_EQ(lt_generate_keyboard(geom, "cocaine", nullptr, out), LT_OK);
  const size_t unfiltered = lt_misspellings_size(out);
  ASSERT_EQ(lt_generate_keyboard(geom, "cocaine", stop, out), LT_OK);
  EXPECT_EQ(lt_misspellings_size(out), 2 * unfiltered - 1);
  lt_variant v;
  ASSERT_EQ(lt_misspellings_get(out, 0, &v), LT_OK);
  EXPECT_STREQ(v.seed, "cocaine");
  EXPECT_STREQ(v.generator, "keyboard");

  lt_embeddings* emb = nullptr;
  ASSERT_EQ(lt_embeddings_load((data_dir() / "embed50.vec").c_str(), &emb), LT_OK);
  EXPECT_EQ(lt_embeddings_size(emb), 50u);
  EXPECT_EQ(lt_embeddings_dimension(emb), 8u);
  lt_misspellings* em = nullptr;
  ASSERT_EQ(lt_misspellings_new(&em), LT_OK);
  ASSERT_EQ(lt_generate_embedding(emb, "oxycodone", 4, 0.25, nullptr, em), LT_OK);
  EXPECT_EQ(lt_misspellings_size(em), 6u);
  TempDir dir;
  ASSERT_EQ(lt_misspellings_save(em, (dir / "v.tsv").c_str()), LT_OK);
  EXPECT_EQ(read_file(dir / "v.tsv").substr(0, 20), "oxycodone\toxycodones");
  EXPECT_EQ(lt_embeddings_load((dir / "none.vec").c_str(), &emb), LT_ERR_IO);

  lt_misspellings_free(em);
  lt_embeddings_free(emb);
  lt_misspellings_free(out);
  lt_stoplist_free(stop);
  lt_geometry_free(geom);
}

TEST(CApi, Analysis) {
  int64_t h = 0;
  ASSERT_EQ(lt_percentage_increase(132083, 1483691, &h), LT_OK);
  EXPECT_EQ(h, 890);
  EXPECT_EQ(lt_percentage_increase(1, 0, &h), LT_ERR_USAGE);
  char* table = nullptr;
  ASSERT_EQ(lt_analyze_top((data_dir() / "cli_matches.golden.tsv").c_str(), 2, LT_FORMAT_TSV, &table),
            LT_OK);
  EXPECT_EQ(take(table), "surface\tcount\tpercent\nfish oil\t2\t25.00\nremdesivir\t2\t25.00\n");
  TempDir dir;
  write_file(dir / "a.tsv", "zinc\t2\n");
  write_file(dir / "b.tsv", "zinc\t5\noxygen\t1\n");
  uint64_t added = 0;
  ASSERT_EQ(lt_analyze_delta((dir / "a.tsv").c_str(), (dir / "b.tsv").c_str(), LT_FORMAT_MARKDOWN,
                             &added, &table),
            LT_OK);
  EXPECT_EQ(added, 4u);
  EXPECT_EQ(take(table), "| surface | added |\n| --- | ---: |\n| oxygen | 1 |\n| zinc | 3 |\n");
  const std::string a = (dir / "a.tsv").string(), b = (dir / "b.tsv").string();
  const char* paths[] = {a.c_str(), b.c_str()};
  ASSERT_EQ(lt_analyze_overlap(paths, nullptr, 2, LT_FORMAT_TSV, &table), LT_OK);
  EXPECT_EQ(take(table), "sets\tintersection\tunion\tpercent\na&b\t1\t2\t50.0\n");
  EXPECT_EQ(lt_analyze_overlap(paths, nullptr, 1, LT_FORMAT_TSV, &table), LT_ERR_USAGE);
}

TEST(CApi, SynthAndBench) {
  lt_lexicon* lex = nullptr;
  ASSERT_EQ(lt_lexicon_new(&lex), LT_OK);
  ASSERT_EQ(lt_lexicon_load(lex, (data_dir() / "drugs.tsv").c_str()), LT_OK);
  lt_synth_config cfg;
  lt_synth_config_default(&cfg);
  EXPECT_EQ(cfg.documents, 10000u);
  EXPECT_DOUBLE_EQ(cfg.perturb_rate, 0.2);
  cfg.documents = 500;
  TempDir dir;
  const std::string corpus = (dir / "c.tsv").string(), truth = (dir / "t.tsv").string(),
                    freq = (dir / "f.txt").string();
  const lt_synth_outputs outs{corpus.c_str(), truth.c_str(), freq.c_str(), nullptr};
  lt_synth_summary s{};
  ASSERT_EQ(lt_synth_corpus(lex, &cfg, &outs, &s), LT_OK);
  EXPECT_EQ(s.documents, 500u);
  EXPECT_GT(s.mentions, 0u);
  EXPECT_GT(s.perturbed, 0u);

  lt_bench_config bc;
  lt_bench_config_default(&bc);
  const std::string lexicon = (data_dir() / "drugs.tsv").string();
  const char* lexicons[] = {lexicon.c_str()};
  bc.corpus_path = corpus.c_str();
  bc.lexicon_paths = lexicons;
  bc.lexicon_count = 1;
  bc.freq_path = freq.c_str();
  bc.methods = "base,symspell";
  bc.warmup_documents = 10;
  char* report = nullptr;
  ASSERT_EQ(lt_bench(&bc, LT_FORMAT_TSV, &report), LT_OK);
  const std::string r = take(report);
  EXPECT_EQ(r.rfind("method\tgeneration_time_ms\ttotal_tagging_time_ms\t", 0), 0u);
  EXPECT_NE(r.find("\nbase\t"), std::string::npos);
  EXPECT_NE(r.find("\nsymspell\tNA\t"), std::string::npos);
  bc.methods = "base,warp";
  EXPECT_EQ(lt_bench(&bc, LT_FORMAT_TSV, &report), LT_ERR_USAGE);
  lt_lexicon_free(lex);
}

TEST(CApi, FreeAcceptsNull) {
  lt_freq_dict_free(nullptr);
  lt_index_free(nullptr);
  lt_corrections_free(nullptr);
  lt_lexicon_free(nullptr);
  lt_matches_free(nullptr);
  lt_geometry_free(nullptr);
  lt_stoplist_free(nullptr);
  lt_embeddings_free(nullptr);
  lt_misspellings_free(nullptr);
  lt_string_free(nullptr);
  EXPECT_EQ(lt_matches_size(nullptr), 0u);
}

}  // namespace
