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

#include "lexitag/core_model.hpp"

#include <gtest/gtest.h>

#include <random>

#include "lexitag/errors.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace lexitag {
namespace {

using testing::read_file;
using testing::TempDir;
using testing::write_file;

TEST(Lexicon, NormalizesSurfaces) {
  Lexicon lex;
  EXPECT_EQ(lex.add("D1", "  Vitamin   D "), Lexicon::AddResult::kAdded);
  EXPECT_EQ(lex.add("D2", "ZINC"), Lexicon::AddResult::kAdded);
  EXPECT_EQ(lex.add("D3", "vitamin d"), Lexicon::AddResult::kDuplicate);
  EXPECT_EQ(lex.add("", "oxygen"), Lexicon::AddResult::kRejected);
  EXPECT_EQ(lex.add("D4", "!!"), Lexicon::AddResult::kRejected);
  EXPECT_EQ(lex.add("D5", "a b c d e f"), Lexicon::AddResult::kRejected);
  EXPECT_EQ(lex.add("D6", "a b c d e"), Lexicon::AddResult::kAdded);
  ASSERT_NE(lex.find("vitamin d"), nullptr);
  EXPECT_EQ(lex.find("vitamin d")->term_id, "D1");
  EXPECT_EQ(lex.find("zinc")->surface, "zinc");
  EXPECT_EQ(lex.size(), 3u);
  EXPECT_EQ(lex.max_phrase_len(), 5u);
  EXPECT_EQ(lex.duplicates(), 1u);
  EXPECT_EQ(lex.rejected(), 3u);
  EXPECT_TRUE(lex.starts_phrase("vitamin"));
  EXPECT_FALSE(lex.starts_phrase("zinc"));
}

TEST(Lexicon, LoadLayouts) {
  TempDir dir;
  write_file(dir / "lex.tsv",
             "# drugs\nD1\tZinc\n\nD2\tvitamin d\r\nD3\tzinc\nD4\tzync\tkeyboard\n");
  write_file(dir / "variants.tsv", "zinc\tzimc\tkeyboard\tpos=2\nzinc\tzinnc\tembedding\tscore=0.9;round=1\n");
  Lexicon lex;
  lex.load(dir / "lex.tsv");
  lex.load(dir / "variants.tsv");
  ASSERT_EQ(lex.size(), 5u);
  EXPECT_EQ(lex.duplicates(), 1u);
  EXPECT_EQ(lex.find("zync")->source, TermSource::kKeyboard);
  EXPECT_EQ(lex.find("zimc")->term_id, "zinc");
  EXPECT_EQ(lex.find("zinnc")->source, TermSource::kEmbedding);
  EXPECT_EQ(lex.max_phrase_len(), 2u);
}

TEST(Lexicon, LoadErrors) {
  TempDir dir;
  write_file(dir / "bad.tsv", "D1\tzinc\nno tab here\n");
  try {
    Lexicon::from_file(dir / "bad.tsv");
    FAIL();
  } catch (const DataError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  write_file(dir / "src.tsv", "D1\tzinc\tnonsense\n");
  EXPECT_THROW(Lexicon::from_file(dir / "src.tsv"), DataError);
  EXPECT_THROW(Lexicon::from_file(dir / "absent.tsv"), IoError);
}

TEST(Lexicon, RoundTrip) {
  TempDir dir;
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    Lexicon lex;
    for (int i = 0; i < 50; ++i) {
      std::string surface = oracle::random_word(rng, 1, 8);
      if (rng() % 3 == 0) surface += " " + oracle::random_word(rng, 1, 5);
      lex.add("T" + std::to_string(i), surface, static_cast<TermSource>(rng() % 3));
    }
    lex.save(dir / "lex.tsv");
    EXPECT_EQ(Lexicon::from_file(dir / "lex.tsv"), lex);
  }
}

TEST(FrequencyDictionary, AddAndValidate) {
  FrequencyDictionary d;
  d.add("zinc", 2);
  d.add("zinc", 3);
  d.add("oxygen", 1);
  EXPECT_EQ(d.count("zinc"), 5u);
  EXPECT_EQ(d.count("absent"), 0u);
  EXPECT_EQ(d.total(), 6u);
  EXPECT_THROW(d.add("", 1), DataError);
  EXPECT_THROW(d.add("two words", 1), DataError);
  EXPECT_THROW(d.add("Zinc", 1), DataError);
  EXPECT_THROW(d.add("zinc", 0), DataError);
  d.raise_to("zinc", 4);
  EXPECT_EQ(d.count("zinc"), 5u);
  d.raise_to("zinc", 9);
  EXPECT_EQ(d.count("zinc"), 9u);
  EXPECT_EQ(d.total(), 10u);
  EXPECT_EQ(d.sorted(), (std::vector<FrequencyDictionary::Entry>{{"zinc", 9}, {"oxygen", 1}}));
}

TEST(FrequencyDictionary, LoadNormalizesAndSums) {
  TempDir dir;
  write_file(dir / "f.txt", "Zinc 3\nzinc 2\nCAFE\xCC\x81 4\n\ncaf\xC3\xA9 1\n");
  const auto d = FrequencyDictionary::load(dir / "f.txt");
  EXPECT_EQ(d.count("zinc"), 5u);
  EXPECT_EQ(d.count("caf\xC3\xA9"), 5u);
  EXPECT_EQ(d.total(), 10u);
  write_file(dir / "bad.txt", "zinc 3\nzinc x\n");
  try {
    FrequencyDictionary::load(dir / "bad.txt");
    FAIL();
  } catch (const DataError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(FrequencyDictionary, RoundTrip) {
  TempDir dir;
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    FrequencyDictionary d;
    for (int i = 0; i < 200; ++i) d.add(oracle::random_word(rng, 1, 9), 1 + rng() % 100);
    d.save(dir / "f.txt");
    const auto back = FrequencyDictionary::load(dir / "f.txt");
    EXPECT_EQ(back, d);
    EXPECT_EQ(back.total(), d.total());
    d.save(dir / "g.txt");
    EXPECT_EQ(read_file(dir / "f.txt"), read_file(dir / "g.txt"));
  }
}

TEST(FormatMatch, SevenColumns) {
  const TagMatch m{"d1", 3, 7, "Zi\tnc", "zinc", "D1", MatchMethod::kSymspellCorrected};
  EXPECT_EQ(format_match(m), "d1\t3\t7\tZi nc\tzinc\tD1\tsymspell-corrected");
}

TEST(MisspellingSet, Invariants) {
  MisspellingSet s("heroin");
  EXPECT_TRUE(s.add(Variant{"heorin", Generator::kKeyboard, 2, 0, 0}));
  EXPECT_FALSE(s.add(Variant{"heroin", Generator::kKeyboard, 0, 0, 0}));
  EXPECT_FALSE(s.add(Variant{"", Generator::kKeyboard, 0, 0, 0}));
  EXPECT_FALSE(s.add(Variant{"Herion", Generator::kKeyboard, 0, 0, 0}));
  EXPECT_FALSE(s.add(Variant{"heorin", Generator::kEmbedding, 0, 0.5, 1}));
  EXPECT_TRUE(s.add(Variant{"herion", Generator::kEmbedding, 0, 0.5, 1}));
  EXPECT_EQ(s.to_tsv(),
            "heroin\theorin\tkeyboard\tpos=2\nheroin\therion\tembedding\tscore=0.500000;round=1\n");
}

TEST(Labels, RoundTrip) {
  for (auto m : {MatchMethod::kBase, MatchMethod::kKeyboard, MatchMethod::kEmbedding,
                 MatchMethod::kSymspellCorrected}) {
    EXPECT_EQ(parse_match_method(to_string(m)), m);
  }
  for (auto s : {TermSource::kBase, TermSource::kKeyboard, TermSource::kEmbedding}) {
    EXPECT_EQ(parse_term_source(to_string(s)), s);
  }
  EXPECT_FALSE(parse_match_method("nope").has_value());
}

}  // namespace
}  // namespace lexitag
