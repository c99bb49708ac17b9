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

// Runs the lexitag binary as a subprocess.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <string>

#include "test_util.hpp"

namespace {

using lexitag::testing::data_dir;
using lexitag::testing::read_file;
using lexitag::testing::TempDir;
using lexitag::testing::write_file;

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

class Cli : public ::testing::Test {
 protected:
  Outcome run(const std::string& args) {
    const auto out = dir_ / "stdout.txt", err = dir_ / "stderr.txt";
    const std::string cmd =
        std::string(LEXITAG_CLI) + " " + args + " >" + out.string() + " 2>" + err.string();
    const int status = std::system(cmd.c_str());
    Outcome r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = read_file(out);
    r.err = read_file(err);
    return r;
  }
  std::string data(const std::string& name) const { return (data_dir() / name).string(); }
  std::string tmp(const std::string& name) const { return (dir_ / name).string(); }

  TempDir dir_;
};

TEST_F(Cli, TagMatchesGolden) {
  const Outcome r = run("tag --lexicon " + data("cli_lexicon.tsv") + " --corpus " +
                    data("cli_corpus.tsv") + " --out " + tmp("m.tsv"));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read_file(tmp("m.tsv")), read_file(data("cli_matches.golden.tsv")));
  EXPECT_EQ(r.out.rfind("OK ", 0), 0u);
  EXPECT_NE(r.out.find("matches=8"), std::string::npos);
  EXPECT_NE(r.out.find("skipped_lines=1"), std::string::npos);
}

TEST_F(Cli, TagMethodAndThreads) {
  const Outcome r = run("tag --lexicon " + data("cli_lexicon.tsv") + " --corpus " +
                    data("cli_corpus.tsv") + " --out " + tmp("m.tsv") +
                    " --method keyboard --threads 4");
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string m = read_file(tmp("m.tsv"));
  EXPECT_EQ(m.find("\tbase\n"), std::string::npos);
  EXPECT_NE(m.find("\tkeyboard\n"), std::string::npos);
}

TEST_F(Cli, UsageErrors) {
  Outcome r = run("");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE((r.out + r.err).find("build-freq"), std::string::npos);
  r = run("tag --lexicon x --corpus y --out z --bogus");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE((r.out + r.err).find("--bogus"), std::string::npos);
  r = run("frobnicate");
  EXPECT_EQ(r.code, 1);
  r = run("correct --freq f --corpus c --out o --max-distance 4");
  EXPECT_EQ(r.code, 1);
  r = run("analyze increase --additional 5 --base 0");
  EXPECT_EQ(r.code, 1);
  r = run("gen-misspell keyboard");
  EXPECT_EQ(r.code, 1);
}

TEST_F(Cli, DataErrors) {
  write_file(tmp("bad.tsv"), "D1\tzinc\nnot a lexicon line\n");
  Outcome r = run("tag --lexicon " + tmp("bad.tsv") + " --corpus " + data("cli_corpus.tsv") +
              " --out " + tmp("m.tsv"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
  r = run("tag --lexicon " + tmp("absent.tsv") + " --corpus " + data("cli_corpus.tsv") +
          " --out " + tmp("m.tsv"));
  EXPECT_EQ(r.code, 2);
  write_file(tmp("inject.txt"), "covid 0\n");
  r = run("build-freq --corpus " + data("cli_corpus.tsv") + " --out " + tmp("f.txt") +
          " --inject " + tmp("inject.txt"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("covid"), std::string::npos);
}

TEST_F(Cli, AnalyzeIncrease) {
  const Outcome r = run("analyze increase --additional 132083 --base 1483691");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 5), "8.90\n");
  EXPECT_NE(r.out.find("OK percent=8.90"), std::string::npos);
}

TEST_F(Cli, AnalyzeTables) {
  const std::string golden = data("cli_matches.golden.tsv");
  Outcome r = run("analyze top --n 1 " + golden);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find("OK")), "surface\tcount\tpercent\nfish oil\t2\t25.00\n");
  write_file(tmp("base.tsv"), "fish oil\t1\nzinc\t3\n");
  r = run("analyze delta --format md " + tmp("base.tsv") + " " + golden);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("| fish oil | 1 |"), std::string::npos);
  EXPECT_NE(r.out.find("OK added_total=6"), std::string::npos);
  r = run("analyze overlap --name base --name tagged " + tmp("base.tsv") + " " + golden);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("base&tagged\t2\t6\t33.3"), std::string::npos) << r.out;
}

TEST_F(Cli, BuildFreqAndCorrect) {
  write_file(tmp("inject.txt"), "covid 1000\n");
  Outcome r = run("build-freq --corpus " + data("cli_corpus.tsv") + " --out " + tmp("f.txt") +
              " --inject " + tmp("inject.txt"));
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string freq = read_file(tmp("f.txt"));
  EXPECT_EQ(freq.substr(0, 11), "covid 1000\n");
  EXPECT_NE(freq.find("remdesivir 2\n"), std::string::npos);
  write_file(tmp("noisy.tsv"), "a\tremdesivr and hydroxychloroquin\nb\tFISH oyl\n");
  r = run("correct --freq " + tmp("f.txt") + " --corpus " + tmp("noisy.tsv") + " --out " +
          tmp("fixed.tsv") + " --threads 2");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read_file(tmp("fixed.tsv")), "a\tremdesivir and hydroxychloroquine\nb\tfish oil\n");
}

TEST_F(Cli, GenerateMisspellings) {
  Outcome r = run("gen-misspell keyboard --term cocaine --threshold 2.0");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("cocaine\txocaine\tkeyboard\tpos=0\n"), std::string::npos);
  EXPECT_NE(r.out.find("cocaine\tcocaint\tkeyboard\tpos=6\n"), std::string::npos);
  write_file(tmp("stop.txt"), "oxycodones\n");
  r = run("gen-misspell embedding --term oxycodone --embeddings " + data("embed50.vec") +
          " --k 4 --stoplist " + tmp("stop.txt") + " --out " + tmp("v.tsv"));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("variants=5"), std::string::npos);
  r = run("gen-misspell keyboard --lexicon " + data("cli_lexicon.tsv") + " --out " + tmp("k.tsv"));
  ASSERT_EQ(r.code, 0) << r.err;
  // Generated files load as lexicons.
  r = run("tag --lexicon " + data("cli_lexicon.tsv") + " --lexicon " + tmp("v.tsv") + " --lexicon " +
          tmp("k.tsv") + " --corpus " + data("cli_corpus.tsv") + " --out " + tmp("m.tsv"));
  ASSERT_EQ(r.code, 0) << r.err;
}

TEST_F(Cli, SynthCorpusIsSeeded) {
  const std::string lex = data("drugs.tsv");
  ASSERT_EQ(run("synth-corpus --lexicon " + lex + " --docs 300 --seed 9 --out " + tmp("a.tsv") +
                " --truth " + tmp("ta.tsv"))
                .code,
            0);
  ASSERT_EQ(run("synth-corpus --lexicon " + lex + " --docs 300 --seed 9 --out " + tmp("b.tsv")).code, 0);
  ASSERT_EQ(run("synth-corpus --lexicon " + lex + " --docs 300 --seed 10 --out " + tmp("c.tsv")).code, 0);
  EXPECT_EQ(read_file(tmp("a.tsv")), read_file(tmp("b.tsv")));
  EXPECT_NE(read_file(tmp("a.tsv")), read_file(tmp("c.tsv")));
  EXPECT_FALSE(read_file(tmp("ta.tsv")).empty());
}

TEST_F(Cli, BenchBaseOnly) {
  const std::string lex = data("drugs.tsv");
  ASSERT_EQ(run("synth-corpus --lexicon " + lex + " --docs 300 --out " + tmp("c.tsv")).code, 0);
  const Outcome r = run("bench --methods base --lexicon " + lex + " --corpus " + tmp("c.tsv"));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("method\tgeneration_time_ms\ttotal_tagging_time_ms\t"
                        "avg_tagging_time_ms_per_600000_docs\nbase\t",
                        0),
            0u);
  const Outcome missing = run("bench --methods symspell --lexicon " + lex + " --corpus " + tmp("c.tsv"));
  EXPECT_EQ(missing.code, 1);
  EXPECT_NE(missing.err.find("--freq"), std::string::npos);
}

}  // namespace
