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

#include <gtest/gtest.h>

#include <chrono>
#include <random>
#include <set>

#include "lexitag/errors.hpp"
#include "oracles.hpp"

namespace lexitag {
namespace {

using Set = std::set<std::string>;

Set as_set(const std::vector<std::string>& v) { return Set(v.begin(), v.end()); }

FrequencyDictionary dict_of(std::initializer_list<std::pair<const char*, std::uint64_t>> items) {
  FrequencyDictionary d;
  for (const auto& [t, c] : items) d.add(t, c);
  return d;
}

TEST(GenerateDeletes, Examples) {
  EXPECT_EQ(as_set(generate_deletes("abc", 1)), (Set{"ab", "ac", "bc"}));
  EXPECT_EQ(as_set(generate_deletes("aa", 1)), (Set{"a"}));
  EXPECT_EQ(as_set(generate_deletes("abcd", 2)),
            (Set{"abc", "abd", "acd", "bcd", "ab", "ac", "ad", "bc", "bd", "cd"}));
  EXPECT_TRUE(generate_deletes("", 2).empty());
  EXPECT_EQ(as_set(generate_deletes("ab", 3)), (Set{"a", "b", ""}));
}

TEST(GenerateDeletes, MatchesMaskEnumeration) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const std::string w = oracle::random_word(rng, 0, 10, "abcab");
    for (Distance d = 1; d <= 3; ++d) {
      const auto got = generate_deletes(w, d);
      ASSERT_TRUE(std::is_sorted(got.begin(), got.end()));
      ASSERT_EQ(as_set(got).size(), got.size());
      ASSERT_EQ(as_set(got), oracle::deletes(w, d)) << w << " d=" << d;
    }
  }
}

TEST(GenerateDeletes, CountsCodePoints) {
  EXPECT_EQ(as_set(generate_deletes("\xC3\xA9t\xC3\xA9", 1)), (Set{"t\xC3\xA9", "\xC3\xA9\xC3\xA9", "\xC3\xA9t"}));
}

TEST(DeleteIndex, RejectsBadConfiguration) {
  const auto d = dict_of({{"ab", 5}});
  EXPECT_THROW(DeleteIndex(d, 0), UsageError);
  EXPECT_THROW(DeleteIndex(d, 4), UsageError);
  EXPECT_THROW(DeleteIndex(FrequencyDictionary{}, 2), UsageError);
  const DeleteIndex index(d, 1);
  EXPECT_THROW((void)index.lookup("ab", 2), UsageError);
}

TEST(DeleteIndex, VariantMap) {
  const DeleteIndex one(dict_of({{"ab", 5}}), 1);
  EXPECT_EQ(one.originals_for("ab"), (std::vector<std::string>{"ab"}));
  EXPECT_EQ(one.originals_for("a"), (std::vector<std::string>{"ab"}));
  EXPECT_EQ(one.originals_for("b"), (std::vector<std::string>{"ab"}));
  EXPECT_TRUE(one.originals_for("").empty());
  EXPECT_TRUE(one.originals_for("ba").empty());
  EXPECT_EQ(one.key_count(), 3u);

  const DeleteIndex two(dict_of({{"abc", 2}, {"abd", 3}}), 1);
  EXPECT_EQ(two.originals_for("ab"), (std::vector<std::string>{"abc", "abd"}));
  EXPECT_EQ(two.originals_for("bc"), (std::vector<std::string>{"abc"}));
}

TEST(DeleteIndex, LookupExamples) {
  const DeleteIndex index(dict_of({{"chloroquine", 100}, {"remdesivir", 50}}), 2);
  EXPECT_EQ(index.lookup("cloroquine", 1),
            (std::vector<Correction>{{"cloroquine", "chloroquine", 1, 100}}));
  EXPECT_EQ(index.lookup("chloroquine", 1),
            (std::vector<Correction>{{"chloroquine", "chloroquine", 0, 100}}));
  EXPECT_TRUE(index.lookup("zzz", 1).empty());
}

TEST(DeleteIndex, Ordering) {
  const DeleteIndex index(dict_of({{"cat", 5}, {"bat", 9}, {"hat", 9}, {"cart", 20}, {"at", 1}}), 2);
  const auto all = index.lookup("cat", 2, LookupMode::kAll);
  std::vector<std::string> order;
  for (const auto& c : all) order.push_back(c.corrected);
  EXPECT_EQ(order, (std::vector<std::string>{"cat", "cart", "bat", "hat", "at"}));
  const auto closest = index.lookup("zat", 2, LookupMode::kClosest);
  ASSERT_EQ(closest.size(), 4u);
  EXPECT_EQ(closest[0].corrected, "bat");
  EXPECT_EQ(closest[1].corrected, "hat");
  EXPECT_EQ(closest[2].corrected, "cat");
  EXPECT_EQ(closest[3].corrected, "at");
}

TEST(DeleteIndex, MatchesBruteForce) {
  std::mt19937_64 rng(17);
  std::vector<std::string> words;
  FrequencyDictionary dict;
  while (dict.size() < 400) {
    std::string w = oracle::random_word(rng, 1, 8, "abcdef");
    if (!dict.contains(w)) words.push_back(w);
    dict.add(w, 1 + rng() % 1000);
  }
  const DeleteIndex index(dict, 2);
  for (int q = 0; q < 200; ++q) {
    const std::string query = oracle::perturb(words[rng() % words.size()], rng, rng() % 4, "abcdef");
    for (Distance d = 0; d <= 2; ++d) {
      Set got;
      for (const auto& c : index.lookup(query, d, LookupMode::kAll)) {
        ASSERT_EQ(c.distance, oracle::osa(query, c.corrected));
        ASSERT_EQ(c.frequency, dict.count(c.corrected));
        got.insert(c.corrected);
      }
      ASSERT_EQ(got, oracle::within(words, query, d)) << query << " d=" << d;
    }
  }
}

TEST(DeleteIndex, SelfLookup) {
  std::mt19937_64 rng(5);
  FrequencyDictionary dict;
  while (dict.size() < 2000) dict.add(oracle::random_word(rng, 2, 10), 1 + rng() % 50);
  const DeleteIndex index(dict, 2);
  for (const auto& [t, c] : dict.counts()) {
    ASSERT_EQ(index.lookup(t, 0), (std::vector<Correction>{{t, t, 0, c}}));
  }
}

TEST(CorrectToken, Exemptions) {
  const DeleteIndex index(dict_of({{"chloroquine", 100}, {"covid", 10}, {"ab", 4}}), 2);
  EXPECT_EQ(index.correct_token("chloroquine"), "chloroquine");
  EXPECT_EQ(index.correct_token("cloroquine"), "chloroquine");
  EXPECT_EQ(index.correct_token("covid19"), "covid19");
  EXPECT_EQ(index.correct_token("ax"), "ax");
  EXPECT_EQ(index.correct_token("qqqqqqq"), "qqqqqqq");
  EXPECT_TRUE(is_correction_exempt("a1b2"));
  EXPECT_TRUE(is_correction_exempt("ab"));
  EXPECT_FALSE(is_correction_exempt("abc"));
}

TEST(CorrectText, Examples) {
  const DeleteIndex index(dict_of({{"took", 10}, {"chloroquine", 10}, {"today", 10}}), 2);
  EXPECT_EQ(index.correct_text("took CLOROQUINE today"), "took chloroquine today");
  EXPECT_EQ(index.correct_text(""), "");
  const std::string once = index.correct_text("Tookk #cloroquin todya!! @bob http://x.y");
  EXPECT_EQ(once, "took chloroquine today");
  EXPECT_EQ(index.correct_text(once), once);
}

TEST(Norvig, Candidates) {
  EXPECT_EQ(as_set(norvig_candidates("ab", U"ab")),
            (Set{"a", "b", "ba", "bb", "aa", "aab", "bab", "abb", "aba"}));
  EXPECT_EQ(as_set(norvig_candidates("a", U"a")), (Set{"", "aa"}));
  const Set cocaine = as_set(norvig_candidates("cocaine"));
  EXPECT_TRUE(cocaine.contains("cocaint"));
  EXPECT_TRUE(cocaine.contains("xocaine"));
  EXPECT_FALSE(cocaine.contains("cocaine"));
}

TEST(Norvig, CandidatesAreExactlyDistanceOne) {
  std::mt19937_64 rng(23);
  const std::string alpha = "abc";
  for (int i = 0; i < 100; ++i) {
    const std::string w = oracle::random_word(rng, 0, 5, alpha);
    Set expected;
    // Every string over the alphabet within one length of w.
    for (std::size_t len = w.size() == 0 ? 0 : w.size() - 1; len <= w.size() + 1; ++len) {
      std::size_t total = 1;
      for (std::size_t k = 0; k < len; ++k) total *= alpha.size();
      for (std::size_t n = 0; n < total; ++n) {
        std::string s;
        for (std::size_t k = 0, m = n; k < len; ++k, m /= alpha.size()) s.push_back(alpha[m % alpha.size()]);
        if (oracle::osa(w, s) == 1) expected.insert(s);
      }
    }
    ASSERT_EQ(as_set(norvig_candidates(w, U"abc")), expected) << w;
  }
}

TEST(Norvig, Correct) {
  const auto dict = dict_of({{"chloroquine", 100}, {"zinc", 5}, {"zing", 5}});
  EXPECT_EQ(norvig_correct(dict, "zinc"), "zinc");
  EXPECT_EQ(norvig_correct(dict, "cloroquine"), "chloroquine");
  EXPECT_EQ(norvig_correct(dict, "cloroquin"), "chloroquine");
  EXPECT_EQ(norvig_correct(dict, "zinz"), "zinc");
  EXPECT_EQ(norvig_correct(dict, "qqqqq"), "qqqqq");
}

TEST(Norvig, AgreesWithSymspellNearUniqueBest) {
  std::mt19937_64 rng(29);
  FrequencyDictionary dict;
  std::vector<std::string> words;
  std::uint64_t next_count = 1;
  while (dict.size() < 300) {
    const std::string w = oracle::random_word(rng, 4, 8, "abcdefgh");
    if (dict.contains(w)) continue;
    words.push_back(w);
    dict.add(w, next_count++);  // distinct counts, so the best is unique
  }
  const DeleteIndex index(dict, 2);
  int checked = 0;
  while (checked < 200) {
    const std::string q = oracle::perturb(words[rng() % words.size()], rng, 1, "abcdefgh");
    if (dict.contains(q) || is_correction_exempt(q)) continue;
    ASSERT_EQ(norvig_correct(dict, q, U"abcdefgh"), index.correct_token(q)) << q;
    ++checked;
  }
}

TEST(DeleteIndex, LargeBuildIsFast) {
  std::mt19937_64 rng(31);
  FrequencyDictionary dict;
  while (dict.size() < 500000) dict.add(oracle::random_word(rng, 3, 12), 1 + rng() % 100000);
  const auto t0 = std::chrono::steady_clock::now();
  const DeleteIndex index(dict, 2);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  EXPECT_LT(seconds, 30.0);
  EXPECT_EQ(index.token_count(), 500000u);
  const auto& some = *dict.counts().begin();
  EXPECT_EQ(index.lookup(some.first, 0).size(), 1u);
}

}  // namespace
}  // namespace lexitag
