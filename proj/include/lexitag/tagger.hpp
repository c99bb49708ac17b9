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

#ifndef LEXITAG_TAGGER_HPP_
#define LEXITAG_TAGGER_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lexitag/core_model.hpp"
#include "lexitag/normalize.hpp"

namespace lexitag {

// Greedy longest-match, non-overlapping lexicon scan over normalize(text).
// Every occurrence is reported. Offsets are code point positions in the
// original text. Unless method is given, each match is labelled by the
// source of the entry it hit.
std::vector<TagMatch> tag_document(const Lexicon& lex, const Document& doc,
                                   std::optional<MatchMethod> method = std::nullopt);

struct TagSummary {
  std::uint64_t total_matches = 0;
  std::uint64_t documents = 0;
  std::uint64_t documents_with_match = 0;
  std::uint64_t skipped_lines = 0;
  std::map<std::string, std::uint64_t> per_surface;

  void add(const std::vector<TagMatch>& matches);
};

struct TagOptions {
  std::optional<MatchMethod> method;
  std::size_t threads = 1;
};

// Tags a corpus file and writes one matches-TSV line per match to out, in
// corpus order regardless of thread count.
TagSummary tag_corpus(const Lexicon& lex, const std::filesystem::path& corpus, std::ostream& out,
                      const TagOptions& options = {});

// Same, over in-memory documents.
TagSummary tag_corpus(const Lexicon& lex, const std::vector<Document>& docs, std::ostream* out,
                      std::optional<MatchMethod> method = std::nullopt);

}  // namespace lexitag

#endif  // LEXITAG_TAGGER_HPP_
