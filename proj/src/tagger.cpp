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

#include "lexitag/tagger.hpp"

#include <algorithm>

#include "lexitag/corpus_io.hpp"
#include "lexitag/unicode.hpp"

namespace lexitag {

std::vector<TagMatch> tag_document(const Lexicon& lex, const Document& doc,
                                   std::optional<MatchMethod> method) {
  std::vector<TagMatch> out;
  if (lex.empty()) return out;
  const std::vector<TokenSpan> spans = normalize(doc.text);
  std::u32string original;

  std::string key;
  std::size_t i = 0;
  while (i < spans.size()) {
    const std::size_t longest =
        lex.starts_phrase(spans[i].token) ? std::min(lex.max_phrase_len(), spans.size() - i) : 1;
    const LexiconEntry* hit = nullptr;
    std::size_t len = longest;
    for (; len >= 1; --len) {
      key.clear();
      for (std::size_t t = i; t < i + len; ++t) {
        if (t > i) key.push_back(' ');
        key += spans[t].token;
      }
      if ((hit = lex.find(key)) != nullptr) break;
    }
    if (hit == nullptr) {
      ++i;
      continue;
    }
    if (original.empty()) original = unicode::decode(doc.text);
    const std::size_t start = spans[i].start;
    const std::size_t end = spans[i + len - 1].end;
    out.push_back(TagMatch{doc.doc_id, start, end,
                           unicode::encode(std::u32string_view(original).substr(start, end - start)),
                           hit->surface, hit->term_id, method.value_or(method_for(hit->source))});
    i += len;
  }
  return out;
}

void TagSummary::add(const std::vector<TagMatch>& matches) {
  ++documents;
  if (!matches.empty()) ++documents_with_match;
  total_matches += matches.size();
  for (const auto& m : matches) ++per_surface[m.canonical_surface];
}

TagSummary tag_corpus(const Lexicon& lex, const std::filesystem::path& corpus, std::ostream& out,
                      const TagOptions& options) {
  TagSummary summary;
  const CorpusStats stats = for_each_document(
      corpus, options.threads,
      [&](const Document& doc) { return tag_document(lex, doc, options.method); },
      [&](const Document&, std::vector<TagMatch> matches) {
        summary.add(matches);
        for (const auto& m : matches) out << format_match(m) << '\n';
      });
  summary.skipped_lines = stats.skipped_lines;
  return summary;
}

TagSummary tag_corpus(const Lexicon& lex, const std::vector<Document>& docs, std::ostream* out,
                      std::optional<MatchMethod> method) {
  TagSummary summary;
  for (const auto& doc : docs) {
    auto matches = tag_document(lex, doc, method);
    summary.add(matches);
    if (out != nullptr) {
      for (const auto& m : matches) *out << format_match(m) << '\n';
    }
  }
  return summary;
}

}  // namespace lexitag
