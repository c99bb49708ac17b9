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

#include "lexitag/corpus_io.hpp"

#include "io_util.hpp"
#include "lexitag/errors.hpp"
#include "lexitag/normalize.hpp"
#include "lexitag/symspell.hpp"
#include "lexitag/unicode.hpp"

namespace lexitag {

bool parse_corpus_line(std::string_view line, Document& doc) {
  const std::size_t tab = line.find('\t');
  if (tab == std::string_view::npos || tab == 0) return false;
  doc.doc_id.assign(line.substr(0, tab));
  doc.text.assign(line.substr(tab + 1));
  return true;
}

struct CorpusReader::Impl {
  explicit Impl(const std::filesystem::path& path) : reader(path) {}
  io::LineReader reader;
  std::string line;
};

CorpusReader::CorpusReader(const std::filesystem::path& path)
    : impl_(std::make_unique<Impl>(path)) {}
CorpusReader::~CorpusReader() = default;
CorpusReader::CorpusReader(CorpusReader&&) noexcept = default;
CorpusReader& CorpusReader::operator=(CorpusReader&&) noexcept = default;

bool CorpusReader::next(Document& doc) {
  while (impl_->reader.next(impl_->line)) {
    if (parse_corpus_line(impl_->line, doc)) {
      ++documents_;
      return true;
    }
    ++skipped_;
  }
  return false;
}

FrequencyDictionary build_freq_dict(const std::filesystem::path& corpus,
                                    std::uint64_t* skipped_lines) {
  FrequencyDictionary dict;
  CorpusReader reader(corpus);
  Document doc;
  while (reader.next(doc)) {
    for (const auto& span : normalize(doc.text)) dict.add(span.token, 1);
  }
  if (skipped_lines != nullptr) *skipped_lines = reader.skipped_lines();
  return dict;
}

FrequencyDictionary build_freq_dict(const std::vector<Document>& docs) {
  FrequencyDictionary dict;
  for (const auto& doc : docs) {
    for (const auto& span : normalize(doc.text)) dict.add(span.token, 1);
  }
  return dict;
}

FrequencyDictionary merge(const FrequencyDictionary& a, const FrequencyDictionary& b) {
  FrequencyDictionary out = a;
  for (const auto& [token, count] : b.counts()) out.add(token, count);
  return out;
}

FrequencyDictionary inject_terms(
    FrequencyDictionary dict, const std::vector<std::pair<std::string, std::uint64_t>>& pairs) {
  for (const auto& [token, count] : pairs) {
    if (count == 0) throw DataError("injected count for '" + token + "' must be positive");
  }
  for (const auto& [token, count] : pairs) dict.raise_to(token, count);
  return dict;
}

std::vector<std::pair<std::string, std::uint64_t>> load_injection_file(
    const std::filesystem::path& path) {
  std::vector<std::pair<std::string, std::uint64_t>> pairs;
  io::LineReader reader(path);
  std::string line;
  while (reader.next(line)) {
    std::string_view view = line;
    while (!view.empty() && (view.back() == ' ' || view.back() == '\t')) view.remove_suffix(1);
    if (view.empty() || view.front() == '#') continue;
    const std::size_t sep = view.find_last_of(" \t");
    if (sep == std::string_view::npos) {
      throw DataError("expected 'token count'", reader.line_number());
    }
    std::string token = unicode::to_lower(unicode::nfc(view.substr(0, sep)));
    std::uint64_t count = 0;
    if (!io::parse_u64(view.substr(sep + 1), count) || count == 0) {
      throw DataError("injected count for '" + token + "' must be positive",
                      reader.line_number());
    }
    if (!is_valid_dictionary_token(token)) {
      throw DataError("invalid token '" + token + "'", reader.line_number());
    }
    pairs.emplace_back(std::move(token), count);
  }
  return pairs;
}

CorpusStats correct_corpus(const DeleteIndex& index, const std::filesystem::path& corpus,
                           std::ostream& out, std::size_t threads) {
  return for_each_document(
      corpus, threads, [&](const Document& doc) { return index.correct_text(doc.text); },
      [&](const Document& doc, std::string corrected) {
        out << doc.doc_id << '\t' << corrected << '\n';
      });
}

}  // namespace lexitag
