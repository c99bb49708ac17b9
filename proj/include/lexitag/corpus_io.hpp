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

#ifndef LEXITAG_CORPUS_IO_HPP_
#define LEXITAG_CORPUS_IO_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "lexitag/core_model.hpp"

namespace lexitag {

class DeleteIndex;

// doc_id<TAB>text. Text may itself contain tabs; everything after the first
// one belongs to it. Returns false for lines without a tab or with an empty id.
bool parse_corpus_line(std::string_view line, Document& doc);

// Streams documents from a corpus file, skipping malformed lines.
class CorpusReader {
 public:
  explicit CorpusReader(const std::filesystem::path& path);
  ~CorpusReader();
  CorpusReader(CorpusReader&&) noexcept;
  CorpusReader& operator=(CorpusReader&&) noexcept;

  bool next(Document& doc);
  std::uint64_t documents() const { return documents_; }
  std::uint64_t skipped_lines() const { return skipped_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::uint64_t documents_ = 0;
  std::uint64_t skipped_ = 0;
};

struct CorpusStats {
  std::uint64_t documents = 0;
  std::uint64_t skipped_lines = 0;
};

// Applies fn to every document on up to `threads` worker threads and hands
// each (document, result) pair to sink on the calling thread, in corpus
// order. Documents are read in bounded batches, so memory does not grow
// with corpus size.
template <typename Fn, typename Sink>
CorpusStats for_each_document(const std::filesystem::path& corpus, std::size_t threads, Fn&& fn,
                              Sink&& sink) {
  using Result = std::decay_t<decltype(fn(std::declval<const Document&>()))>;
  threads = threads == 0 ? 1 : threads;
  const std::size_t batch_size = 1024 * threads;

  CorpusReader reader(corpus);
  std::vector<Document> batch;
  std::vector<Result> results;
  bool more = true;
  while (more) {
    batch.clear();
    Document doc;
    while (batch.size() < batch_size && (more = reader.next(doc))) batch.push_back(std::move(doc));
    if (batch.empty()) break;

    results.assign(batch.size(), Result{});
    const std::size_t workers = std::min(threads, batch.size());
    if (workers <= 1) {
      for (std::size_t i = 0; i < batch.size(); ++i) results[i] = fn(batch[i]);
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          for (std::size_t i = w; i < batch.size(); i += workers) results[i] = fn(batch[i]);
        });
      }
    }
    for (std::size_t i = 0; i < batch.size(); ++i) sink(batch[i], std::move(results[i]));
  }
  return CorpusStats{reader.documents(), reader.skipped_lines()};
}

// Token counts over normalize() of every document's text.
FrequencyDictionary build_freq_dict(const std::filesystem::path& corpus,
                                    std::uint64_t* skipped_lines = nullptr);
FrequencyDictionary build_freq_dict(const std::vector<Document>& docs);

// Key-wise sum.
FrequencyDictionary merge(const FrequencyDictionary& a, const FrequencyDictionary& b);

// Raises each token to at least the injected count; never lowers a count.
// A zero count is rejected with DataError naming the token.
FrequencyDictionary inject_terms(
    FrequencyDictionary dict, const std::vector<std::pair<std::string, std::uint64_t>>& pairs);

// Injection file in the frequency dictionary format ("token count").
std::vector<std::pair<std::string, std::uint64_t>> load_injection_file(
    const std::filesystem::path& path);

// Writes doc_id<TAB>corrected text for every document, in corpus order.
CorpusStats correct_corpus(const DeleteIndex& index, const std::filesystem::path& corpus,
                           std::ostream& out, std::size_t threads = 1);

}  // namespace lexitag

#endif  // LEXITAG_CORPUS_IO_HPP_
