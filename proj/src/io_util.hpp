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

#ifndef LEXITAG_SRC_IO_UTIL_HPP_
#define LEXITAG_SRC_IO_UTIL_HPP_

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

namespace lexitag::io {

class LineReader {
 public:
  explicit LineReader(const std::filesystem::path& path);

  // Next line without its terminator ('\n' or "\r\n").
  bool next(std::string& line);
  std::size_t line_number() const { return line_no_; }

 private:
  std::ifstream in_;
  std::size_t line_no_ = 0;
};

std::vector<std::string_view> split(std::string_view s, char sep);

// Writes to a sibling temporary file; commit() renames it over the target.
// Destroying an uncommitted writer removes the temporary.
class AtomicWriter {
 public:
  explicit AtomicWriter(std::filesystem::path target);
  ~AtomicWriter();
  AtomicWriter(const AtomicWriter&) = delete;
  AtomicWriter& operator=(const AtomicWriter&) = delete;

  std::ofstream& stream() { return out_; }
  void commit();

 private:
  std::filesystem::path target_;
  std::filesystem::path temp_;
  std::ofstream out_;
  bool committed_ = false;
};

bool parse_u64(std::string_view s, std::uint64_t& out);
bool parse_double(std::string_view s, double& out);

}  // namespace lexitag::io

#endif  // LEXITAG_SRC_IO_UTIL_HPP_
