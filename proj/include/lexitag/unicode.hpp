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

#ifndef LEXITAG_UNICODE_HPP_
#define LEXITAG_UNICODE_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lexitag::unicode {

// Decodes UTF-8 into code points. Ill-formed sequences become U+FFFD.
std::u32string decode(std::string_view utf8);
std::string encode(std::u32string_view cps);
void append(std::string& out, char32_t cp);

// Number of code points in a UTF-8 string.
std::size_t length(std::string_view utf8);

bool is_ascii(std::string_view s);

// Canonical composition of the whole string.
std::string nfc(std::string_view utf8);

// NFC-composed code points, each tagged with the half-open code point range of
// the original text it came from. Composition is done per normalization
// segment so every output code point maps back to one source segment.
struct MappedText {
  std::u32string cps;
  std::vector<std::size_t> src_begin;
  std::vector<std::size_t> src_end;
};
MappedText nfc_mapped(std::string_view utf8);

// Simple (1:1) lowercase mapping, so offsets are preserved.
char32_t to_lower(char32_t cp);
std::string to_lower(std::string_view utf8);

bool is_letter(char32_t cp);
bool is_digit(char32_t cp);
bool is_mark(char32_t cp);
bool is_space(char32_t cp);

}  // namespace lexitag::unicode

#endif  // LEXITAG_UNICODE_HPP_
