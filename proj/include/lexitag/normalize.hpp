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

#ifndef LEXITAG_NORMALIZE_HPP_
#define LEXITAG_NORMALIZE_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lexitag {

// A normalized token and the half-open code point range of the original
// text it was cut from.
struct TokenSpan {
  std::string token;
  std::size_t start = 0;
  std::size_t end = 0;

  bool operator==(const TokenSpan&) const = default;
};

// Tweet-oriented tokenizer. In order: NFC, drop URLs (http://, https://,
// www. up to the next whitespace), drop @-mentions, strip the '#' of
// hashtags, lowercase, then split on anything that is not a letter, digit,
// or an apostrophe/hyphen between two word characters.
std::vector<TokenSpan> normalize(std::string_view text);

std::vector<std::string> normalize_tokens(std::string_view text);

// normalize() followed by joining tokens with single spaces.
std::string normalize_join(std::string_view text);

}  // namespace lexitag

#endif  // LEXITAG_NORMALIZE_HPP_
