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

#include "lexitag/normalize.hpp"

#include <array>

#include "lexitag/unicode.hpp"

namespace lexitag {
namespace {

namespace u = unicode;

bool is_word(char32_t c) { return u::is_letter(c) || u::is_digit(c); }

bool is_joiner(char32_t c) {
  return c == U'\'' || c == U'-' || c == U'\u2019' || c == U'\u2010';
}

bool starts_with_ci(const std::u32string& s, std::size_t at, std::u32string_view prefix) {
  if (s.size() - at < prefix.size()) return false;
  for (std::size_t k = 0; k < prefix.size(); ++k) {
    if (u::to_lower(s[at + k]) != prefix[k]) return false;
  }
  return true;
}

void mark_urls(const std::u32string& cps, std::vector<bool>& removed) {
  static constexpr std::array<std::u32string_view, 3> kPrefixes = {
      U"http://", U"https://", U"www."};
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (i > 0 && is_word(cps[i - 1])) continue;
    bool hit = false;
    for (auto p : kPrefixes) hit = hit || starts_with_ci(cps, i, p);
    if (!hit) continue;
    std::size_t j = i;
    while (j < cps.size() && !u::is_space(cps[j])) removed[j++] = true;
    i = j;
  }
}

void mark_mentions(const std::u32string& cps, std::vector<bool>& removed) {
  const auto mention_char = [](char32_t c) {
    return is_word(c) || u::is_mark(c) || c == U'_';
  };
  for (std::size_t i = 0; i + 1 < cps.size(); ++i) {
    if (cps[i] != U'@' || removed[i]) continue;
    if (i > 0 && is_word(cps[i - 1])) continue;
    if (!mention_char(cps[i + 1])) continue;
    std::size_t j = i;
    removed[j++] = true;
    while (j < cps.size() && mention_char(cps[j])) removed[j++] = true;
    i = j - 1;
  }
}

void mark_hashes(const std::u32string& cps, std::vector<bool>& removed) {
  for (std::size_t i = 0; i + 1 < cps.size(); ++i) {
    if (cps[i] == U'#' && is_word(cps[i + 1])) removed[i] = true;
  }
}

}  // namespace

std::vector<TokenSpan> normalize(std::string_view text) {
  std::vector<TokenSpan> out;
  if (text.empty()) return out;

  u::MappedText m = u::nfc_mapped(text);
  std::u32string& cps = m.cps;
  std::vector<bool> removed(cps.size(), false);
  mark_urls(cps, removed);
  mark_mentions(cps, removed);
  mark_hashes(cps, removed);
  for (char32_t& c : cps) c = u::to_lower(c);

  const auto live = [&](std::size_t i) { return i < cps.size() && !removed[i]; };

  std::size_t i = 0;
  while (i < cps.size()) {
    if (!live(i) || !is_word(cps[i])) {
      ++i;
      continue;
    }
    const std::size_t first = i;
    std::string token;
    while (live(i)) {
      const char32_t c = cps[i];
      if (is_word(c) || u::is_mark(c)) {
        u::append(token, c);
        ++i;
      } else if (is_joiner(c) && live(i + 1) && is_word(cps[i + 1])) {
        u::append(token, c);
        ++i;
      } else {
        break;
      }
    }
    out.push_back(TokenSpan{std::move(token), m.src_begin[first], m.src_end[i - 1]});
  }
  return out;
}

std::vector<std::string> normalize_tokens(std::string_view text) {
  std::vector<std::string> out;
  for (auto& span : normalize(text)) out.push_back(std::move(span.token));
  return out;
}

std::string normalize_join(std::string_view text) {
  std::string out;
  for (const auto& span : normalize(text)) {
    if (!out.empty()) out.push_back(' ');
    out += span.token;
  }
  return out;
}

}  // namespace lexitag
