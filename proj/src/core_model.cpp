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

#include "lexitag/core_model.hpp"

#include <algorithm>
#include <cstdio>

#include "io_util.hpp"
#include "lexitag/errors.hpp"
#include "lexitag/normalize.hpp"
#include "lexitag/unicode.hpp"

namespace lexitag {

std::string_view to_string(TermSource source) {
  switch (source) {
    case TermSource::kBase: return "base";
    case TermSource::kKeyboard: return "keyboard";
    case TermSource::kEmbedding: return "embedding";
  }
  return "base";
}

std::string_view to_string(MatchMethod method) {
  switch (method) {
    case MatchMethod::kBase: return "base";
    case MatchMethod::kKeyboard: return "keyboard";
    case MatchMethod::kEmbedding: return "embedding";
    case MatchMethod::kSymspellCorrected: return "symspell-corrected";
  }
  return "base";
}

std::string_view to_string(Generator g) {
  return g == Generator::kKeyboard ? "keyboard" : "embedding";
}

std::optional<TermSource> parse_term_source(std::string_view s) {
  if (s == "base") return TermSource::kBase;
  if (s == "keyboard") return TermSource::kKeyboard;
  if (s == "embedding") return TermSource::kEmbedding;
  return std::nullopt;
}

std::optional<MatchMethod> parse_match_method(std::string_view s) {
  if (s == "symspell-corrected") return MatchMethod::kSymspellCorrected;
  if (auto src = parse_term_source(s)) return method_for(*src);
  return std::nullopt;
}

MatchMethod method_for(TermSource source) {
  switch (source) {
    case TermSource::kBase: return MatchMethod::kBase;
    case TermSource::kKeyboard: return MatchMethod::kKeyboard;
    case TermSource::kEmbedding: return MatchMethod::kEmbedding;
  }
  return MatchMethod::kBase;
}

// Lexicon -----------------------------------------------------------------

Lexicon::AddResult Lexicon::add(std::string term_id, std::string_view raw_surface,
                                TermSource source) {
  std::vector<std::string> tokens = normalize_tokens(raw_surface);
  if (term_id.empty() || tokens.empty() || tokens.size() > kMaxPhraseTokens) {
    ++rejected_;
    return AddResult::kRejected;
  }
  std::string surface;
  for (const auto& t : tokens) {
    if (!surface.empty()) surface.push_back(' ');
    surface += t;
  }
  if (by_surface_.contains(surface)) {
    ++duplicates_;
    return AddResult::kDuplicate;
  }
  if (tokens.size() > 1) phrase_heads_.insert(tokens.front());
  max_phrase_len_ = std::max(max_phrase_len_, tokens.size());
  by_surface_.emplace(surface, entries_.size());
  entries_.push_back(LexiconEntry{std::move(term_id), std::move(surface), source});
  return AddResult::kAdded;
}

void Lexicon::load(const std::filesystem::path& path) {
  io::LineReader reader(path);
  std::string line;
  while (reader.next(line)) {
    if (line.empty() || line.front() == '#') continue;
    const auto cols = io::split(line, '\t');
    TermSource source = TermSource::kBase;
    switch (cols.size()) {
      case 2:
        break;
      case 3: {
        auto parsed = parse_term_source(cols[2]);
        if (!parsed) {
          throw DataError("unknown term source '" + std::string(cols[2]) + "'",
                          reader.line_number());
        }
        source = *parsed;
        break;
      }
      case 4:
        if (cols[2] == "keyboard") {
          source = TermSource::kKeyboard;
        } else if (cols[2] == "embedding") {
          source = TermSource::kEmbedding;
        } else {
          throw DataError("unknown generator '" + std::string(cols[2]) + "'",
                          reader.line_number());
        }
        break;
      default:
        throw DataError("expected term_id<TAB>surface", reader.line_number());
    }
    add(std::string(cols[0]), cols[1], source);
  }
}

Lexicon Lexicon::from_file(const std::filesystem::path& path) {
  Lexicon lex;
  lex.load(path);
  return lex;
}

void Lexicon::save(const std::filesystem::path& path) const {
  io::AtomicWriter writer(path);
  auto& out = writer.stream();
  for (const auto& e : entries_) {
    out << e.term_id << '\t' << e.surface;
    if (e.source != TermSource::kBase) out << '\t' << to_string(e.source);
    out << '\n';
  }
  writer.commit();
}

const LexiconEntry* Lexicon::find(std::string_view surface) const {
  auto it = by_surface_.find(surface);
  return it == by_surface_.end() ? nullptr : &entries_[it->second];
}

// Frequency dictionary ----------------------------------------------------

bool is_valid_dictionary_token(std::string_view token) {
  if (token.empty()) return false;
  if (unicode::is_ascii(token)) {
    for (char c : token) {
      if (c <= ' ' || (c >= 'A' && c <= 'Z')) return false;
    }
    return true;
  }
  for (char32_t cp : unicode::decode(token)) {
    if (unicode::is_space(cp) || unicode::to_lower(cp) != cp) return false;
  }
  return true;
}

void FrequencyDictionary::add(std::string_view token, std::uint64_t count) {
  if (!is_valid_dictionary_token(token)) {
    throw DataError("invalid dictionary token '" + std::string(token) + "'");
  }
  if (count == 0) throw DataError("non-positive count for '" + std::string(token) + "'");
  auto it = counts_.find(token);
  if (it == counts_.end()) {
    counts_.emplace(std::string(token), count);
  } else {
    it->second += count;
  }
  total_ += count;
}

void FrequencyDictionary::raise_to(std::string_view token, std::uint64_t count) {
  const std::uint64_t current = this->count(token);
  if (count > current) add(token, count - current);
}

std::uint64_t FrequencyDictionary::count(std::string_view token) const {
  auto it = counts_.find(token);
  return it == counts_.end() ? 0 : it->second;
}

std::vector<FrequencyDictionary::Entry> FrequencyDictionary::sorted() const {
  std::vector<Entry> out(counts_.begin(), counts_.end());
  std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return out;
}

FrequencyDictionary FrequencyDictionary::load(const std::filesystem::path& path) {
  FrequencyDictionary dict;
  io::LineReader reader(path);
  std::string line;
  while (reader.next(line)) {
    std::string_view view = line;
    while (!view.empty() && (view.back() == ' ' || view.back() == '\t')) view.remove_suffix(1);
    if (view.empty()) continue;
    const std::size_t sep = view.find_last_of(" \t");
    if (sep == std::string_view::npos) {
      throw DataError("expected 'token count'", reader.line_number());
    }
    std::uint64_t count = 0;
    if (!io::parse_u64(view.substr(sep + 1), count) || count == 0) {
      throw DataError("count must be a positive integer", reader.line_number());
    }
    std::string token = unicode::to_lower(unicode::nfc(view.substr(0, sep)));
    if (!is_valid_dictionary_token(token)) {
      throw DataError("invalid token '" + token + "'", reader.line_number());
    }
    dict.add(token, count);
  }
  return dict;
}

void FrequencyDictionary::save(const std::filesystem::path& path) const {
  io::AtomicWriter writer(path);
  auto& out = writer.stream();
  for (const auto& [token, count] : sorted()) out << token << ' ' << count << '\n';
  writer.commit();
}

// Matches -----------------------------------------------------------------

namespace {
void append_field(std::string& out, std::string_view s) {
  for (char c : s) out.push_back(c == '\t' || c == '\n' || c == '\r' ? ' ' : c);
}
}  // namespace

std::string format_match(const TagMatch& m) {
  std::string out;
  append_field(out, m.doc_id);
  out += '\t' + std::to_string(m.start) + '\t' + std::to_string(m.end) + '\t';
  append_field(out, m.matched_text);
  out.push_back('\t');
  append_field(out, m.canonical_surface);
  out.push_back('\t');
  append_field(out, m.term_id);
  out.push_back('\t');
  out += to_string(m.method);
  return out;
}

// Misspellings ------------------------------------------------------------

std::string Variant::metadata() const {
  if (generator == Generator::kKeyboard) return "pos=" + std::to_string(position);
  char buf[64];
  std::snprintf(buf, sizeof buf, "score=%.6f;round=%d", score, round);
  return buf;
}

bool MisspellingSet::add(Variant v) {
  if (v.text.empty() || v.text == seed_ || index_.contains(v.text)) return false;
  if (unicode::to_lower(v.text) != v.text) return false;
  index_.insert(v.text);
  variants_.push_back(std::move(v));
  return true;
}

std::string MisspellingSet::to_tsv() const {
  std::string out;
  for (const auto& v : variants_) {
    out += seed_;
    out += '\t';
    out += v.text;
    out += '\t';
    out += to_string(v.generator);
    out += '\t';
    out += v.metadata();
    out += '\n';
  }
  return out;
}

}  // namespace lexitag
