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

#include "lexitag/unicode.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <stdexcept>

namespace lexitag::unicode {
namespace {

const icu::Normalizer2& nfc_instance() {
  static const icu::Normalizer2* instance = [] {
    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* n = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status)) {
      throw std::runtime_error("ICU NFC normalizer unavailable");
    }
    return n;
  }();
  return *instance;
}

icu::UnicodeString to_icu(std::u32string_view cps) {
  icu::UnicodeString s;
  for (char32_t cp : cps) s.append(static_cast<UChar32>(cp));
  return s;
}

void append_icu(std::u32string& out, const icu::UnicodeString& s) {
  for (int32_t i = 0; i < s.length();) {
    UChar32 cp = s.char32At(i);
    out.push_back(static_cast<char32_t>(cp));
    i += U16_LENGTH(cp);
  }
}

}  // namespace

std::u32string decode(std::string_view utf8) {
  std::u32string out;
  out.reserve(utf8.size());
  const auto* s = reinterpret_cast<const uint8_t*>(utf8.data());
  const auto n = static_cast<int32_t>(utf8.size());
  for (int32_t i = 0; i < n;) {
    UChar32 cp;
    U8_NEXT(s, i, n, cp);
    out.push_back(cp < 0 ? U'\uFFFD' : static_cast<char32_t>(cp));
  }
  return out;
}

void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
    return;
  }
  uint8_t buf[U8_MAX_LENGTH];
  int32_t len = 0;
  UBool error = false;
  U8_APPEND(buf, len, U8_MAX_LENGTH, static_cast<UChar32>(cp), error);
  if (error) {
    append(out, U'\uFFFD');
    return;
  }
  out.append(reinterpret_cast<const char*>(buf), static_cast<std::size_t>(len));
}

std::string encode(std::u32string_view cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) append(out, cp);
  return out;
}

std::size_t length(std::string_view utf8) {
  std::size_t n = 0;
  for (char c : utf8) {
    if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) ++n;
  }
  return n;
}

bool is_ascii(std::string_view s) {
  for (char c : s) {
    if (static_cast<unsigned char>(c) >= 0x80) return false;
  }
  return true;
}

std::string nfc(std::string_view utf8) {
  if (is_ascii(utf8)) return std::string(utf8);
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString src = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  icu::UnicodeString dst = nfc_instance().normalize(src, status);
  if (U_FAILURE(status)) return std::string(utf8);
  std::string out;
  dst.toUTF8String(out);
  return out;
}

MappedText nfc_mapped(std::string_view utf8) {
  MappedText m;
  std::u32string src = decode(utf8);
  const auto push_identity = [&] {
    m.cps = src;
    m.src_begin.resize(src.size());
    m.src_end.resize(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
      m.src_begin[i] = i;
      m.src_end[i] = i + 1;
    }
  };
  if (is_ascii(utf8)) {
    push_identity();
    return m;
  }
  const icu::Normalizer2& norm = nfc_instance();
  UErrorCode status = U_ZERO_ERROR;
  if (norm.isNormalized(to_icu(src), status) && U_SUCCESS(status)) {
    push_identity();
    return m;
  }

  std::size_t seg_start = 0;
  const auto flush = [&](std::size_t seg_end) {
    if (seg_end <= seg_start) return;
    std::u32string_view seg(src.data() + seg_start, seg_end - seg_start);
    UErrorCode st = U_ZERO_ERROR;
    icu::UnicodeString composed = norm.normalize(to_icu(seg), st);
    const std::size_t before = m.cps.size();
    if (U_FAILURE(st)) {
      m.cps.append(seg);
    } else {
      append_icu(m.cps, composed);
    }
    for (std::size_t i = before; i < m.cps.size(); ++i) {
      m.src_begin.push_back(seg_start);
      m.src_end.push_back(seg_end);
    }
    seg_start = seg_end;
  };
  for (std::size_t i = 1; i < src.size(); ++i) {
    if (norm.hasBoundaryBefore(static_cast<UChar32>(src[i]))) flush(i);
  }
  flush(src.size());
  return m;
}

char32_t to_lower(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= U'A' && cp <= U'Z') ? cp + 32 : cp;
  }
  return static_cast<char32_t>(u_tolower(static_cast<UChar32>(cp)));
}

std::string to_lower(std::string_view utf8) {
  std::string out;
  out.reserve(utf8.size());
  if (is_ascii(utf8)) {
    for (char c : utf8) out.push_back(static_cast<char>(to_lower(static_cast<char32_t>(c))));
    return out;
  }
  for (char32_t cp : decode(utf8)) append(out, to_lower(cp));
  return out;
}

bool is_letter(char32_t cp) {
  if (cp < 0x80) return (cp | 0x20) >= U'a' && (cp | 0x20) <= U'z';
  return u_isalpha(static_cast<UChar32>(cp));
}

bool is_digit(char32_t cp) {
  if (cp < 0x80) return cp >= U'0' && cp <= U'9';
  return u_isdigit(static_cast<UChar32>(cp));
}

bool is_mark(char32_t cp) {
  if (cp < 0x300) return false;
  const int8_t t = u_charType(static_cast<UChar32>(cp));
  return t == U_NON_SPACING_MARK || t == U_COMBINING_SPACING_MARK ||
         t == U_ENCLOSING_MARK;
}

bool is_space(char32_t cp) {
  if (cp < 0x80) return cp == U' ' || (cp >= U'\t' && cp <= U'\r');
  return u_isUWhiteSpace(static_cast<UChar32>(cp));
}

}  // namespace lexitag::unicode
