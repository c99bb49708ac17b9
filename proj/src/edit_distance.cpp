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

#include "lexitag/edit_distance.hpp"

#include <algorithm>
#include <vector>

#include "lexitag/unicode.hpp"

namespace lexitag {

Distance osa_distance(std::u32string_view a, std::u32string_view b) {
  const std::size_t la = a.size();
  const std::size_t lb = b.size();
  if (la == 0) return lb;
  if (lb == 0) return la;

  std::vector<Distance> prev2(lb + 1), prev(lb + 1), cur(lb + 1);
  for (std::size_t j = 0; j <= lb; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= la; ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= lb; ++j) {
      const Distance cost = a[i - 1] == b[j - 1] ? 0 : 1;
      Distance v = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost});
      if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1]) {
        v = std::min(v, prev2[j - 2] + 1);
      }
      cur[j] = v;
    }
    std::swap(prev2, prev);
    std::swap(prev, cur);
  }
  return prev[lb];
}

Distance osa_distance(std::string_view a, std::string_view b) {
  if (a == b) return 0;
  return osa_distance(unicode::decode(a), unicode::decode(b));
}

std::optional<Distance> osa_distance_bounded(std::u32string_view a, std::u32string_view b,
                                             Distance max_distance) {
  const std::size_t la = a.size();
  const std::size_t lb = b.size();
  const Distance d = max_distance;
  if ((la > lb ? la - lb : lb - la) > d) return std::nullopt;
  if (la == 0 || lb == 0) return std::max(la, lb);

  // Cells outside the band are > d; clamping everything to d + 1 keeps the
  // <= d decision and the exact value below it.
  const Distance cap = d + 1;
  std::vector<Distance> prev2(lb + 1, cap), prev(lb + 1, cap), cur(lb + 1, cap);
  for (std::size_t j = 0; j <= std::min(lb, d); ++j) prev[j] = j;
  Distance prev_min = 0;

  for (std::size_t i = 1; i <= la; ++i) {
    const std::size_t jlo = i > d ? i - d : 1;
    const std::size_t jhi = std::min(lb, i + d);
    cur[0] = i <= d ? i : cap;
    if (jlo > 1) cur[jlo - 1] = cap;
    if (i + d <= lb) prev[i + d] = cap;

    Distance row_min = cur[0];
    for (std::size_t j = jlo; j <= jhi; ++j) {
      const Distance cost = a[i - 1] == b[j - 1] ? 0 : 1;
      Distance v = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost});
      if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1]) {
        v = std::min(v, prev2[j - 2] + 1);
      }
      v = std::min(v, cap);
      cur[j] = v;
      row_min = std::min(row_min, v);
    }
    // A transposition can skip one row, so a single hopeless row is not enough.
    if (row_min > d && prev_min > d) return std::nullopt;
    prev_min = row_min;
    std::swap(prev2, prev);
    std::swap(prev, cur);
  }
  if (prev[lb] > d) return std::nullopt;
  return prev[lb];
}

bool within_distance(std::u32string_view a, std::u32string_view b, Distance d) {
  return osa_distance_bounded(a, b, d).has_value();
}

bool within_distance(std::string_view a, std::string_view b, Distance d) {
  if (a == b) return true;
  return within_distance(unicode::decode(a), unicode::decode(b), d);
}

}  // namespace lexitag
