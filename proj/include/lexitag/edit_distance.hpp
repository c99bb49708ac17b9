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

#ifndef LEXITAG_EDIT_DISTANCE_HPP_
#define LEXITAG_EDIT_DISTANCE_HPP_

#include <cstddef>
#include <optional>
#include <string_view>

namespace lexitag {

// Edit-operation count.
using Distance = std::size_t;

// Optimal string alignment distance (restricted Damerau-Levenshtein):
// insertions, deletions, substitutions and adjacent transpositions, with no
// substring edited more than once. Not a metric; the triangle inequality
// does not hold. The string_view overloads operate on UTF-8 code points.
Distance osa_distance(std::u32string_view a, std::u32string_view b);
Distance osa_distance(std::string_view a, std::string_view b);

// Exact distance when it is <= max_distance, nullopt otherwise. Only the
// diagonal band of width max_distance is evaluated and the scan stops as
// soon as two consecutive rows exceed the bound.
std::optional<Distance> osa_distance_bounded(std::u32string_view a, std::u32string_view b,
                                             Distance max_distance);

bool within_distance(std::u32string_view a, std::u32string_view b, Distance d);
bool within_distance(std::string_view a, std::string_view b, Distance d);

}  // namespace lexitag

#endif  // LEXITAG_EDIT_DISTANCE_HPP_
