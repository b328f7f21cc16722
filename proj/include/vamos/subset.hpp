// Copyright 2026 The Authors.
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

#pragma once

// Subsets of {1..64} packed into a 64-bit mask; element i lives in bit i-1.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace vamos {

using Subset = std::uint64_t;

inline constexpr int kMaxElements = 64;

constexpr Subset element_bit(int element) {
  return Subset{1} << (element - 1);
}

constexpr bool contains(Subset set, int element) {
  return (set & element_bit(element)) != 0;
}

constexpr int cardinality(Subset set) { return std::popcount(set); }

// Mask of {1..n}.
constexpr Subset full_set(int n) {
  return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1;
}

Subset make_subset(std::span<const int> elements);
Subset make_subset(std::initializer_list<int> elements);

// Elements in ascending order.
std::vector<int> elements_of(Subset set);

// All k-subsets of {1..n}, in ascending mask order.
std::vector<Subset> k_subsets(int n, int k);

// Lexicographic order on sorted element lists ({1,2,4} < {1,3,4} < {2,3,4}).
bool lex_less(Subset a, Subset b);

// Drops element `removed` and shifts higher elements down by one.
Subset compact_without(Subset set, int removed);

}  // namespace vamos
