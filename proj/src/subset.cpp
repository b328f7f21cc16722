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

#include "vamos/subset.hpp"

#include <algorithm>
#include <string>

#include "vamos/error.hpp"

namespace vamos {

Subset make_subset(std::span<const int> elements) {
  Subset set = 0;
  for (int e : elements) {
    if (e < 1 || e > kMaxElements) {
      throw StructuralError("element " + std::to_string(e) + " out of range 1..64");
    }
    set |= element_bit(e);
  }
  return set;
}

Subset make_subset(std::initializer_list<int> elements) {
  return make_subset(std::span<const int>(elements.begin(), elements.size()));
}

std::vector<int> elements_of(Subset set) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(cardinality(set)));
  while (set != 0) {
    out.push_back(std::countr_zero(set) + 1);
    set &= set - 1;
  }
  return out;
}

std::vector<Subset> k_subsets(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  if (k == 0) return {Subset{0}};
  if (k == kMaxElements) return {full_set(kMaxElements)};
  // Gosper's hack walks k-bit masks in increasing order.
  Subset set = (Subset{1} << k) - 1;
  const Subset limit = full_set(n);
  while (true) {
    out.push_back(set);
    const Subset low = set & (~set + 1);
    const Subset ripple = set + low;
    if (ripple == 0 || ripple > limit) break;
    set = ripple | (((ripple ^ set) >> 2) / low);
    if (set > limit) break;
  }
  return out;
}

bool lex_less(Subset a, Subset b) {
  const auto ea = elements_of(a);
  const auto eb = elements_of(b);
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

Subset compact_without(Subset set, int removed) {
  const Subset low = set & (element_bit(removed) - 1);
  const Subset high = removed >= 64 ? 0 : (set >> removed) << (removed - 1);
  return low | high;
}

}  // namespace vamos
