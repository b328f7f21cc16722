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

#include <algorithm>
#include <filesystem>
#include <vector>

#include "vamos/matroid.hpp"

namespace fixtures {

inline std::filesystem::path data_dir() { return VAMOS_DATA_DIR; }

inline std::vector<vamos::Subset> fano_lines() {
  using vamos::make_subset;
  return {make_subset({1, 2, 4}), make_subset({2, 3, 5}), make_subset({3, 4, 6}),
          make_subset({4, 5, 7}), make_subset({1, 5, 6}), make_subset({2, 6, 7}),
          make_subset({1, 3, 7})};
}

// Rank-3 matroid on 7 points whose non-bases are the first `kept` lines of
// the Fano plane. kept = 7 is F_7 itself.
inline vamos::Matroid fano_relaxation(std::size_t kept) {
  const auto lines = fano_lines();
  std::vector<vamos::Subset> bases;
  for (vamos::Subset s : vamos::k_subsets(7, 3)) {
    if (std::find(lines.begin(), lines.begin() + static_cast<long>(kept), s) ==
        lines.begin() + static_cast<long>(kept)) {
      bases.push_back(s);
    }
  }
  return vamos::Matroid::from_bases(7, 3, bases);
}

inline vamos::Matroid fano_plane() { return fano_relaxation(7); }

}  // namespace fixtures
