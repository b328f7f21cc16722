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

#include "vamos/matroid.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "vamos/error.hpp"

namespace vamos {

// ---------------------------------------------------------------- Matroid

Matroid Matroid::from_bases(int n, int rank, std::vector<Subset> bases) {
  if (n < 1 || n > kMaxElements) {
    throw StructuralError("ground set size " + std::to_string(n) +
                          " outside 1..64");
  }
  if (rank < 0 || rank > n) {
    throw StructuralError("rank " + std::to_string(rank) + " outside 0.." +
                          std::to_string(n));
  }
  if (bases.empty()) throw StructuralError("matroid needs at least one basis");
  const Subset ground = full_set(n);
  for (Subset b : bases) {
    if ((b & ~ground) != 0) {
      throw StructuralError("basis has an element outside 1.." + std::to_string(n));
    }
    if (cardinality(b) != rank) {
      throw StructuralError("basis of size " + std::to_string(cardinality(b)) +
                            " in a rank-" + std::to_string(rank) + " family");
    }
  }
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  return Matroid(n, rank, std::move(bases));
}

Matroid Matroid::from_lists(int n, int rank,
                            const std::vector<std::vector<int>>& bases) {
  std::vector<Subset> masks;
  masks.reserve(bases.size());
  for (const auto& b : bases) {
    for (int e : b) {
      if (e < 1 || e > n) {
        throw StructuralError("element " + std::to_string(e) + " outside 1.." +
                              std::to_string(n));
      }
    }
    const Subset mask = make_subset(b);
    if (cardinality(mask) != static_cast<int>(b.size())) {
      throw StructuralError("basis lists a repeated element");
    }
    masks.push_back(mask);
  }
  return from_bases(n, rank, std::move(masks));
}

std::vector<std::vector<int>> Matroid::sorted_basis_lists() const {
  std::vector<std::vector<int>> out;
  out.reserve(bases_.size());
  for (Subset b : bases_) out.push_back(elements_of(b));
  std::sort(out.begin(), out.end());
  return out;
}

bool Matroid::is_basis(Subset set) const {
  return std::binary_search(bases_.begin(), bases_.end(), set);
}

// ------------------------------------------------------- GroundSetLabeling

GroundSetLabeling::GroundSetLabeling(std::vector<int> image)
    : image_(std::move(image)) {
  const int n = static_cast<int>(image_.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : image_) {
    if (v < 1 || v > n || seen[v]) {
      throw StructuralError("labeling is not a permutation of 1.." +
                            std::to_string(n));
    }
    seen[v] = true;
  }
}

GroundSetLabeling GroundSetLabeling::identity(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) image[i] = i + 1;
  return GroundSetLabeling(std::move(image));
}

Subset GroundSetLabeling::apply(Subset set) const {
  Subset out = 0;
  for (int e : elements_of(set)) out |= element_bit(image_[e - 1]);
  return out;
}

// ---------------------------------------------------------------- axioms

ExchangeResult check_basis_exchange(const Matroid& m) {
  std::vector<Subset> order = m.bases();
  std::sort(order.begin(), order.end(), lex_less);
  for (Subset b1 : order) {
    for (Subset b2 : order) {
      const Subset only_first = b1 & ~b2;
      const Subset only_second = b2 & ~b1;
      for (int e : elements_of(only_first)) {
        bool found = false;
        for (int f : elements_of(only_second)) {
          if (m.is_basis((b1 & ~element_bit(e)) | element_bit(f))) {
            found = true;
            break;
          }
        }
        if (!found) return {false, ExchangeWitness{b1, b2, e}};
      }
    }
  }
  return {};
}

Matroid uniform_matroid(int rank, int n) {
  if (n < 1 || rank < 0 || rank > n) {
    throw DomainError("uniform matroid needs 0 <= r <= n, n >= 1");
  }
  return Matroid::from_bases(n, rank, k_subsets(n, rank));
}

std::vector<Subset> vamos_exclusions(int half_n) {
  if (half_n < 4) {
    throw DomainError("Vamos family is defined for n >= 4, got " +
                      std::to_string(half_n));
  }
  if (2 * half_n > kMaxElements) throw DomainError("Vamos family too large");
  std::vector<Subset> out;
  for (int k = 2; k <= half_n; ++k) {
    out.push_back(make_subset({1, 2, 2 * k - 1, 2 * k}));
  }
  for (int k = 2; k <= half_n - 1; ++k) {
    out.push_back(make_subset({2 * k - 1, 2 * k, 2 * k + 1, 2 * k + 2}));
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

Matroid vamos_matroid(int half_n) {
  const auto excluded = vamos_exclusions(half_n);
  std::vector<Subset> bases;
  for (Subset s : k_subsets(2 * half_n, 4)) {
    if (std::find(excluded.begin(), excluded.end(), s) == excluded.end()) {
      bases.push_back(s);
    }
  }
  return Matroid::from_bases(2 * half_n, 4, std::move(bases));
}

bool is_three_partition(int n, std::span<const Subset> hyperplanes) {
  for (Subset h : hyperplanes) {
    if (cardinality(h) < 3) return false;
    if ((h & ~full_set(n)) != 0) return false;
  }
  for (Subset triple : k_subsets(n, 3)) {
    int covering = 0;
    for (Subset h : hyperplanes) {
      if ((triple & h) == triple) ++covering;
    }
    // Uncovered triples join the family as singleton members.
    if (covering > 1) return false;
  }
  return true;
}

bool check_three_partition(const Matroid& m) {
  if (m.rank() != 4) throw DomainError("3-partition check expects rank 4");
  std::vector<Subset> dependent;
  for (Subset s : k_subsets(m.size(), 4)) {
    if (!m.is_basis(s)) dependent.push_back(s);
  }
  return is_three_partition(m.size(), dependent);
}

// ---------------------------------------------------------------- minors

namespace {

void require_element(const Matroid& m, int e) {
  if (e < 1 || e > m.size()) {
    throw StructuralError("element " + std::to_string(e) + " outside 1.." +
                          std::to_string(m.size()));
  }
}

}  // namespace

Matroid delete_element(const Matroid& m, int e) {
  require_element(m, e);
  if (m.size() == 1) throw DomainError("cannot delete the only element");
  std::vector<Subset> bases;
  for (Subset b : m.bases()) {
    if (!contains(b, e)) bases.push_back(compact_without(b, e));
  }
  if (bases.empty()) {
    throw DomainError("element " + std::to_string(e) +
                      " is a coloop; deletion would drop the rank");
  }
  return Matroid::from_bases(m.size() - 1, m.rank(), std::move(bases));
}

Matroid contract_element(const Matroid& m, int e) {
  require_element(m, e);
  if (m.size() == 1) throw DomainError("cannot contract the only element");
  std::vector<Subset> bases;
  for (Subset b : m.bases()) {
    if (contains(b, e)) bases.push_back(compact_without(b & ~element_bit(e), e));
  }
  if (bases.empty()) {
    throw DomainError("element " + std::to_string(e) + " is a loop");
  }
  return Matroid::from_bases(m.size() - 1, m.rank() - 1, std::move(bases));
}

Matroid dual(const Matroid& m) {
  const Subset ground = full_set(m.size());
  std::vector<Subset> bases;
  bases.reserve(m.basis_count());
  for (Subset b : m.bases()) bases.push_back(ground & ~b);
  return Matroid::from_bases(m.size(), m.size() - m.rank(), std::move(bases));
}

Matroid relabel(const Matroid& m, const GroundSetLabeling& labeling) {
  if (labeling.size() != m.size()) {
    throw StructuralError("labeling size does not match ground set");
  }
  std::vector<Subset> bases;
  bases.reserve(m.basis_count());
  for (Subset b : m.bases()) bases.push_back(labeling.apply(b));
  return Matroid::from_bases(m.size(), m.rank(), std::move(bases));
}

// ----------------------------------------------------------- isomorphism

namespace {

struct Invariants {
  std::vector<std::vector<int>> pair;  // pair[a][b]: bases containing both
  std::vector<std::vector<int>> signature;  // degree followed by sorted row
};

Invariants compute_invariants(const Matroid& m) {
  const int n = m.size();
  Invariants inv;
  inv.pair.assign(n, std::vector<int>(n, 0));
  for (Subset b : m.bases()) {
    const auto el = elements_of(b);
    for (int x : el) {
      for (int y : el) ++inv.pair[x - 1][y - 1];
    }
  }
  inv.signature.resize(n);
  for (int a = 0; a < n; ++a) {
    std::vector<int> row;
    for (int b = 0; b < n; ++b) {
      if (b != a) row.push_back(inv.pair[a][b]);
    }
    std::sort(row.begin(), row.end());
    inv.signature[a].push_back(inv.pair[a][a]);
    inv.signature[a].insert(inv.signature[a].end(), row.begin(), row.end());
  }
  return inv;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Matroid& m1, const Matroid& m2)
      : m1_(m1), m2_(m2), inv1_(compute_invariants(m1)),
        inv2_(compute_invariants(m2)) {}

  std::optional<GroundSetLabeling> run() {
    const int n = m1_.size();
    auto s1 = inv1_.signature;
    auto s2 = inv2_.signature;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;

    candidates_.assign(n, {});
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (inv1_.signature[a] == inv2_.signature[b]) candidates_[a].push_back(b);
      }
    }
    order_.resize(n);
    for (int a = 0; a < n; ++a) order_[a] = a;
    std::stable_sort(order_.begin(), order_.end(), [&](int x, int y) {
      return candidates_[x].size() < candidates_[y].size();
    });
    image_.assign(n, -1);
    used_.assign(n, false);
    if (!extend(0)) return std::nullopt;
    std::vector<int> one_based(n);
    for (int a = 0; a < n; ++a) one_based[a] = image_[a] + 1;
    return GroundSetLabeling(std::move(one_based));
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) {
      std::vector<int> one_based(image_.size());
      for (std::size_t a = 0; a < image_.size(); ++a) one_based[a] = image_[a] + 1;
      return relabel(m1_, GroundSetLabeling(std::move(one_based))) == m2_;
    }
    const int a = order_[depth];
    for (int b : candidates_[a]) {
      if (used_[b]) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < depth && consistent; ++k) {
        const int prev = order_[k];
        consistent = inv1_.pair[a][prev] == inv2_.pair[b][image_[prev]];
      }
      if (!consistent) continue;
      image_[a] = b;
      used_[b] = true;
      if (extend(depth + 1)) return true;
      used_[b] = false;
      image_[a] = -1;
    }
    return false;
  }

  const Matroid& m1_;
  const Matroid& m2_;
  Invariants inv1_;
  Invariants inv2_;
  std::vector<std::vector<int>> candidates_;
  std::vector<int> order_;
  std::vector<int> image_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<GroundSetLabeling> are_isomorphic(const Matroid& m1,
                                                const Matroid& m2) {
  if (m1.size() != m2.size() || m1.rank() != m2.rank() ||
      m1.basis_count() != m2.basis_count()) {
    return std::nullopt;
  }
  return IsomorphismSearch(m1, m2).run();
}

// -------------------------------------------------------- labeled minors

LabeledMatroid LabeledMatroid::identity(Matroid m) {
  std::vector<int> labels(static_cast<std::size_t>(m.size()));
  for (int i = 0; i < m.size(); ++i) labels[i] = i + 1;
  return {std::move(m), std::move(labels)};
}

bool LabeledMatroid::has_label(int label) const {
  return std::binary_search(labels.begin(), labels.end(), label);
}

int LabeledMatroid::element_of(int label) const {
  const auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it == labels.end() || *it != label) {
    throw StructuralError("label " + std::to_string(label) +
                          " is not in the ground set");
  }
  return static_cast<int>(it - labels.begin()) + 1;
}

Subset LabeledMatroid::to_labels(Subset compact) const {
  Subset out = 0;
  for (int e : elements_of(compact)) out |= element_bit(labels[e - 1]);
  return out;
}

LabeledMatroid delete_label(const LabeledMatroid& m, int label) {
  const int e = m.element_of(label);
  LabeledMatroid out{delete_element(m.matroid, e), m.labels};
  out.labels.erase(out.labels.begin() + (e - 1));
  return out;
}

LabeledMatroid contract_label(const LabeledMatroid& m, int label) {
  const int e = m.element_of(label);
  LabeledMatroid out{contract_element(m.matroid, e), m.labels};
  out.labels.erase(out.labels.begin() + (e - 1));
  return out;
}

LabeledMatroid minor(const LabeledMatroid& m, std::span<const int> deletions,
                     std::span<const int> contractions) {
  LabeledMatroid out = m;
  for (int c : contractions) out = contract_label(out, c);
  for (int d : deletions) out = delete_label(out, d);
  return out;
}

std::optional<MinorWitness> has_v8_minor(const Matroid& m) {
  const int n = m.size();
  const int r = m.rank();
  const int contract_count = r - 4;
  const int delete_count = n - 8 - contract_count;
  if (contract_count < 0 || delete_count < 0) return std::nullopt;

  const Matroid target = vamos_matroid(4);
  const Subset ground = full_set(n);
  // Surviving sets in lexicographic order of their element lists.
  std::vector<Subset> survivors = k_subsets(n, 8);
  std::sort(survivors.begin(), survivors.end(), lex_less);
  for (Subset kept : survivors) {
    const Subset removed = ground & ~kept;
    const auto removed_elements = elements_of(removed);
    const int removed_count = static_cast<int>(removed_elements.size());
    for (Subset pick : k_subsets(removed_count, contract_count)) {
      Subset contracted = 0;
      for (int k : elements_of(pick)) contracted |= element_bit(removed_elements[k - 1]);
      const Subset deleted = removed & ~contracted;
      std::vector<Subset> bases;
      for (Subset b : m.bases()) {
        if ((b & contracted) == contracted && (b & deleted) == 0) {
          Subset reduced = b & ~contracted;
          // Compact onto 1..8 by walking removed elements from the top.
          for (auto it = removed_elements.rbegin(); it != removed_elements.rend(); ++it) {
            reduced = compact_without(reduced, *it);
          }
          bases.push_back(reduced);
        }
      }
      if (bases.size() != target.basis_count()) continue;
      const Matroid candidate = Matroid::from_bases(8, 4, std::move(bases));
      if (are_isomorphic(candidate, target)) return MinorWitness{deleted, contracted};
    }
  }
  return std::nullopt;
}

Matroid matroid_from_matrix(const RationalMatrix& a) {
  const int r = a.rows();
  const int n = a.cols();
  if (r == 0 || n == 0) throw DomainError("empty matrix has no column matroid");
  if (n > kMaxElements) throw StructuralError("more than 64 columns");
  if (matrix_rank(a) < r) {
    throw DomainError("matrix does not have full row rank");
  }
  std::vector<Subset> bases;
  for (Subset s : k_subsets(n, r)) {
    std::vector<int> columns;
    for (int e : elements_of(s)) columns.push_back(e - 1);
    if (determinant(a.select_columns(columns)) != 0) bases.push_back(s);
  }
  return Matroid::from_bases(n, r, std::move(bases));
}

}  // namespace vamos
