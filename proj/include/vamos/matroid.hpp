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

#include <optional>
#include <span>
#include <vector>

#include "vamos/linalg.hpp"
#include "vamos/subset.hpp"

namespace vamos {

// A family of equal-size subsets of {1..n} given by explicit basis list.
//
// Construction enforces the structural invariants only (nonempty, every
// basis has `rank` elements in range, n <= 64). Whether the family satisfies
// the exchange axiom is a separate question answered by
// check_basis_exchange(), so that candidate families can be represented and
// rejected with a witness. Values are immutable.
class Matroid {
 public:
  static Matroid from_bases(int n, int rank, std::vector<Subset> bases);
  static Matroid from_lists(int n, int rank,
                            const std::vector<std::vector<int>>& bases);

  int size() const { return n_; }
  int rank() const { return rank_; }

  // Sorted ascending by mask, deduplicated.
  const std::vector<Subset>& bases() const { return bases_; }
  std::size_t basis_count() const { return bases_.size(); }

  // Bases as element lists in lexicographic order; the canonical output order.
  std::vector<std::vector<int>> sorted_basis_lists() const;

  bool is_basis(Subset set) const;

  friend bool operator==(const Matroid&, const Matroid&) = default;

 private:
  Matroid(int n, int rank, std::vector<Subset> bases)
      : n_(n), rank_(rank), bases_(std::move(bases)) {}

  int n_ = 0;
  int rank_ = 0;
  std::vector<Subset> bases_;
};

// Bijection on {1..n}; image[i-1] is where element i goes.
class GroundSetLabeling {
 public:
  explicit GroundSetLabeling(std::vector<int> image);
  static GroundSetLabeling identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int element) const { return image_[element - 1]; }
  Subset apply(Subset set) const;
  const std::vector<int>& image() const { return image_; }

  friend bool operator==(const GroundSetLabeling&,
                         const GroundSetLabeling&) = default;

 private:
  std::vector<int> image_;
};

struct ExchangeWitness {
  Subset first;   // B1
  Subset second;  // B2
  int element;    // e in B1 \ B2 with no valid partner in B2 \ B1
};

struct ExchangeResult {
  bool holds = true;
  std::optional<ExchangeWitness> witness;
};

// Exhaustive check over ordered pairs of bases. Pairs are visited in
// lexicographic order so the reported witness is the first violation.
ExchangeResult check_basis_exchange(const Matroid& m);

// U_{r,n}.
Matroid uniform_matroid(int rank, int n);

// The excluded quadruples H_{2n} of the 2n-element Vamos matroid:
//   {1,2,2k-1,2k}        for 2 <= k <= n
//   {2k-1,2k,2k+1,2k+2}  for 2 <= k <= n-1
// in lexicographic order. Throws DomainError for half_n < 4.
std::vector<Subset> vamos_exclusions(int half_n);

// Rank-4 matroid on 2*half_n elements: every 4-subset except vamos_exclusions.
Matroid vamos_matroid(int half_n);

// True iff every 3-subset of {1..n} lies in exactly one member of
// `hyperplanes` union the 3-subsets covered by none of them. Members must
// have at least 3 elements.
bool is_three_partition(int n, std::span<const Subset> hyperplanes);

// For a rank-4 family: the dependent 4-sets plus the uncovered triples form a
// 3-partition. Throws DomainError for other ranks.
bool check_three_partition(const Matroid& m);

// M \ e with elements above e shifted down. Throws DomainError if e is a
// coloop, StructuralError if out of range.
Matroid delete_element(const Matroid& m, int e);

// M / e, relabeled the same way. Throws DomainError if e is a loop.
Matroid contract_element(const Matroid& m, int e);

Matroid dual(const Matroid& m);

// Image of m's bases under the labeling.
Matroid relabel(const Matroid& m, const GroundSetLabeling& labeling);

// Backtracking search with (n, rank, basis count), element-degree and
// pair-degree pruning. The returned labeling maps m1's bases onto m2's.
std::optional<GroundSetLabeling> are_isomorphic(const Matroid& m1,
                                                const Matroid& m2);

// A matroid together with the original label of each of its elements.
// Minor operations on LabeledMatroid keep the labels, so a minor of V_10 can
// be addressed by the element names of V_10.
struct LabeledMatroid {
  Matroid matroid;
  std::vector<int> labels;  // labels[k] names element k+1, strictly increasing

  static LabeledMatroid identity(Matroid m);

  // Compact element for an original label; StructuralError if absent.
  int element_of(int label) const;
  bool has_label(int label) const;

  // Basis as a mask over original labels.
  Subset to_labels(Subset compact) const;

  friend bool operator==(const LabeledMatroid&, const LabeledMatroid&) = default;
};

LabeledMatroid delete_label(const LabeledMatroid& m, int label);
LabeledMatroid contract_label(const LabeledMatroid& m, int label);

// Applies contractions then deletions (the two commute when both defined).
LabeledMatroid minor(const LabeledMatroid& m, std::span<const int> deletions,
                     std::span<const int> contractions);

struct MinorWitness {
  Subset deleted;     // in m's own labels
  Subset contracted;
};

// Searches delete/contract sets leaving 8 elements of rank 4 whose minor is
// isomorphic to V_8. Surviving ground sets are tried in lexicographic order,
// so minors on the lowest labels are preferred.
std::optional<MinorWitness> has_v8_minor(const Matroid& m);

// Matroid on the columns; bases are column r-subsets with nonzero
// determinant, r = number of rows. DomainError unless full row rank.
Matroid matroid_from_matrix(const RationalMatrix& a);

}  // namespace vamos
