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

// Seeded corruptions of a valid proof tree, used to show that the checker
// rejects every one of them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vamos/proof.hpp"

namespace vamos {

enum class MutationKind {
  kGramEntry,       // symmetric perturbation of one Gram entry
  kPsdBreak,        // +d / -d on two entries with the same monomial product
  kRemoveBasis,
  kAddBasis,
  kWrongIndex,      // Rayleigh index moved to another element
  kSwapChildren,    // delete/contract children exchanged
  kKnownHppName,    // base case pointed at a different trusted matroid
};

struct Mutation {
  MutationKind kind;
  std::string node;
  std::string description;
  ProofTree tree;
};

std::string mutation_kind_name(MutationKind kind);

// count mutants cycling through every kind; reproducible for a given seed.
std::vector<Mutation> seeded_mutations(const ProofTree& tree, int count, std::uint64_t seed);

// Gram matrix with G[a,b] and G[c,d] moved in opposite directions so that
// m^T G m is unchanged but G is no longer PSD. nullopt if no such pair exists.
// pick selects among the candidate pairs.
std::optional<RationalMatrix> psd_breaking_perturbation(const GramCertificate& c,
                                                        std::uint64_t pick = 0);

}  // namespace vamos
