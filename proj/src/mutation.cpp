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

#include "vamos/mutation.hpp"

#include <algorithm>
#include <map>

#include "vamos/error.hpp"
#include "vamos/stability.hpp"

namespace vamos {
namespace {

constexpr MutationKind kKinds[] = {
    MutationKind::kGramEntry,  MutationKind::kPsdBreak,     MutationKind::kRemoveBasis,
    MutationKind::kAddBasis,   MutationKind::kWrongIndex,   MutationKind::kSwapChildren,
    MutationKind::kKnownHppName,
};

std::vector<std::string> ids_where(const ProofTree& tree, bool (*pred)(const ProofNode&)) {
  std::vector<std::string> out;
  for (const auto& [id, node] : tree.nodes)
    if (pred(node)) out.push_back(id);
  return out;
}

bool is_rayleigh(const ProofNode& n) { return n.just.kind == JustificationKind::kRayleigh; }
bool is_known(const ProofNode& n) { return n.just.kind == JustificationKind::kKnownHpp; }
bool any_node(const ProofNode&) { return true; }

template <typename T>
const T& choose(SplitMix64& rng, const std::vector<T>& items) {
  if (items.empty()) throw DomainError("proof tree has nothing to mutate for this kind");
  return items[rng.next() % items.size()];
}

void set_bases(LabeledMatroid& m, std::vector<Subset> bases) {
  std::sort(bases.begin(), bases.end());
  m.matroid = Matroid::from_bases(m.matroid.size(), m.matroid.rank(), std::move(bases));
}

std::string subset_text(Subset s) {
  std::string out = "{";
  for (int e : elements_of(s)) out += (out.size() > 1 ? "," : "") + std::to_string(e);
  return out + "}";
}

Mutation mutate(const ProofTree& tree, MutationKind kind, SplitMix64& rng) {
  Mutation mu{kind, "", "", tree};
  ProofTree& t = mu.tree;
  switch (kind) {
    case MutationKind::kGramEntry: {
      mu.node = choose(rng, ids_where(t, is_rayleigh));
      const std::string file = t.nodes.at(mu.node).just.certificate;
      auto& g = t.certificates.at(file).gram;
      const int r = static_cast<int>(rng.next() % static_cast<std::uint64_t>(g.rows()));
      const int c = static_cast<int>(rng.next() % static_cast<std::uint64_t>(g.rows()));
      Rational delta(static_cast<long>(1 + rng.next() % 5), static_cast<long>(1 + rng.next() % 3));
      delta.canonicalize();
      if (rng.next() % 2) delta = -delta;
      g(r, c) += delta;
      if (r != c) g(c, r) += delta;
      mu.description = file + " G(" + std::to_string(r) + "," + std::to_string(c) + ") += " + to_string(delta);
      break;
    }
    case MutationKind::kPsdBreak: {
      mu.node = choose(rng, ids_where(t, is_rayleigh));
      const std::string file = t.nodes.at(mu.node).just.certificate;
      auto& cert = t.certificates.at(file);
      const auto broken = psd_breaking_perturbation(cert, rng.next());
      if (!broken) throw DomainError(file + " has no pair of equal monomial products");
      cert.gram = *broken;
      mu.description = file + " identity-preserving perturbation that breaks PSD";
      break;
    }
    case MutationKind::kRemoveBasis: {
      mu.node = choose(rng, ids_where(t, any_node));
      auto& m = t.nodes.at(mu.node).matroid;
      auto bases = m.matroid.bases();
      if (bases.size() < 2) {
        return mutate(tree, MutationKind::kAddBasis, rng);
      }
      const std::size_t k = rng.next() % bases.size();
      mu.description = "node " + mu.node + " loses basis " + subset_text(m.to_labels(bases[k]));
      bases.erase(bases.begin() + static_cast<std::ptrdiff_t>(k));
      set_bases(m, std::move(bases));
      break;
    }
    case MutationKind::kAddBasis: {
      std::vector<std::string> candidates;
      for (const auto& [id, node] : t.nodes) {
        const auto& mm = node.matroid.matroid;
        if (mm.basis_count() < k_subsets(mm.size(), mm.rank()).size()) candidates.push_back(id);
      }
      mu.node = choose(rng, candidates);
      auto& m = t.nodes.at(mu.node).matroid;
      auto bases = m.matroid.bases();
      std::vector<Subset> missing;
      for (Subset s : k_subsets(m.matroid.size(), m.matroid.rank()))
        if (!std::binary_search(bases.begin(), bases.end(), s)) missing.push_back(s);
      const Subset extra = choose(rng, missing);
      mu.description = "node " + mu.node + " gains basis " + subset_text(m.to_labels(extra));
      bases.push_back(extra);
      set_bases(m, std::move(bases));
      break;
    }
    case MutationKind::kWrongIndex: {
      mu.node = choose(rng, ids_where(t, is_rayleigh));
      auto& node = t.nodes.at(mu.node);
      std::vector<int> others;
      for (int label : node.matroid.labels)
        if (label != node.just.i && label != node.just.j) others.push_back(label);
      const int moved = choose(rng, others);
      const bool first = rng.next() % 2 == 0;
      mu.description = "node " + mu.node + " index " + std::to_string(first ? node.just.i : node.just.j) +
                       " -> " + std::to_string(moved);
      (first ? node.just.i : node.just.j) = moved;
      break;
    }
    case MutationKind::kSwapChildren: {
      mu.node = choose(rng, ids_where(t, is_rayleigh));
      auto& j = t.nodes.at(mu.node).just;
      if (rng.next() % 2) {
        std::swap(j.delete_i, j.contract_i);
        mu.description = "node " + mu.node + " delete_i and contract_i exchanged";
      } else {
        std::swap(j.delete_j, j.contract_j);
        mu.description = "node " + mu.node + " delete_j and contract_j exchanged";
      }
      break;
    }
    case MutationKind::kKnownHppName: {
      mu.node = choose(rng, ids_where(t, is_known));
      auto& j = t.nodes.at(mu.node).just;
      std::vector<std::string> names;
      for (const auto& [name, file] : known_hpp_registry())
        if (name != j.name) names.push_back(name);
      const std::string next = choose(rng, names);
      mu.description = "node " + mu.node + " claims " + next + " instead of " + j.name;
      j.name = next;
      break;
    }
  }
  return mu;
}

}  // namespace

std::string mutation_kind_name(MutationKind kind) {
  switch (kind) {
    case MutationKind::kGramEntry: return "gram-entry";
    case MutationKind::kPsdBreak: return "psd-break";
    case MutationKind::kRemoveBasis: return "remove-basis";
    case MutationKind::kAddBasis: return "add-basis";
    case MutationKind::kWrongIndex: return "wrong-index";
    case MutationKind::kSwapChildren: return "swap-children";
    case MutationKind::kKnownHppName: return "known-hpp-name";
  }
  return "?";
}

std::vector<Mutation> seeded_mutations(const ProofTree& tree, int count, std::uint64_t seed) {
  std::vector<Mutation> out;
  for (int k = 0; k < count; ++k) {
    SplitMix64 rng = SplitMix64::for_trial(seed, static_cast<std::uint64_t>(k));
    out.push_back(mutate(tree, kKinds[static_cast<std::size_t>(k) % std::size(kKinds)], rng));
  }
  return out;
}

std::optional<RationalMatrix> psd_breaking_perturbation(const GramCertificate& c, std::uint64_t pick) {
  const int n = static_cast<int>(c.monomials.size());
  std::map<GeneralPoly::Exponents, std::vector<std::pair<int, int>>> by_product;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      auto e = exponents_of(c.monomials[static_cast<std::size_t>(a)], c.nvars);
      const auto f = exponents_of(c.monomials[static_cast<std::size_t>(b)], c.nvars);
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = static_cast<std::uint8_t>(e[k] + f[k]);
      by_product[e].emplace_back(a, b);
    }
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> candidates;
  for (const auto& [product, pairs] : by_product) {
    if (pairs.size() < 2) continue;
    for (const auto& p : pairs) {
      if (p.first == p.second) continue;
      for (const auto& q : pairs)
        if (q != p) candidates.push_back({p, q});
    }
  }
  if (candidates.empty()) return std::nullopt;
  const auto [p, q] = candidates[pick % candidates.size()];
  // A diagonal entry contributes once to its monomial, an off-diagonal one twice.
  auto shift = [](RationalMatrix& g, std::pair<int, int> at, const Rational& amount) {
    if (at.first == at.second) {
      g(at.first, at.first) += 2 * amount;
    } else {
      g(at.first, at.second) += amount;
      g(at.second, at.first) += amount;
    }
  };
  for (Rational delta = 1; delta < Rational(1 << 30); delta *= 4) {
    RationalMatrix g = c.gram;
    shift(g, p, delta);
    shift(g, q, -delta);
    if (!verify_psd(g).is_psd) return g;
  }
  return std::nullopt;
}

}  // namespace vamos
