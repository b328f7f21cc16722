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

// Half-plane-property proof trees.
//
// A Rayleigh node with indices (i, j) is justified when its four children
// are exactly M\i, M/i, M\j, M/j and a Gram certificate proves
// Delta_{i,j} f(M) = m^T G m with G PSD. Leaves are rank <= 2 matroids,
// uniform matroids, or whitelisted 7-element matroids taken on trust.
//
// Tree JSON:
//   {"root": id, "claim": "v10",
//    "nodes": {id: {"lemma": tag, "matroid": <matroid JSON with labels> | ref,
//                   "just": {"kind": "rank2" | "uniform"
//                          | "known-hpp", "name": ...
//                          | "isomorphic", "to": id, "labeling": [...]
//                          | "rayleigh", "i": .., "j": .., "certificate": file,
//                            "children": {"delete_i", "contract_i",
//                                         "delete_j", "contract_j"}}}}}
// Element labels are the root's labels, so certificates and indices refer
// to x_1..x_n of the root polynomial.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vamos/certificates.hpp"
#include "vamos/matroid.hpp"

namespace vamos {

enum class JustificationKind { kRank2, kUniform, kKnownHpp, kIsomorphic, kRayleigh };

struct Justification {
  JustificationKind kind = JustificationKind::kRank2;
  std::string name;                    // known-hpp
  std::string target;                  // isomorphic
  std::vector<int> labeling;           // isomorphic: compact element k+1 -> labeling[k]
  int i = 0;                           // rayleigh, original labels
  int j = 0;
  std::string certificate;
  std::string delete_i, contract_i, delete_j, contract_j;
};

struct ProofNode {
  std::string lemma;
  LabeledMatroid matroid;
  Justification just;
};

struct ProofTree {
  std::string root;
  std::string claim;  // matroid reference the root must equal; may be empty
  std::map<std::string, ProofNode> nodes;
  std::map<std::string, GramCertificate> certificates;
  std::map<std::string, Matroid> known_hpp;
};

// Names accepted as trusted base cases, and their data files.
const std::map<std::string, std::string>& known_hpp_registry();

std::filesystem::path default_data_dir();

// Certificates are loaded from cert_dir (LoadError if one is missing); known
// matroids from matroid_dir. Node matroids are checked structurally only, so
// that check_tree can report a broken exchange axiom as a node failure.
ProofTree load_proof_tree(const std::filesystem::path& path, const std::filesystem::path& cert_dir,
                          const std::filesystem::path& matroid_dir);
ProofTree proof_tree_from_json(const Json& doc, const std::filesystem::path& cert_dir,
                               const std::filesystem::path& matroid_dir);
Json proof_tree_to_json(const ProofTree& tree);

// The bundled tree for V_10.
ProofTree builtin_v10_tree(const std::filesystem::path& data_dir = default_data_dir());
ProofTree builtin_v10_tree(const std::filesystem::path& data_dir,
                           const std::filesystem::path& cert_dir);

enum class Obligation {
  kNone,
  kUnresolvedReference,
  kNotAMatroid,
  kChildMismatch,
  kCertificateTarget,
  kGramIdentity,
  kPsd,
  kRank2,
  kUniform,
  kKnownHpp,
  kIsomorphism,
  kClaim,
};

std::string obligation_name(Obligation o);

struct NodeVerdict {
  std::string id;
  std::string lemma;
  std::string justification;
  bool passed = true;
  Obligation failure = Obligation::kNone;
  std::string message;
  double millis = 0;
};

struct CheckReport {
  std::string root;
  std::vector<NodeVerdict> nodes;  // ordered by node id
  bool passed = true;
  std::optional<NodeVerdict> first_failure;
  int certificates_verified = 0;
};

NodeVerdict check_node(const ProofTree& tree, const std::string& id);

// StructuralError if the reference graph has a cycle.
CheckReport check_tree(const ProofTree& tree, int jobs = 1);

Json report_to_json(const CheckReport& report, bool timings = false);
std::string format_report_text(const CheckReport& report, bool timings = false);

struct IsomorphismClaim {
  std::string lhs;
  std::string rhs;
  bool holds = false;
  std::vector<int> labeling;
};

// The eleven isomorphisms the V_10 argument relies on.
std::vector<IsomorphismClaim> verify_isomorphism_claims(
    const std::filesystem::path& data_dir = default_data_dir());

}  // namespace vamos
