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

#include "vamos/proof.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>

#include "parallel.hpp"
#include "vamos/error.hpp"
#include "vamos/stability.hpp"

#ifndef VAMOS_DATA_DIR
#define VAMOS_DATA_DIR "data"
#endif

namespace vamos {
namespace {

// Known-HPP entries are sampled before they are trusted.
constexpr int kKnownHppTrials = 200;
constexpr std::uint64_t kKnownHppSeed = 1;

const std::map<std::string, JustificationKind>& kind_names() {
  static const std::map<std::string, JustificationKind> names = {
      {"rank2", JustificationKind::kRank2},
      {"uniform", JustificationKind::kUniform},
      {"known-hpp", JustificationKind::kKnownHpp},
      {"isomorphic", JustificationKind::kIsomorphic},
      {"rayleigh", JustificationKind::kRayleigh},
  };
  return names;
}

std::string kind_name(JustificationKind kind) {
  for (const auto& [name, k] : kind_names()) {
    if (k == kind) return name;
  }
  return "?";
}

std::string require_string(const Json& doc, const char* key, const std::string& where) {
  if (!doc.contains(key) || !doc.at(key).is_string()) {
    throw ParseError(where + ": missing string field \"" + key + "\"");
  }
  return doc.at(key).get<std::string>();
}

int require_integer(const Json& doc, const char* key, const std::string& where) {
  if (!doc.contains(key) || !doc.at(key).is_number_integer()) {
    throw ParseError(where + ": missing integer field \"" + key + "\"");
  }
  return doc.at(key).get<int>();
}

Justification justification_from_json(const Json& doc, const std::string& where) {
  if (!doc.is_object()) throw ParseError(where + ": \"just\" must be an object");
  const std::string kind = require_string(doc, "kind", where);
  const auto it = kind_names().find(kind);
  if (it == kind_names().end()) throw ParseError(where + ": unknown justification '" + kind + "'");
  Justification j;
  j.kind = it->second;
  switch (j.kind) {
    case JustificationKind::kRank2:
    case JustificationKind::kUniform:
      break;
    case JustificationKind::kKnownHpp:
      j.name = require_string(doc, "name", where);
      break;
    case JustificationKind::kIsomorphic:
      j.target = require_string(doc, "to", where);
      if (!doc.contains("labeling") || !doc.at("labeling").is_array()) {
        throw ParseError(where + ": isomorphic justification needs a \"labeling\" array");
      }
      for (const auto& v : doc.at("labeling")) {
        if (!v.is_number_integer()) throw ParseError(where + ": labeling entries must be integers");
        j.labeling.push_back(v.get<int>());
      }
      break;
    case JustificationKind::kRayleigh: {
      j.i = require_integer(doc, "i", where);
      j.j = require_integer(doc, "j", where);
      j.certificate = require_string(doc, "certificate", where);
      if (!doc.contains("children") || !doc.at("children").is_object()) {
        throw ParseError(where + ": rayleigh justification needs \"children\"");
      }
      const auto& c = doc.at("children");
      j.delete_i = require_string(c, "delete_i", where);
      j.contract_i = require_string(c, "contract_i", where);
      j.delete_j = require_string(c, "delete_j", where);
      j.contract_j = require_string(c, "contract_j", where);
      break;
    }
  }
  return j;
}

Json justification_to_json(const Justification& j) {
  Json doc{{"kind", kind_name(j.kind)}};
  switch (j.kind) {
    case JustificationKind::kRank2:
    case JustificationKind::kUniform:
      break;
    case JustificationKind::kKnownHpp:
      doc["name"] = j.name;
      break;
    case JustificationKind::kIsomorphic:
      doc["to"] = j.target;
      doc["labeling"] = j.labeling;
      break;
    case JustificationKind::kRayleigh:
      doc["i"] = j.i;
      doc["j"] = j.j;
      doc["certificate"] = j.certificate;
      doc["children"] = Json{{"delete_i", j.delete_i}, {"contract_i", j.contract_i},
                             {"delete_j", j.delete_j}, {"contract_j", j.contract_j}};
      break;
  }
  return doc;
}

std::string describe_justification(const Justification& j) {
  switch (j.kind) {
    case JustificationKind::kRank2: return "rank <= 2";
    case JustificationKind::kUniform: return "uniform";
    case JustificationKind::kKnownHpp: return "known HPP " + j.name;
    case JustificationKind::kIsomorphic: return "isomorphic to " + j.target;
    case JustificationKind::kRayleigh:
      return "Rayleigh (" + std::to_string(j.i) + "," + std::to_string(j.j) + ") " + j.certificate;
  }
  return "?";
}

std::vector<std::string> references(const Justification& j) {
  if (j.kind == JustificationKind::kIsomorphic) return {j.target};
  if (j.kind == JustificationKind::kRayleigh) return {j.delete_i, j.contract_i, j.delete_j, j.contract_j};
  return {};
}

std::string labels_text(const std::vector<int>& labels) {
  std::string out = "{";
  for (std::size_t k = 0; k < labels.size(); ++k) out += (k ? "," : "") + std::to_string(labels[k]);
  return out + "}";
}

struct Failure {
  Obligation obligation;
  std::string message;
};

std::optional<Failure> check_rayleigh(const ProofTree& tree, const ProofNode& node) {
  const auto& j = node.just;
  const LabeledMatroid& m = node.matroid;
  if (j.i == j.j || !m.has_label(j.i) || !m.has_label(j.j)) {
    return Failure{Obligation::kChildMismatch, "indices (" + std::to_string(j.i) + "," +
                                                   std::to_string(j.j) + ") are not two elements of " +
                                                   labels_text(m.labels)};
  }
  struct Expected {
    const char* role;
    const std::string* child;
    std::function<LabeledMatroid()> make;
  };
  const Expected expected[] = {
      {"delete_i", &j.delete_i, [&] { return delete_label(m, j.i); }},
      {"contract_i", &j.contract_i, [&] { return contract_label(m, j.i); }},
      {"delete_j", &j.delete_j, [&] { return delete_label(m, j.j); }},
      {"contract_j", &j.contract_j, [&] { return contract_label(m, j.j); }},
  };
  for (const auto& e : expected) {
    LabeledMatroid minor_m = [&] {
      try {
        return e.make();
      } catch (const DomainError& err) {
        throw Failure{Obligation::kChildMismatch, std::string(e.role) + ": " + err.what()};
      }
    }();
    const auto& child = tree.nodes.at(*e.child).matroid;
    if (!(minor_m == child)) {
      return Failure{Obligation::kChildMismatch,
                     std::string(e.role) + " child " + *e.child + " is not the expected minor"};
    }
  }

  const auto& cert = tree.certificates.at(j.certificate);
  const MultiAffinePoly f = basis_generating_poly(m, cert.nvars);
  const GeneralPoly target = rayleigh_difference(f, j.i, j.j);
  if (cert.target) {
    const auto& r = *cert.target;
    if (r.i != j.i || r.j != j.j) {
      return Failure{Obligation::kCertificateTarget,
                     j.certificate + " certifies " + describe(r) + ", node needs indices (" +
                         std::to_string(j.i) + "," + std::to_string(j.j) + ")"};
    }
    if (!poly_equal(target_polynomial(resolve_matroid(r.matroid, "."), r), target)) {
      return Failure{Obligation::kCertificateTarget,
                     j.certificate + " target " + describe(r) + " is not this node's Rayleigh difference"};
    }
  }
  const auto identity = verify_gram_identity(cert, target);
  if (!identity.holds) {
    return Failure{Obligation::kGramIdentity, j.certificate + ": " + identity.reason};
  }
  try {
    const auto psd = verify_psd(cert.gram);
    if (!psd.is_psd) {
      return Failure{Obligation::kPsd, j.certificate + ": Gram matrix is not PSD, u^T G u = " +
                                           to_string(psd.witness_value)};
    }
  } catch (const DomainError& err) {
    return Failure{Obligation::kPsd, j.certificate + ": " + err.what()};
  }
  return std::nullopt;
}

std::optional<Failure> check_justification(const ProofTree& tree, const std::string& id,
                                           const ProofNode& node) {
  for (const auto& ref : references(node.just)) {
    if (!tree.nodes.count(ref)) {
      return Failure{Obligation::kUnresolvedReference, "node '" + ref + "' does not exist"};
    }
  }
  if (node.just.kind == JustificationKind::kRayleigh && !tree.certificates.count(node.just.certificate)) {
    return Failure{Obligation::kUnresolvedReference,
                   "certificate '" + node.just.certificate + "' is not loaded"};
  }
  const Matroid& m = node.matroid.matroid;
  const auto exchange = check_basis_exchange(m);
  if (!exchange.holds) {
    return Failure{Obligation::kNotAMatroid, "bases violate the exchange axiom"};
  }
  if (id == tree.root && !tree.claim.empty()) {
    const Matroid claimed = resolve_matroid(tree.claim, ".");
    if (!(node.matroid == LabeledMatroid::identity(claimed))) {
      return Failure{Obligation::kClaim, "root is not the matroid '" + tree.claim + "'"};
    }
  }
  switch (node.just.kind) {
    case JustificationKind::kRank2:
      if (m.rank() > 2) return Failure{Obligation::kRank2, "rank is " + std::to_string(m.rank())};
      return std::nullopt;
    case JustificationKind::kUniform:
      if (m.bases() != k_subsets(m.size(), m.rank())) {
        return Failure{Obligation::kUniform, "not every " + std::to_string(m.rank()) + "-subset is a basis"};
      }
      return std::nullopt;
    case JustificationKind::kKnownHpp: {
      const auto it = tree.known_hpp.find(node.just.name);
      if (!known_hpp_registry().count(node.just.name) || it == tree.known_hpp.end()) {
        return Failure{Obligation::kKnownHpp, "'" + node.just.name + "' is not a whitelisted base case"};
      }
      if (!are_isomorphic(m, it->second)) {
        return Failure{Obligation::kKnownHpp, "not isomorphic to " + node.just.name};
      }
      const auto sample =
          sample_stability(basis_generating_poly(it->second), kKnownHppTrials, kKnownHppSeed);
      if (!sample.passed()) {
        return Failure{Obligation::kKnownHpp, node.just.name + " fails sampled stability"};
      }
      return std::nullopt;
    }
    case JustificationKind::kIsomorphic: {
      const Matroid& target = tree.nodes.at(node.just.target).matroid.matroid;
      if (static_cast<int>(node.just.labeling.size()) != m.size()) {
        return Failure{Obligation::kIsomorphism, "labeling has the wrong length"};
      }
      try {
        if (!(relabel(m, GroundSetLabeling(node.just.labeling)) == target)) {
          return Failure{Obligation::kIsomorphism,
                         "labeling does not map the bases onto those of " + node.just.target};
        }
      } catch (const StructuralError& err) {
        return Failure{Obligation::kIsomorphism, err.what()};
      }
      return std::nullopt;
    }
    case JustificationKind::kRayleigh:
      try {
        return check_rayleigh(tree, node);
      } catch (const Failure& f) {
        return f;
      }
  }
  return std::nullopt;
}

void check_acyclic(const ProofTree& tree) {
  enum class Mark { kNew, kActive, kDone };
  std::map<std::string, Mark> mark;
  std::function<void(const std::string&)> visit = [&](const std::string& id) {
    auto& state = mark[id];
    if (state == Mark::kDone) return;
    if (state == Mark::kActive) throw StructuralError("proof tree has a cycle through '" + id + "'");
    state = Mark::kActive;
    for (const auto& ref : references(tree.nodes.at(id).just)) {
      if (tree.nodes.count(ref)) visit(ref);
    }
    mark[id] = Mark::kDone;
  };
  for (const auto& [id, node] : tree.nodes) visit(id);
}

std::string fixed_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", ms);
  return buf;
}

}  // namespace

const std::map<std::string, std::string>& known_hpp_registry() {
  static const std::map<std::string, std::string> registry = {
      {"F7^-5", "f7_minus5.json"},
      {"F7^-6", "f7_minus6.json"},
      {"(F7^-6)*", "f7_minus6_dual.json"},
  };
  return registry;
}

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("VAMOS_DATA_DIR"); env != nullptr && *env != '\0') return env;
  return VAMOS_DATA_DIR;
}

ProofTree proof_tree_from_json(const Json& doc, const std::filesystem::path& cert_dir,
                               const std::filesystem::path& matroid_dir) {
  if (!doc.is_object()) throw ParseError("proof tree must be a JSON object");
  ProofTree tree;
  tree.root = require_string(doc, "root", "proof tree");
  if (doc.contains("claim")) tree.claim = require_string(doc, "claim", "proof tree");
  if (!doc.contains("nodes") || !doc.at("nodes").is_object()) {
    throw ParseError("proof tree needs a \"nodes\" object");
  }
  for (const auto& [id, entry] : doc.at("nodes").items()) {
    const std::string where = "node '" + id + "'";
    if (!entry.is_object() || !entry.contains("matroid") || !entry.contains("just")) {
      throw ParseError(where + ": needs \"matroid\" and \"just\"");
    }
    ProofNode node{entry.value("lemma", ""), LabeledMatroid::identity(uniform_matroid(0, 1)), {}};
    const auto& mj = entry.at("matroid");
    try {
      node.matroid = mj.is_string() ? LabeledMatroid::identity(resolve_matroid(mj.get<std::string>(), matroid_dir))
                                    : labeled_matroid_from_json(mj, false);
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
    node.just = justification_from_json(entry.at("just"), where);
    if (node.just.kind == JustificationKind::kRayleigh && !tree.certificates.count(node.just.certificate)) {
      tree.certificates.emplace(node.just.certificate,
                                read_certificate_file(cert_dir / node.just.certificate));
    }
    tree.nodes.emplace(id, std::move(node));
  }
  if (!tree.nodes.count(tree.root)) throw ParseError("root '" + tree.root + "' is not a node");
  for (const auto& [name, file] : known_hpp_registry()) {
    const auto path = matroid_dir / file;
    if (std::filesystem::exists(path)) tree.known_hpp.emplace(name, read_matroid_file(path));
  }
  return tree;
}

ProofTree load_proof_tree(const std::filesystem::path& path, const std::filesystem::path& cert_dir,
                          const std::filesystem::path& matroid_dir) {
  return proof_tree_from_json(read_json_file(path), cert_dir, matroid_dir);
}

Json proof_tree_to_json(const ProofTree& tree) {
  Json nodes = Json::object();
  for (const auto& [id, node] : tree.nodes) {
    nodes[id] = Json{{"lemma", node.lemma},
                     {"matroid", matroid_to_json(node.matroid)},
                     {"just", justification_to_json(node.just)}};
  }
  Json doc{{"root", tree.root}, {"nodes", nodes}};
  if (!tree.claim.empty()) doc["claim"] = tree.claim;
  return doc;
}

ProofTree builtin_v10_tree(const std::filesystem::path& data_dir) {
  return builtin_v10_tree(data_dir, data_dir / "certificates");
}

ProofTree builtin_v10_tree(const std::filesystem::path& data_dir, const std::filesystem::path& cert_dir) {
  return load_proof_tree(data_dir / "proofs" / "v10.json", cert_dir, data_dir / "matroids");
}

std::string obligation_name(Obligation o) {
  switch (o) {
    case Obligation::kNone: return "none";
    case Obligation::kUnresolvedReference: return "unresolved reference";
    case Obligation::kNotAMatroid: return "not a matroid";
    case Obligation::kChildMismatch: return "child/minor mismatch";
    case Obligation::kCertificateTarget: return "certificate target mismatch";
    case Obligation::kGramIdentity: return "Gram identity";
    case Obligation::kPsd: return "PSD";
    case Obligation::kRank2: return "rank-2 base case";
    case Obligation::kUniform: return "uniform base case";
    case Obligation::kKnownHpp: return "known-HPP base case";
    case Obligation::kIsomorphism: return "isomorphism";
    case Obligation::kClaim: return "root claim";
  }
  return "?";
}

NodeVerdict check_node(const ProofTree& tree, const std::string& id) {
  const auto it = tree.nodes.find(id);
  if (it == tree.nodes.end()) {
    return NodeVerdict{id, "", "", false, Obligation::kUnresolvedReference, "no such node", 0};
  }
  const auto start = std::chrono::steady_clock::now();
  NodeVerdict v{id, it->second.lemma, describe_justification(it->second.just), true, Obligation::kNone, "", 0};
  if (const auto failure = check_justification(tree, id, it->second)) {
    v.passed = false;
    v.failure = failure->obligation;
    v.message = failure->message;
  }
  v.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return v;
}

CheckReport check_tree(const ProofTree& tree, int jobs) {
  check_acyclic(tree);
  std::vector<std::string> ids;
  for (const auto& [id, node] : tree.nodes) ids.push_back(id);
  CheckReport report;
  report.root = tree.root;
  report.nodes.resize(ids.size());
  detail::parallel_for(static_cast<int>(ids.size()), jobs,
                       [&](int k) { report.nodes[static_cast<std::size_t>(k)] = check_node(tree, ids[static_cast<std::size_t>(k)]); });
  for (const auto& v : report.nodes) {
    if (!v.passed) {
      report.passed = false;
      if (!report.first_failure) report.first_failure = v;
    } else if (tree.nodes.at(v.id).just.kind == JustificationKind::kRayleigh) {
      ++report.certificates_verified;
    }
  }
  return report;
}

Json report_to_json(const CheckReport& report, bool timings) {
  Json nodes = Json::array();
  for (const auto& v : report.nodes) {
    Json n{{"id", v.id}, {"lemma", v.lemma}, {"justification", v.justification},
           {"verdict", v.passed ? "pass" : "fail"}};
    if (!v.passed) {
      n["obligation"] = obligation_name(v.failure);
      n["message"] = v.message;
    }
    if (timings) n["millis"] = std::stod(fixed_ms(v.millis));
    nodes.push_back(n);
  }
  Json doc{{"root", report.root},
           {"verdict", report.passed ? "pass" : "fail"},
           {"certificates_verified", report.certificates_verified},
           {"nodes", nodes}};
  if (report.first_failure) {
    doc["first_failure"] = Json{{"id", report.first_failure->id},
                                {"obligation", obligation_name(report.first_failure->failure)},
                                {"message", report.first_failure->message}};
  }
  return doc;
}

std::string format_report_text(const CheckReport& report, bool timings) {
  std::string out;
  std::map<std::string, std::pair<int, int>> lemmas;  // tag -> (nodes, failures)
  for (const auto& v : report.nodes) {
    out += std::string(v.passed ? "  [pass] " : "  [FAIL] ") + v.id;
    out += std::string(v.id.size() < 16 ? 16 - v.id.size() : 1, ' ');
    out += v.lemma + std::string(v.lemma.size() < 12 ? 12 - v.lemma.size() : 1, ' ');
    out += v.justification;
    if (timings) out += "  " + fixed_ms(v.millis) + " ms";
    if (!v.passed) out += "\n         " + obligation_name(v.failure) + ": " + v.message;
    out += "\n";
    auto& [count, failures] = lemmas[v.lemma];
    ++count;
    if (!v.passed) ++failures;
  }
  std::string summary = "lemmas:\n";
  for (const auto& [tag, stats] : lemmas) {
    summary += "  " + tag + std::string(tag.size() < 12 ? 12 - tag.size() : 1, ' ') +
               (stats.second == 0 ? "pass" : "FAIL") + " (" + std::to_string(stats.first) + " nodes)\n";
  }
  std::string head = "proof tree rooted at " + report.root + ": " + std::to_string(report.nodes.size()) +
                     " nodes, " + std::to_string(report.certificates_verified) + " certificates verified\n";
  std::string verdict;
  if (report.passed) {
    verdict = "verdict: pass, " + report.root + " has the half-plane property\n";
  } else {
    verdict = "verdict: FAIL at " + report.first_failure->id + " (" +
              obligation_name(report.first_failure->failure) + ")\n";
  }
  return head + out + summary + verdict;
}

std::vector<IsomorphismClaim> verify_isomorphism_claims(const std::filesystem::path& data_dir) {
  const auto v10 = LabeledMatroid::identity(vamos_matroid(5));
  auto minor_of = [&](std::vector<int> del, std::vector<int> con) {
    return minor(v10, del, con).matroid;
  };
  auto known = [&](const std::string& name) {
    return read_matroid_file(data_dir / "matroids" / known_hpp_registry().at(name));
  };
  struct Spec {
    std::string lhs, rhs;
    Matroid a, b;
  };
  const std::vector<Spec> specs = {
      {"V10\\{5,7}/1", "F7^-5", minor_of({5, 7}, {1}), known("F7^-5")},
      {"V10\\{5,7}/3", "F7^-6", minor_of({5, 7}, {3}), known("F7^-6")},
      {"V10\\{5,7}\\1", "U4,7", minor_of({5, 7, 1}, {}), uniform_matroid(4, 7)},
      {"V10\\{5,7}\\3", "(F7^-6)*", minor_of({5, 7, 3}, {}), known("(F7^-6)*")},
      {"V10/5\\7\\1", "F7^-6", minor_of({7, 1}, {5}), known("F7^-6")},
      {"V10/5\\7\\6", "U3,7", minor_of({7, 6}, {5}), uniform_matroid(3, 7)},
      {"V10/5\\1", "V10/5\\7", minor_of({1}, {5}), minor_of({7}, {5})},
      {"V10\\5/9", "V10\\5/7", minor_of({5}, {9}), minor_of({5}, {7})},
      {"V10\\{5,9}", "V10\\{5,7}", minor_of({5, 9}, {}), minor_of({5, 7}, {})},
      {"V10/5", "V10/7", minor_of({}, {5}), minor_of({}, {7})},
      {"V10\\5", "V10\\7", minor_of({5}, {}), minor_of({7}, {})},
  };
  std::vector<IsomorphismClaim> out;
  for (const auto& s : specs) {
    IsomorphismClaim c{s.lhs, s.rhs, false, {}};
    if (const auto pi = are_isomorphic(s.a, s.b)) {
      c.holds = relabel(s.a, *pi) == s.b;
      c.labeling = pi->image();
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace vamos
