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

#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "vamos/checksum.hpp"
#include "vamos/error.hpp"
#include "vamos/io.hpp"
#include "vamos/mutation.hpp"
#include "vamos/proof.hpp"

using namespace vamos;

namespace {

const ProofTree& bundled_tree() {
  static const ProofTree tree = builtin_v10_tree(fixtures::data_dir());
  return tree;
}

const NodeVerdict& verdict_for(const CheckReport& r, const std::string& id) {
  for (const auto& v : r.nodes)
    if (v.id == id) return v;
  FAIL("no verdict for " << id);
  return r.nodes.front();
}

}  // namespace

TEST_CASE("bundled V10 tree verifies") {
  const auto report = check_tree(bundled_tree());
  for (const auto& v : report.nodes) CHECK_MESSAGE(v.passed, v.id << ": " << v.message);
  CHECK(report.passed);
  CHECK(report.certificates_verified == 5);
  CHECK(report.nodes.size() == 21);
  CHECK(report.root == "V10");
}

TEST_CASE("tree shape") {
  const auto& t = bundled_tree();
  std::map<JustificationKind, int> kinds;
  for (const auto& [id, node] : t.nodes) ++kinds[node.just.kind];
  CHECK(kinds[JustificationKind::kRayleigh] == 5);
  CHECK(kinds[JustificationKind::kRank2] == 4);
  CHECK(kinds[JustificationKind::kUniform] == 2);
  CHECK(kinds[JustificationKind::kKnownHpp] == 4);
  CHECK(kinds[JustificationKind::kIsomorphic] == 6);

  std::set<std::string> certs;
  for (const auto& [id, node] : t.nodes) {
    if (node.just.kind == JustificationKind::kRayleigh) certs.insert(node.just.certificate);
    // every contraction of a rank-3 matroid is a rank-2 leaf
    if (node.matroid.matroid.rank() <= 2) CHECK(node.just.kind == JustificationKind::kRank2);
  }
  CHECK(certs == std::set<std::string>{"cert1.json", "cert2.json", "cert3.json", "cert4.json", "cert5.json"});
  const auto& root = t.nodes.at("V10");
  CHECK(root.just.i == 5);
  CHECK(root.just.j == 7);
  CHECK(root.just.certificate == "cert5.json");
}

TEST_CASE("tree JSON round trip") {
  const auto& t = bundled_tree();
  const auto again = proof_tree_from_json(proof_tree_to_json(t), fixtures::data_dir() / "certificates",
                                          fixtures::data_dir() / "matroids");
  CHECK(proof_tree_to_json(again) == proof_tree_to_json(t));
  CHECK(check_tree(again).passed);
}

TEST_CASE("isomorphism claims") {
  const auto claims = verify_isomorphism_claims(fixtures::data_dir());
  REQUIRE(claims.size() == 11);
  for (const auto& c : claims) {
    CHECK_MESSAGE(c.holds, c.lhs << " ~ " << c.rhs);
    CHECK(!c.labeling.empty());
  }
  CHECK(claims[0].lhs == "V10\\{5,7}/1");
  CHECK(claims[0].rhs == "F7^-5");
}

TEST_CASE("root Gram entry mutation fails the root identity") {
  ProofTree t = bundled_tree();
  t.certificates.at("cert5.json").gram(0, 0) = 2;
  const auto report = check_tree(t);
  CHECK_FALSE(report.passed);
  REQUIRE(report.first_failure);
  CHECK(report.first_failure->id == "V10");
  CHECK(report.first_failure->failure == Obligation::kGramIdentity);
  CHECK(report.first_failure->message.find("x6^2*x8^2*x10^2") != std::string::npos);
  // only the root depends on cert5
  int failures = 0;
  for (const auto& v : report.nodes) failures += v.passed ? 0 : 1;
  CHECK(failures == 1);
}

TEST_CASE("identity-preserving perturbation is caught by the PSD check") {
  ProofTree t = bundled_tree();
  auto& cert = t.certificates.at("cert3.json");
  const auto broken = psd_breaking_perturbation(cert);
  REQUIRE(broken);
  cert.gram = *broken;
  const auto v = check_node(t, "V10/5");
  CHECK_FALSE(v.passed);
  CHECK(v.failure == Obligation::kPsd);
}

TEST_CASE("wrong index pair") {
  ProofTree t = bundled_tree();
  t.nodes.at("V10").just.j = 8;
  const auto v = check_node(t, "V10");
  CHECK_FALSE(v.passed);
  CHECK(v.failure == Obligation::kChildMismatch);

  // children relabeled consistently, but cert5 still certifies (5,7)
  ProofTree u = bundled_tree();
  auto& j = u.nodes.at("V10/5").just;
  std::swap(j.i, j.j);
  std::swap(j.delete_i, j.delete_j);
  std::swap(j.contract_i, j.contract_j);
  const auto w = check_node(u, "V10/5");
  CHECK(w.failure == Obligation::kCertificateTarget);
}

TEST_CASE("broken exchange axiom is reported at the node") {
  ProofTree t = bundled_tree();
  auto& m = t.nodes.at("V10/5/1").matroid;
  auto bases = m.matroid.bases();
  // a rank-2 matroid on 8 elements with only two disjoint bases
  m.matroid = Matroid::from_bases(m.matroid.size(), 2, {make_subset({1, 2}), make_subset({3, 4})});
  const auto v = check_node(t, "V10/5/1");
  CHECK(v.failure == Obligation::kNotAMatroid);
  CHECK(check_node(t, "V10/5").failure == Obligation::kChildMismatch);
}

TEST_CASE("base case failures") {
  ProofTree t = bundled_tree();
  t.nodes.at("V10/5/1").just.kind = JustificationKind::kUniform;
  CHECK(check_node(t, "V10/5/1").failure == Obligation::kUniform);
  t.nodes.at("V10/5").just = Justification{};
  CHECK(check_node(t, "V10/5").failure == Obligation::kRank2);
  t.nodes.at("V10\\5\\7/1").just.name = "F7^-6";
  CHECK(check_node(t, "V10\\5\\7/1").failure == Obligation::kKnownHpp);
  t.nodes.at("V10\\5\\7/3").just.name = "F7";
  CHECK(check_node(t, "V10\\5\\7/3").failure == Obligation::kKnownHpp);
  // swapping 1 and 2 is an automorphism; 2 and 3 is not
  auto& iso = t.nodes.at("V10\\7").just.labeling;
  std::swap(iso[0], iso[1]);
  CHECK(check_node(t, "V10\\7").passed);
  std::swap(iso[1], iso[2]);
  CHECK(check_node(t, "V10\\7").failure == Obligation::kIsomorphism);
}

TEST_CASE("unresolved references and root claim") {
  ProofTree t = bundled_tree();
  t.nodes.at("V10").just.delete_i = "nowhere";
  CHECK(check_node(t, "V10").failure == Obligation::kUnresolvedReference);
  CHECK(check_node(t, "missing").failure == Obligation::kUnresolvedReference);

  ProofTree u = bundled_tree();
  u.claim = "v8";
  CHECK(check_node(u, "V10").failure == Obligation::kClaim);
}

TEST_CASE("cycles are structural errors") {
  ProofTree t = bundled_tree();
  auto& leaf = t.nodes.at("V10/5/1").just;
  leaf.kind = JustificationKind::kIsomorphic;
  leaf.target = "V10";
  leaf.labeling = {1, 2, 3, 4, 5, 6, 7, 8};
  CHECK_THROWS_AS(check_tree(t), StructuralError);
}

TEST_CASE("loader errors") {
  const auto tree_path = fixtures::data_dir() / "proofs" / "v10.json";
  CHECK_THROWS_AS(load_proof_tree(tree_path, "/nonexistent", fixtures::data_dir() / "matroids"), LoadError);
  CHECK_THROWS_AS(proof_tree_from_json(Json::parse(R"({"root": "a", "nodes": {}})"), ".", "."), ParseError);
  CHECK_THROWS_AS(proof_tree_from_json(Json::parse(R"({"root": "a", "nodes": {"a": {"matroid": "v8",
      "just": {"kind": "magic"}}}})"), ".", "."), ParseError);
}

TEST_CASE("report does not depend on the job count") {
  const auto a = check_tree(bundled_tree(), 1);
  const auto b = check_tree(bundled_tree(), 4);
  CHECK(report_to_json(a).dump() == report_to_json(b).dump());
  CHECK(format_report_text(a) == format_report_text(b));
  CHECK(format_report_text(a).find("verdict: pass") != std::string::npos);
  CHECK(report_to_json(a, true)["nodes"][0].contains("millis"));
  CHECK_FALSE(report_to_json(a)["nodes"][0].contains("millis"));
}

TEST_CASE("seeded mutations are all rejected") {
  const auto mutants = seeded_mutations(bundled_tree(), 28, 2026);
  REQUIRE(mutants.size() == 28);
  std::set<MutationKind> kinds;
  for (const auto& m : mutants) {
    kinds.insert(m.kind);
    CHECK_MESSAGE(!check_tree(m.tree).passed, mutation_kind_name(m.kind) << ": " << m.description);
  }
  CHECK(kinds.size() == 7);
  const auto again = seeded_mutations(bundled_tree(), 28, 2026);
  for (std::size_t k = 0; k < mutants.size(); ++k) CHECK(again[k].description == mutants[k].description);
}

TEST_CASE("bundled data matches its checksums") {
  const auto entries = verify_checksums(fixtures::data_dir());
  CHECK(entries.size() == 12);
  for (const auto& e : entries) CHECK_MESSAGE(e.ok(), e.file);

  const auto dir = std::filesystem::temp_directory_path() / "vamos_checksum_test";
  std::filesystem::create_directories(dir / "certificates");
  write_text_file(dir / "SHA256SUMS", read_text_file(fixtures::data_dir() / "SHA256SUMS"));
  write_text_file(dir / "certificates" / "cert1.json", "{}");
  int bad = 0, missing = 0;
  for (const auto& e : verify_checksums(dir)) {
    bad += e.ok() ? 0 : 1;
    missing += e.actual.empty() ? 1 : 0;
  }
  CHECK(bad == 12);
  CHECK(missing == 11);
  // sha256("") is a fixed value
  write_text_file(dir / "empty", "");
  CHECK(sha256_file(dir / "empty") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  write_text_file(dir / "SHA256SUMS", "nonsense\n");
  CHECK_THROWS_AS(verify_checksums(dir), ParseError);
  std::filesystem::remove_all(dir);
  CHECK_THROWS_AS(verify_checksums(dir), LoadError);
}
