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

// vamos: command-line front end.
//
// Exit codes: 0 ok, 1 verification failed, 2 Gram identity failed, 3 Gram
// matrix not PSD, 4 parse or I/O error, 64 usage error.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vamos/certificates.hpp"
#include "vamos/checksum.hpp"
#include "vamos/error.hpp"
#include "vamos/io.hpp"
#include "vamos/matroid.hpp"
#include "vamos/polynomial.hpp"
#include "vamos/proof.hpp"
#include "vamos/stability.hpp"

namespace {

using namespace vamos;
namespace fs = std::filesystem;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kIdentityFailed = 2;
constexpr int kPsdFailed = 3;
constexpr int kIoError = 4;
constexpr int kUsage = 64;

// Bad command-line values, as opposed to bad file contents.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::string output;
  fs::path data_dir = default_data_dir();
  int jobs = 1;
  bool json() const { return format == "json"; }
};

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
  } else {
    write_text_file(opt.output, text);
  }
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Matroid load_matroid(const std::string& ref) {
  try {
    return resolve_matroid(ref, fs::current_path());
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

std::string elements_text(Subset s) {
  std::string out = "{";
  for (int e : elements_of(s)) out += (out.size() > 1 ? "," : "") + std::to_string(e);
  return out + "}";
}

// ---- generate

struct GenerateArgs {
  int n = 0;
  int r = 0;
  std::string matrix;
};

int run_generate(const Options& opt, const std::string& kind, const GenerateArgs& a) {
  Matroid m = [&] {
    try {
      if (kind == "vamos") return vamos_matroid(a.n);
      if (kind == "uniform") return uniform_matroid(a.r, a.n);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    return matroid_from_matrix(matrix_from_json(read_json_file(a.matrix)));
  }();
  const std::string text = format_matroid(m);
  if (opt.output.empty()) {
    std::cout << text;
  } else {
    write_text_file(opt.output, text);
  }
  auto& summary = opt.output.empty() ? std::cerr : std::cout;
  if (opt.json()) {
    summary << Json{{"bases", m.basis_count()}, {"rank", m.rank()}, {"elements", m.size()}}.dump() << "\n";
  } else {
    summary << m.basis_count() << " bases, rank " << m.rank() << ", " << m.size() << " elements\n";
  }
  return kOk;
}

// ---- poly / rayleigh

int run_poly(const Options& opt, const std::string& ref) {
  const auto f = basis_generating_poly(load_matroid(ref));
  emit(opt, opt.json() ? dump(poly_to_json(f)) : format_poly_text(f));
  return kOk;
}

int run_rayleigh(const Options& opt, const std::string& ref, TargetRecipe recipe) {
  const Matroid m = load_matroid(ref);
  if (recipe.i == recipe.j) throw UsageError("Rayleigh indices must differ");
  for (int e : {recipe.i, recipe.j}) {
    if (e < 1 || e > m.size()) throw UsageError("index " + std::to_string(e) + " outside 1.." + std::to_string(m.size()));
  }
  GeneralPoly target(m.size());
  try {
    target = target_polynomial(m, recipe);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  emit(opt, opt.json() ? dump(poly_to_json(target)) : format_poly_text(target));
  return kOk;
}

// ---- verify-cert

int run_verify_cert(const Options& opt, const std::string& path, const std::string& target_ref,
                    std::optional<TargetRecipe> override_recipe) {
  const GramCertificate cert = read_certificate_file(path);
  TargetRecipe recipe;
  if (override_recipe) {
    recipe = *override_recipe;
  } else if (cert.target) {
    recipe = *cert.target;
  } else {
    throw UsageError(path + " has no target; pass --matroid with --i and --j");
  }
  const fs::path base = fs::path(path).parent_path();
  const Matroid m = target_ref.empty() ? resolve_matroid(recipe.matroid, base.empty() ? "." : base)
                                       : load_matroid(target_ref);
  const GeneralPoly target = target_polynomial(m, recipe);
  const auto identity = verify_gram_identity(cert, target);
  const auto psd = verify_psd(cert.gram);

  Json doc{{"certificate", fs::path(path).filename().string()},
           {"target", describe(recipe)},
           {"monomials", cert.monomials.size()},
           {"target_terms", target.term_count()},
           {"identity", identity.holds ? "pass" : "fail"},
           {"psd", psd.is_psd ? "pass" : "fail"},
           {"rank", psd.rank}};
  if (!identity.holds) {
    doc["identity_failure"] = identity.reason;
    if (identity.monomial) {
      doc["differing_monomial"] = format_monomial(*identity.monomial);
      doc["target_coefficient"] = to_string(identity.target_coeff);
      doc["gram_coefficient"] = to_string(identity.gram_coeff);
    }
  }
  if (!psd.is_psd) {
    Json w = Json::array();
    for (const auto& x : psd.witness) w.push_back(to_string(x));
    doc["psd_witness"] = w;
    doc["psd_witness_value"] = to_string(psd.witness_value);
  }
  const int code = !identity.holds ? kIdentityFailed : !psd.is_psd ? kPsdFailed : kOk;
  doc["verdict"] = code == kOk ? "pass" : "fail";

  if (opt.json()) {
    emit(opt, dump(doc));
  } else {
    std::string out = doc["certificate"].get<std::string>() + ": " + describe(recipe) + "\n";
    out += "  " + std::to_string(cert.monomials.size()) + " monomials, target has " +
           std::to_string(target.term_count()) + " terms\n";
    out += "  Gram identity: " + std::string(identity.holds ? "pass" : "FAIL " + identity.reason) + "\n";
    out += "  PSD: " + std::string(psd.is_psd ? "pass, rank " + std::to_string(psd.rank)
                                               : "FAIL, u^T G u = " + to_string(psd.witness_value)) +
           "\n";
    out += std::string("verdict: ") + (code == kOk ? "pass" : "FAIL") + "\n";
    emit(opt, out);
  }
  return code;
}

// ---- certify-hpp

int run_certify(const Options& opt, const std::string& builtin, const std::string& tree_path,
                const std::string& cert_dir, bool timings) {
  ProofTree tree;
  if (!builtin.empty()) {
    if (builtin != "v10") throw UsageError("only the builtin tree 'v10' exists");
    try {
      for (const auto& e : verify_checksums(opt.data_dir)) {
        if (!e.ok()) std::cerr << "warning: checksum mismatch for " << e.file << "\n";
      }
    } catch (const std::runtime_error& e) {
      std::cerr << "warning: " << e.what() << "\n";
    }
    tree = cert_dir.empty() ? builtin_v10_tree(opt.data_dir) : builtin_v10_tree(opt.data_dir, cert_dir);
  } else {
    const fs::path p(tree_path);
    const fs::path dir = p.parent_path().empty() ? fs::path(".") : p.parent_path();
    tree = load_proof_tree(p, cert_dir.empty() ? dir : fs::path(cert_dir), opt.data_dir / "matroids");
  }
  const CheckReport report = check_tree(tree, opt.jobs);
  emit(opt, opt.json() ? dump(report_to_json(report, timings)) : format_report_text(report, timings));
  return report.passed ? kOk : kFailed;
}

// ---- sample

int run_sample(const Options& opt, const std::string& ref, int trials, std::uint64_t seed,
               const std::vector<int>& rayleigh) {
  if (trials <= 0) throw UsageError("--trials must be positive");
  const Matroid m = load_matroid(ref);
  const auto f = basis_generating_poly(m);
  StabilityReport report;
  if (rayleigh.empty()) {
    report = sample_stability(f, trials, seed, opt.jobs);
  } else {
    if (rayleigh.size() != 2 || rayleigh[0] == rayleigh[1]) throw UsageError("--rayleigh takes two distinct indices");
    try {
      report = rayleigh_spot_check(f, rayleigh[0], rayleigh[1], trials, seed, opt.jobs);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  emit(opt, opt.json() ? dump(report_to_json(report)) : format_report_text(report));
  return report.passed() ? kOk : kFailed;
}

// ---- isomorphic / minor

int run_isomorphic(const Options& opt, const std::string& a, const std::string& b) {
  const auto pi = are_isomorphic(load_matroid(a), load_matroid(b));
  if (opt.json()) {
    Json doc{{"isomorphic", pi.has_value()}};
    if (pi) doc["labeling"] = pi->image();
    emit(opt, dump(doc));
  } else if (pi) {
    std::string out = "isomorphic, labeling:";
    for (int k = 0; k < pi->size(); ++k) out += " " + std::to_string(k + 1) + "->" + std::to_string((*pi)(k + 1));
    emit(opt, out + "\n");
  } else {
    emit(opt, "not isomorphic\n");
  }
  return pi ? kOk : kFailed;
}

int run_minor(const Options& opt, const std::string& ref, const std::vector<int>& del,
              const std::vector<int>& con, bool find_v8) {
  const Matroid m = load_matroid(ref);
  if (find_v8) {
    const auto w = has_v8_minor(m);
    if (opt.json()) {
      Json doc{{"v8_minor", w.has_value()}};
      if (w) {
        doc["deleted"] = elements_of(w->deleted);
        doc["contracted"] = elements_of(w->contracted);
      }
      emit(opt, dump(doc));
    } else if (w) {
      emit(opt, "V8 minor: delete " + elements_text(w->deleted) + ", contract " + elements_text(w->contracted) + "\n");
    } else {
      emit(opt, "no V8 minor\n");
    }
    return w ? kOk : kFailed;
  }
  try {
    emit(opt, format_matroid(minor(LabeledMatroid::identity(m), del, con)));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return kOk;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Exact verification tools for the extended Vamos matroids"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--data-dir", opt.data_dir, "Bundled data directory");
  app.add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("-o,--output", opt.output, "Write the result to a file");
    sub->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  };

  GenerateArgs gen;
  std::string gen_kind;
  auto* generate = app.add_subcommand("generate", "Write a matroid as canonical JSON");
  generate->add_option("kind", gen_kind, "vamos | uniform | from-matrix")
      ->required()
      ->check(CLI::IsMember({"vamos", "uniform", "from-matrix"}));
  generate->add_option("--n", gen.n, "Half the ground set for vamos, the ground set for uniform");
  generate->add_option("--r", gen.r, "Rank for uniform");
  generate->add_option("--matrix", gen.matrix, "Matrix JSON for from-matrix");
  add_common(generate);

  std::string matroid_ref;
  auto* poly = app.add_subcommand("poly", "Basis-generating polynomial");
  poly->add_option("matroid", matroid_ref, "Matroid file or v8 | v10 | vamos:N")->required();
  add_common(poly);

  TargetRecipe recipe;
  auto* rayleigh = app.add_subcommand("rayleigh", "Rayleigh difference of a basis polynomial");
  rayleigh->add_option("matroid", matroid_ref, "Matroid file or v8 | v10 | vamos:N")->required();
  rayleigh->add_option("--i", recipe.i)->required();
  rayleigh->add_option("--j", recipe.j)->required();
  rayleigh->add_option("--delete", recipe.deletions, "Variables set to zero first")->delimiter(',');
  rayleigh->add_option("--contract", recipe.contractions, "Variables differentiated first")->delimiter(',');
  add_common(rayleigh);

  std::string cert_path, target_ref;
  TargetRecipe cert_recipe;
  auto* verify = app.add_subcommand("verify-cert", "Check a Gram certificate exactly");
  verify->add_option("certificate", cert_path)->required();
  verify->add_option("--matroid", target_ref, "Target matroid; defaults to the certificate's recipe");
  auto* vi = verify->add_option("--i", cert_recipe.i);
  auto* vj = verify->add_option("--j", cert_recipe.j);
  verify->add_option("--delete", cert_recipe.deletions)->delimiter(',');
  verify->add_option("--contract", cert_recipe.contractions)->delimiter(',');
  vi->needs(vj);
  vj->needs(vi);
  add_common(verify);

  std::string builtin, tree_path, cert_dir;
  bool timings = false;
  auto* certify = app.add_subcommand("certify-hpp", "Replay a half-plane-property proof tree");
  auto* b = certify->add_option("--builtin", builtin, "Bundled tree (v10)");
  auto* t = certify->add_option("tree", tree_path, "Proof tree JSON");
  b->excludes(t);
  certify->add_option("--cert-dir", cert_dir, "Certificate directory");
  certify->add_flag("--timings", timings, "Include per-node wall time");
  add_common(certify);

  int trials = 1000;
  std::uint64_t seed = 42;
  std::vector<int> rayleigh_pair;
  auto* sample = app.add_subcommand("sample", "Randomized real-stability checks");
  sample->add_option("matroid", matroid_ref, "Matroid file or v8 | v10 | vamos:N")->required();
  sample->add_option("--trials", trials);
  sample->add_option("--seed", seed);
  sample->add_option("--rayleigh", rayleigh_pair, "Spot-check Delta_{i,j} >= 0 instead")->delimiter(',');
  add_common(sample);

  std::string other_ref;
  auto* iso = app.add_subcommand("isomorphic", "Search for an isomorphism");
  iso->add_option("first", matroid_ref)->required();
  iso->add_option("second", other_ref)->required();
  add_common(iso);

  std::vector<int> del, con;
  bool find_v8 = false;
  auto* minor_cmd = app.add_subcommand("minor", "Delete and contract elements");
  minor_cmd->add_option("matroid", matroid_ref)->required();
  minor_cmd->add_option("--delete", del)->delimiter(',');
  minor_cmd->add_option("--contract", con)->delimiter(',');
  minor_cmd->add_flag("--find-v8", find_v8, "Search for a V8 minor instead");
  add_common(minor_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (generate->parsed()) {
    if (gen_kind == "from-matrix" && gen.matrix.empty()) throw UsageError("from-matrix needs --matrix");
    if (gen_kind != "from-matrix" && generate->count("--n") == 0) throw UsageError(gen_kind + " needs --n");
    if (gen_kind == "uniform" && generate->count("--r") == 0) throw UsageError("uniform needs --r");
    return run_generate(opt, gen_kind, gen);
  }
  if (poly->parsed()) return run_poly(opt, matroid_ref);
  if (rayleigh->parsed()) return run_rayleigh(opt, matroid_ref, recipe);
  if (verify->parsed()) {
    std::optional<TargetRecipe> r;
    if (*vi) r = cert_recipe;
    if (!target_ref.empty() && !r) throw UsageError("--matroid needs --i and --j");
    if (r && target_ref.empty()) throw UsageError("--i/--j need --matroid");
    return run_verify_cert(opt, cert_path, target_ref, r);
  }
  if (certify->parsed()) {
    if (builtin.empty() && tree_path.empty()) throw UsageError("pass --builtin v10 or a tree file");
    return run_certify(opt, builtin, tree_path, cert_dir, timings);
  }
  if (sample->parsed()) return run_sample(opt, matroid_ref, trials, seed, rayleigh_pair);
  if (iso->parsed()) return run_isomorphic(opt, matroid_ref, other_ref);
  if (minor_cmd->parsed()) return run_minor(opt, matroid_ref, del, con, find_v8);
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kIoError;
  } catch (const LoadError& e) {
    std::cerr << "load error: " << e.what() << "\n";
    return kIoError;
  } catch (const StructuralError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kIoError;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
}
