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

// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "cli_runner.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "vamos/certificates.hpp"
#include "vamos/io.hpp"
#include "vamos/matroid.hpp"
#include "vamos/mutation.hpp"
#include "vamos/proof.hpp"
#include "vamos/stability.hpp"

using namespace vamos;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::vector<Subset> subsets(std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<Subset> out;
  for (const auto& s : sets) out.push_back(make_subset(s));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subset> sorted(std::vector<Subset> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Outcome matroid_validity() {
  const auto v8 = vamos_matroid(4);
  const auto v10 = vamos_matroid(5);
  const auto h8 = subsets({{1, 2, 3, 4}, {1, 2, 5, 6}, {1, 2, 7, 8}, {3, 4, 5, 6}, {5, 6, 7, 8}});
  const auto h10 = subsets({{1, 2, 3, 4}, {1, 2, 5, 6}, {1, 2, 7, 8}, {1, 2, 9, 10}, {3, 4, 5, 6},
                            {5, 6, 7, 8}, {7, 8, 9, 10}});
  Outcome o;
  o.ok = check_basis_exchange(v8).holds && check_basis_exchange(v10).holds && check_three_partition(v8) &&
         check_three_partition(v10) && v8.basis_count() == 65 && v10.basis_count() == 203 &&
         sorted(vamos_exclusions(4)) == h8 && sorted(vamos_exclusions(5)) == h10;
  o.detail = "V8 " + std::to_string(v8.basis_count()) + " bases, V10 " + std::to_string(v10.basis_count()) +
             " bases, exchange, 3-partition and exclusion lists checked";
  return o;
}

Outcome minor_claim() {
  const auto v10 = vamos_matroid(5);
  const auto w = has_v8_minor(v10);
  Outcome o;
  if (!w) return {false, "no V8 minor found"};
  const auto del = elements_of(w->deleted);
  const auto con = elements_of(w->contracted);
  const auto m = minor(LabeledMatroid::identity(v10), del, con);
  o.ok = del == std::vector<int>{9, 10} && con.empty() &&
         format_matroid(m.matroid) == format_matroid(vamos_matroid(4));
  o.detail = "delete {9,10}, minor byte-identical to V8";
  return o;
}

Outcome certificates() {
  Outcome o;
  int passed = 0;
  for (int k = 1; k <= 5; ++k) {
    const auto cert =
        read_certificate_file(fixtures::data_dir() / "certificates" / ("cert" + std::to_string(k) + ".json"));
    const auto target = target_polynomial(resolve_matroid(cert.target->matroid, "."), *cert.target);
    const bool id = verify_gram_identity(cert, target).holds;
    const bool psd = verify_psd(cert.gram).is_psd;
    if (id && psd) {
      ++passed;
    } else {
      o.ok = false;
      o.detail += "cert" + std::to_string(k) + (id ? " not PSD; " : " identity fails; ");
    }
  }
  o.detail += std::to_string(passed) + "/5 certificates: exact identity and exact PSD";
  return o;
}

Outcome end_to_end() {
  const auto report = check_tree(builtin_v10_tree(fixtures::data_dir()));
  int claims = 0;
  for (const auto& c : verify_isomorphism_claims(fixtures::data_dir())) claims += c.holds ? 1 : 0;
  Outcome o;
  o.ok = report.passed && report.certificates_verified == 5 && claims == 11;
  o.detail = std::to_string(report.nodes.size()) + " nodes, " + std::to_string(report.certificates_verified) +
             " certificates, " + std::to_string(claims) + "/11 isomorphism claims";
  return o;
}

Outcome mutations() {
  const auto tree = builtin_v10_tree(fixtures::data_dir());
  const auto mutants = seeded_mutations(tree, 28, 20261016);
  int killed = 0;
  int single_entry = 0;
  Outcome o;
  for (const auto& m : mutants) {
    if (m.kind == MutationKind::kGramEntry || m.kind == MutationKind::kRemoveBasis ||
        m.kind == MutationKind::kAddBasis)
      ++single_entry;
    const auto r = check_tree(m.tree);
    if (!r.passed && r.first_failure && r.first_failure->failure != Obligation::kNone &&
        !r.first_failure->message.empty()) {
      ++killed;
    } else {
      o.ok = false;
      o.detail += "survived: " + m.description + "; ";
    }
  }
  o.ok = o.ok && mutants.size() >= 20 && killed == static_cast<int>(mutants.size());
  o.detail += std::to_string(killed) + "/" + std::to_string(mutants.size()) + " mutants rejected with a named obligation (" +
              std::to_string(single_entry) + " single-entry certificate/basis edits)";
  return o;
}

Outcome sampling() {
  const auto f10 = basis_generating_poly(vamos_matroid(5));
  const auto f8 = basis_generating_poly(vamos_matroid(4));
  const auto fano = basis_generating_poly(fixtures::fano_plane());
  const auto s10 = sample_stability(f10, 1000, 42);
  const auto s8 = sample_stability(f8, 1000, 42);
  const auto r8 = rayleigh_spot_check(f8, 7, 8, 1000, 42);
  const auto sf = sample_stability(fano, 1000, 42);
  const auto rf = rayleigh_spot_check(fano, 1, 2, 1000, 42);
  Outcome o;
  o.ok = s10.passed() && s8.passed() && r8.passed() && (!sf.passed() || !rf.passed());
  o.detail = "f10, f8 real-rooted on 1000 lines; D7,8 f8 >= 0 at 1000 points; Fano: " +
             std::to_string(sf.line_failures.size()) + " line witnesses, " +
             std::to_string(rf.rayleigh_failures.size()) + " negative Rayleigh values";
  return o;
}

Outcome oracles() {
  Outcome o;
  std::mt19937_64 rng(20261016);
  int sturm = 0, sturm_bad = 0;
  while (sturm < 500) {
    const auto g = sturm % 2 == 0 ? gen::random_dense(rng) : gen::random_factored(rng);
    if (g.degree() < 1) continue;
    if (sturm_real_root_count(g) != oracle::numeric_distinct_real_roots(gen::as_doubles(g), 1e-6)) ++sturm_bad;
    ++sturm;
  }
  int psd = 0, psd_bad = 0;
  for (; psd < 500; ++psd) {
    const int n = 1 + static_cast<int>(rng() % 6);
    RationalMatrix g = gen::random_gram(rng, n, 1 + static_cast<int>(rng() % 6));
    if (psd % 2 == 1) {
      Rational eps(static_cast<long>(std::ceil(std::max(float_psd_oracle(g).min_eigenvalue, 0.0) * 4)) + 1, 4);
      eps.canonicalize();
      for (int i = 0; i < n; ++i) g(i, i) -= eps;
    }
    const auto e = float_psd_oracle(g);
    const bool float_psd = e.min_eigenvalue >= -1e-9 * std::max(1.0, std::abs(e.max_eigenvalue));
    if (verify_psd(g).is_psd != float_psd) ++psd_bad;
  }
  int points = 0, cb_bad = 0;
  while (points < 100) {
    const int d = 1 + static_cast<int>(rng() % 3);
    const int n = d + static_cast<int>(rng() % 4);
    RationalMatrix v(d, n);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < n; ++c) v(r, c) = Rational(static_cast<long>(rng() % 7) - 3);
    const auto cb = cauchy_binet_expansion(v);
    for (int k = 0; k < 5; ++k, ++points) {
      const auto x = gen::random_point(rng, n, true);
      if (evaluate(cb, x) != gram_determinant_at(v, x)) ++cb_bad;
    }
  }
  o.ok = sturm_bad == 0 && psd_bad == 0 && cb_bad == 0;
  o.detail = "Sturm " + std::to_string(sturm - sturm_bad) + "/" + std::to_string(sturm) + ", PSD " +
             std::to_string(psd - psd_bad) + "/" + std::to_string(psd) + ", Cauchy-Binet " +
             std::to_string(points - cb_bad) + "/" + std::to_string(points) + " agree";
  return o;
}

Outcome determinism() {
  const auto d = fixtures::data_dir();
  const std::string mat = (cli::scratch_dir() / "acc_matrix.json").string();
  write_text_file(mat, R"([["1","0","0","1","0"],["0","1","0","1","1"],["0","0","1","0","1"]])");
  const std::vector<std::string> commands = {
      "generate vamos --n 5",
      "generate uniform --r 4 --n 7 --format json",
      "generate from-matrix --matrix " + mat,
      "poly v10 --format json",
      "rayleigh v10 --i 5 --j 7",
      "rayleigh v10 --i 1 --j 6 --contract 5 --delete 7 --format json",
      "verify-cert " + (d / "certificates/cert3.json").string() + " --format json",
      "certify-hpp --builtin v10",
      "certify-hpp --builtin v10 --format json --jobs 2",
      "sample v10 --trials 500 --seed 42",
      "sample " + (d / "matroids/fano.json").string() + " --trials 200 --seed 5 --format json",
      "sample v8 --rayleigh 7,8 --trials 500 --seed 9",
      "isomorphic v8 vamos:4 --format json",
      "minor v10 --delete 9,10",
      "minor v10 --find-v8",
  };
  Outcome o;
  for (const auto& c : commands) {
    const auto a = cli::run(c);
    const auto b = cli::run(c);
    if (a.out != b.out || a.err != b.err || a.code != b.code || a.out.empty()) {
      o.ok = false;
      o.detail += "differs: " + c + "; ";
    }
  }
  o.detail += std::to_string(commands.size()) + " commands across all subcommands, run twice each";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "matroid validity", 1, matroid_validity},
      {2, "V8 minor of V10", 10, minor_claim},
      {3, "certificate verification", 60, certificates},
      {4, "end-to-end proof replay", 120, end_to_end},
      {5, "mutation robustness", 0, mutations},
      {6, "stability sampling", 30, sampling},
      {7, "oracle equivalences", 0, oracles},
      {8, "CLI determinism", 0, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && secs > c.budget_s) {
      o.ok = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget";
    }
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << secs;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.number << " " << c.name << ": " << o.detail
              << " (" << time.str() << " s)" << std::endl;
    if (!o.ok) ++failures;
  }
  std::cout << (failures == 0 ? "all 8 criteria pass" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
