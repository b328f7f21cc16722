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

// Gram certificates: a monomial vector m and a symmetric rational G with
// target = m^T G m and G positive semidefinite.
//
// JSON schema:
//   {"nvars": int,
//    "monomials": [[int,...],...],
//    "gram": [["p/q",...],...]                      // or
//    "blocks": {"A": [[..]], "B": [[..]], "C": [[..]]},  // G = [[A, B^T], [B, C]]
//    "target": {"matroid": ref, "deletions": [..], "contractions": [..],
//               "i": int, "j": int}}               // optional
// Monomial order is meaningful: it indexes G.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "vamos/io.hpp"
#include "vamos/linalg.hpp"
#include "vamos/matroid.hpp"
#include "vamos/polynomial.hpp"

namespace vamos {

// Delta_{i,j} of f(matroid) with the deleted variables set to zero and the
// contracted ones differentiated, all in the matroid's own labels.
struct TargetRecipe {
  std::string matroid;
  std::vector<int> deletions;
  std::vector<int> contractions;
  int i = 0;
  int j = 0;

  friend bool operator==(const TargetRecipe&, const TargetRecipe&) = default;
};

struct GramCertificate {
  int nvars = 0;
  std::vector<Subset> monomials;
  RationalMatrix gram;
  std::optional<TargetRecipe> target;
};

// ParseError naming the offending row/column on asymmetry, a dimension
// mismatch, or a malformed entry.
GramCertificate parse_certificate(const Json& doc);
GramCertificate read_certificate_file(const std::filesystem::path& path);
// Always emits the assembled "gram" form.
Json certificate_to_json(const GramCertificate& c);

Json recipe_to_json(const TargetRecipe& r);
TargetRecipe recipe_from_json(const Json& doc);
std::string describe(const TargetRecipe& r);

// "v8", "v10", "vamos:<half_n>", or a matroid JSON path relative to base_dir.
Matroid resolve_matroid(const std::string& ref, const std::filesystem::path& base_dir);

GeneralPoly target_polynomial(const Matroid& m, const TargetRecipe& r);

// Sum over k,l of G[k,l] m_k m_l.
GeneralPoly gram_expansion(const GramCertificate& c);

struct IdentityResult {
  bool holds = true;
  std::string reason;
  // First differing monomial and its coefficient in the target and in m^T G m.
  std::optional<GeneralPoly::Exponents> monomial;
  Rational target_coeff;
  Rational gram_coeff;
};

IdentityResult verify_gram_identity(const GramCertificate& c, const GeneralPoly& target);

struct PsdVerdict {
  bool is_psd = true;
  int rank = 0;
  // On failure: u with u^T G u = witness_value < 0.
  std::vector<Rational> witness;
  Rational witness_value;
};

// Fraction-free symmetric elimination with diagonal pivoting (largest
// positive diagonal first, ties to the lowest index). DomainError if g is not
// square and exactly symmetric.
PsdVerdict verify_psd(const RationalMatrix& g);

// Exact recomputation of the witness.
bool witness_reverifies(const RationalMatrix& g, const PsdVerdict& verdict);

struct SosTerm {
  Rational weight;            // > 0
  std::vector<Rational> form;  // coefficients over the monomial vector
};

struct SosDecomposition {
  int nvars = 0;
  std::vector<Subset> monomials;
  std::vector<SosTerm> terms;

  // Sum of weight * (form . m)^2.
  GeneralPoly expand() const;
};

// DomainError if the Gram matrix is not PSD.
SosDecomposition sos_decompose(const GramCertificate& c);

struct EigenSummary {
  double min_eigenvalue = 0;
  double max_eigenvalue = 0;
};

// Floating point, for cross-checks only.
EigenSummary float_psd_oracle(const RationalMatrix& g);

}  // namespace vamos
