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

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "vamos/linalg.hpp"
#include "vamos/matroid.hpp"
#include "vamos/rational.hpp"
#include "vamos/subset.hpp"

namespace vamos {

using RationalPoint = std::vector<Rational>;

// Sparse polynomial in which every variable has exponent at most one.
// Terms are keyed by the set of variables they contain; zero coefficients
// are never stored, so the zero polynomial is an empty map.
class MultiAffinePoly {
 public:
  using TermMap = std::map<Subset, Rational>;

  explicit MultiAffinePoly(int nvars);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Adds `coeff` to the coefficient of the monomial; drops it if it cancels.
  void add_term(Subset monomial, const Rational& coeff);
  Rational coefficient(Subset monomial) const;

  // Degree shared by every term, if there is one. Empty for the zero
  // polynomial.
  std::optional<int> homogeneous_degree() const;
  bool has_positive_coefficients() const;

  friend bool operator==(const MultiAffinePoly&, const MultiAffinePoly&) = default;

 private:
  int nvars_;
  TermMap terms_;
};

// Sparse polynomial with arbitrary small exponents, keyed by the full
// exponent vector. Ordering of the term map is lexicographic on exponents.
class GeneralPoly {
 public:
  using Exponents = std::vector<std::uint8_t>;
  using TermMap = std::map<Exponents, Rational>;

  explicit GeneralPoly(int nvars);
  static GeneralPoly from(const MultiAffinePoly& f);

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& exponents, const Rational& coeff);
  Rational coefficient(const Exponents& exponents) const;

  // Highest exponent of the variable across all terms.
  int degree_in(int variable) const;
  std::optional<int> homogeneous_degree() const;

  GeneralPoly& operator+=(const GeneralPoly& other);
  GeneralPoly& operator-=(const GeneralPoly& other);
  friend GeneralPoly operator+(GeneralPoly a, const GeneralPoly& b) { return a += b; }
  friend GeneralPoly operator-(GeneralPoly a, const GeneralPoly& b) { return a -= b; }
  friend GeneralPoly operator*(const GeneralPoly& a, const GeneralPoly& b);
  GeneralPoly scaled(const Rational& factor) const;

  friend bool operator==(const GeneralPoly&, const GeneralPoly&) = default;

 private:
  int nvars_;
  TermMap terms_;
};

// Exponent vector of a squarefree monomial.
GeneralPoly::Exponents exponents_of(Subset monomial, int nvars);

// Sum over bases of the product of their variables, in n variables.
MultiAffinePoly basis_generating_poly(const Matroid& m);

// Same polynomial written in the original labels: the variable of element k
// is x_{labels[k-1]}. nvars must cover every label.
MultiAffinePoly basis_generating_poly(const LabeledMatroid& m, int nvars);

// f with x_i = 0. Variables are never renumbered.
MultiAffinePoly restrict_to_zero(const MultiAffinePoly& f, int i);

// df/dx_i; for multiaffine f this just selects and strips x_i.
MultiAffinePoly partial_derivative(const MultiAffinePoly& f, int i);

// sum_i lambda_i df/dx_i.
MultiAffinePoly directional_derivative(const MultiAffinePoly& f,
                                       std::span<const Rational> lambda);

// x_i * f.
MultiAffinePoly times_variable(const MultiAffinePoly& f, int i);

MultiAffinePoly operator+(const MultiAffinePoly& a, const MultiAffinePoly& b);

// Product as a general polynomial (squares appear).
GeneralPoly multiply(const MultiAffinePoly& a, const MultiAffinePoly& b);

// df/dx_i * df/dx_j - f * d^2f/dx_i dx_j. DomainError if i == j.
GeneralPoly rayleigh_difference(const MultiAffinePoly& f, int i, int j);

// e_{r,n}. DomainError unless 0 <= r <= n.
MultiAffinePoly elementary_symmetric(int r, int n);

// sum over d-subsets I of the columns: det(V_I)^2 prod_{i in I} x_i.
// DomainError if d > n.
MultiAffinePoly cauchy_binet_expansion(const RationalMatrix& vectors);

// det(sum_i x_i v_i v_i^T) evaluated directly at a point, where v_i are the
// columns. Used as the independent route for the expansion above.
Rational gram_determinant_at(const RationalMatrix& vectors,
                             std::span<const Rational> point);

Rational evaluate(const MultiAffinePoly& f, std::span<const Rational> point);
Rational evaluate(const GeneralPoly& f, std::span<const Rational> point);

// Structural equality of canonical forms; DomainError on nvars mismatch.
bool poly_equal(const GeneralPoly& p, const GeneralPoly& q);

// First monomial, in term-map order, where p and q disagree.
std::optional<GeneralPoly::Exponents> first_difference(const GeneralPoly& p,
                                                       const GeneralPoly& q);

}  // namespace vamos
