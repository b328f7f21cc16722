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

#include "vamos/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "vamos/error.hpp"

namespace vamos {
namespace {

void require_nvars(int nvars) {
  if (nvars < 0 || nvars > kMaxElements) {
    throw StructuralError("polynomials support at most 64 variables");
  }
}

void require_variable(int nvars, int i) {
  if (i < 1 || i > nvars) {
    throw DomainError("variable x" + std::to_string(i) + " outside x1..x" +
                      std::to_string(nvars));
  }
}

void require_point(int nvars, std::span<const Rational> point) {
  if (static_cast<int>(point.size()) != nvars) {
    throw DomainError("point has " + std::to_string(point.size()) +
                      " coordinates, polynomial has " + std::to_string(nvars) +
                      " variables");
  }
}

}  // namespace

// --------------------------------------------------------- MultiAffinePoly

MultiAffinePoly::MultiAffinePoly(int nvars) : nvars_(nvars) { require_nvars(nvars); }

void MultiAffinePoly::add_term(Subset monomial, const Rational& coeff) {
  if ((monomial & ~full_set(nvars_)) != 0) {
    throw StructuralError("monomial uses a variable beyond x" + std::to_string(nvars_));
  }
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(monomial, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational MultiAffinePoly::coefficient(Subset monomial) const {
  const auto it = terms_.find(monomial);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> MultiAffinePoly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = cardinality(terms_.begin()->first);
  for (const auto& [mono, coeff] : terms_) {
    if (cardinality(mono) != d) return std::nullopt;
  }
  return d;
}

bool MultiAffinePoly::has_positive_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return sgn(t.second) > 0; });
}

// ------------------------------------------------------------ GeneralPoly

GeneralPoly::GeneralPoly(int nvars) : nvars_(nvars) { require_nvars(nvars); }

GeneralPoly GeneralPoly::from(const MultiAffinePoly& f) {
  GeneralPoly out(f.nvars());
  for (const auto& [mono, coeff] : f.terms()) {
    out.terms_.emplace(exponents_of(mono, f.nvars()), coeff);
  }
  return out;
}

void GeneralPoly::add_term(const Exponents& exponents, const Rational& coeff) {
  if (static_cast<int>(exponents.size()) != nvars_) {
    throw StructuralError("exponent vector length does not match nvars");
  }
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational GeneralPoly::coefficient(const Exponents& exponents) const {
  const auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

int GeneralPoly::degree_in(int variable) const {
  require_variable(nvars_, variable);
  int d = 0;
  for (const auto& [exps, coeff] : terms_) d = std::max<int>(d, exps[variable - 1]);
  return d;
}

std::optional<int> GeneralPoly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  auto total = [](const Exponents& e) {
    int s = 0;
    for (auto x : e) s += x;
    return s;
  };
  const int d = total(terms_.begin()->first);
  for (const auto& [exps, coeff] : terms_) {
    if (total(exps) != d) return std::nullopt;
  }
  return d;
}

GeneralPoly& GeneralPoly::operator+=(const GeneralPoly& other) {
  if (other.nvars_ != nvars_) throw DomainError("adding polynomials of different nvars");
  for (const auto& [exps, coeff] : other.terms_) add_term(exps, coeff);
  return *this;
}

GeneralPoly& GeneralPoly::operator-=(const GeneralPoly& other) {
  if (other.nvars_ != nvars_) throw DomainError("subtracting polynomials of different nvars");
  for (const auto& [exps, coeff] : other.terms_) add_term(exps, -coeff);
  return *this;
}

GeneralPoly operator*(const GeneralPoly& a, const GeneralPoly& b) {
  if (a.nvars_ != b.nvars_) throw DomainError("multiplying polynomials of different nvars");
  GeneralPoly out(a.nvars_);
  GeneralPoly::Exponents product(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int k = 0; k < a.nvars_; ++k) {
        const int e = ea[k] + eb[k];
        if (e > std::numeric_limits<std::uint8_t>::max()) {
          throw DomainError("exponent overflow in polynomial product");
        }
        product[k] = static_cast<std::uint8_t>(e);
      }
      out.add_term(product, ca * cb);
    }
  }
  return out;
}

GeneralPoly GeneralPoly::scaled(const Rational& factor) const {
  GeneralPoly out(nvars_);
  if (factor == 0) return out;
  for (const auto& [exps, coeff] : terms_) out.terms_.emplace(exps, coeff * factor);
  return out;
}

GeneralPoly::Exponents exponents_of(Subset monomial, int nvars) {
  GeneralPoly::Exponents e(static_cast<std::size_t>(nvars), 0);
  for (int v : elements_of(monomial)) {
    if (v > nvars) throw StructuralError("monomial uses a variable beyond nvars");
    e[v - 1] = 1;
  }
  return e;
}

// ------------------------------------------------------------- operations

MultiAffinePoly basis_generating_poly(const Matroid& m) {
  MultiAffinePoly f(m.size());
  for (Subset b : m.bases()) f.add_term(b, 1);
  return f;
}

MultiAffinePoly basis_generating_poly(const LabeledMatroid& m, int nvars) {
  if (!m.labels.empty() && m.labels.back() > nvars) {
    throw DomainError("label " + std::to_string(m.labels.back()) +
                      " exceeds nvars " + std::to_string(nvars));
  }
  MultiAffinePoly f(nvars);
  for (Subset b : m.matroid.bases()) f.add_term(m.to_labels(b), 1);
  return f;
}

MultiAffinePoly restrict_to_zero(const MultiAffinePoly& f, int i) {
  require_variable(f.nvars(), i);
  MultiAffinePoly out(f.nvars());
  for (const auto& [mono, coeff] : f.terms()) {
    if (!contains(mono, i)) out.add_term(mono, coeff);
  }
  return out;
}

MultiAffinePoly partial_derivative(const MultiAffinePoly& f, int i) {
  require_variable(f.nvars(), i);
  MultiAffinePoly out(f.nvars());
  for (const auto& [mono, coeff] : f.terms()) {
    if (contains(mono, i)) out.add_term(mono & ~element_bit(i), coeff);
  }
  return out;
}

MultiAffinePoly directional_derivative(const MultiAffinePoly& f,
                                       std::span<const Rational> lambda) {
  require_point(f.nvars(), lambda);
  MultiAffinePoly out(f.nvars());
  for (const auto& [mono, coeff] : f.terms()) {
    for (int i : elements_of(mono)) {
      if (lambda[i - 1] != 0) out.add_term(mono & ~element_bit(i), coeff * lambda[i - 1]);
    }
  }
  return out;
}

MultiAffinePoly times_variable(const MultiAffinePoly& f, int i) {
  require_variable(f.nvars(), i);
  MultiAffinePoly out(f.nvars());
  for (const auto& [mono, coeff] : f.terms()) {
    if (contains(mono, i)) throw DomainError("product would not be multiaffine");
    out.add_term(mono | element_bit(i), coeff);
  }
  return out;
}

MultiAffinePoly operator+(const MultiAffinePoly& a, const MultiAffinePoly& b) {
  if (a.nvars() != b.nvars()) throw DomainError("adding polynomials of different nvars");
  MultiAffinePoly out = a;
  for (const auto& [mono, coeff] : b.terms()) out.add_term(mono, coeff);
  return out;
}

GeneralPoly multiply(const MultiAffinePoly& a, const MultiAffinePoly& b) {
  if (a.nvars() != b.nvars()) throw DomainError("multiplying polynomials of different nvars");
  const int n = a.nvars();
  GeneralPoly out(n);
  GeneralPoly::Exponents e(static_cast<std::size_t>(n));
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      std::fill(e.begin(), e.end(), 0);
      for (int v : elements_of(ma)) ++e[v - 1];
      for (int v : elements_of(mb)) ++e[v - 1];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

GeneralPoly rayleigh_difference(const MultiAffinePoly& f, int i, int j) {
  require_variable(f.nvars(), i);
  require_variable(f.nvars(), j);
  if (i == j) throw DomainError("Rayleigh difference needs two distinct variables");
  const MultiAffinePoly di = partial_derivative(f, i);
  const MultiAffinePoly dj = partial_derivative(f, j);
  const MultiAffinePoly dij = partial_derivative(di, j);
  return multiply(di, dj) - multiply(f, dij);
}

MultiAffinePoly elementary_symmetric(int r, int n) {
  if (n < 0 || r < 0 || r > n) {
    throw DomainError("elementary symmetric e_{r,n} needs 0 <= r <= n");
  }
  MultiAffinePoly f(n);
  for (Subset s : k_subsets(n, r)) f.add_term(s, 1);
  return f;
}

MultiAffinePoly cauchy_binet_expansion(const RationalMatrix& vectors) {
  const int d = vectors.rows();
  const int n = vectors.cols();
  if (d > n) {
    throw DomainError("Cauchy-Binet expansion needs at most as many rows as columns");
  }
  MultiAffinePoly f(n);
  for (Subset s : k_subsets(n, d)) {
    std::vector<int> columns;
    for (int e : elements_of(s)) columns.push_back(e - 1);
    const Rational det = determinant(vectors.select_columns(columns));
    f.add_term(s, det * det);
  }
  return f;
}

Rational gram_determinant_at(const RationalMatrix& vectors,
                             std::span<const Rational> point) {
  const int d = vectors.rows();
  const int n = vectors.cols();
  require_point(n, point);
  RationalMatrix sum(d, d);
  for (int k = 0; k < n; ++k) {
    if (point[k] == 0) continue;
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) sum(a, b) += point[k] * vectors(a, k) * vectors(b, k);
    }
  }
  return determinant(sum);
}

Rational evaluate(const MultiAffinePoly& f, std::span<const Rational> point) {
  require_point(f.nvars(), point);
  Rational total = 0;
  for (const auto& [mono, coeff] : f.terms()) {
    Rational term = coeff;
    for (int v : elements_of(mono)) term *= point[v - 1];
    total += term;
  }
  return total;
}

Rational evaluate(const GeneralPoly& f, std::span<const Rational> point) {
  require_point(f.nvars(), point);
  Rational total = 0;
  for (const auto& [exps, coeff] : f.terms()) {
    Rational term = coeff;
    for (int k = 0; k < f.nvars(); ++k) {
      for (int p = 0; p < exps[k]; ++p) term *= point[k];
    }
    total += term;
  }
  return total;
}

bool poly_equal(const GeneralPoly& p, const GeneralPoly& q) {
  if (p.nvars() != q.nvars()) throw DomainError("comparing polynomials of different nvars");
  return p.terms() == q.terms();
}

std::optional<GeneralPoly::Exponents> first_difference(const GeneralPoly& p,
                                                       const GeneralPoly& q) {
  auto a = p.terms().begin();
  auto b = q.terms().begin();
  while (a != p.terms().end() || b != q.terms().end()) {
    if (b == q.terms().end() || (a != p.terms().end() && a->first < b->first)) {
      return a->first;
    }
    if (a == p.terms().end() || b->first < a->first) return b->first;
    if (a->second != b->second) return a->first;
    ++a;
    ++b;
  }
  return std::nullopt;
}

}  // namespace vamos
