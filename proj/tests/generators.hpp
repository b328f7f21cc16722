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

// Random inputs shared by the property tests and the acceptance run.

#include <algorithm>
#include <random>
#include <vector>

#include "vamos/linalg.hpp"
#include "vamos/polynomial.hpp"
#include "vamos/stability.hpp"

namespace gen {

using namespace vamos;

inline UnivariatePoly poly(std::initializer_list<long> low_to_high) {
  std::vector<Rational> c;
  for (long x : low_to_high) c.emplace_back(x);
  return UnivariatePoly(c);
}

inline std::vector<double> as_doubles(const UnivariatePoly& g) {
  std::vector<double> out;
  for (const auto& c : g.coeffs()) out.push_back(to_double(c));
  return out;
}

// Random integer coefficients, degree 1..6.
inline UnivariatePoly random_dense(std::mt19937_64& rng) {
  const int deg = 1 + static_cast<int>(rng() % 6);
  std::vector<Rational> c;
  for (int k = 0; k <= deg; ++k) c.emplace_back(static_cast<long>(rng() % 11) - 5);
  if (sgn(c.back()) == 0) c.back() = 1 + static_cast<long>(rng() % 5);
  return UnivariatePoly(c);
}

// Product of linear factors (some doubled) and irreducible quadratics,
// total degree <= 6, so multiplicities and complex pairs both show up.
inline UnivariatePoly random_factored(std::mt19937_64& rng) {
  UnivariatePoly g = poly({1});
  std::vector<long> used;
  while (g.degree() < 6) {
    const int room = 6 - g.degree();
    const int kind = static_cast<int>(rng() % 3);
    if (kind == 2 && room >= 2) {
      const long b = static_cast<long>(rng() % 5) - 2;
      const long c = b * b + 1 + static_cast<long>(rng() % 4);  // 4c > b^2
      g = g * poly({c, b, 1});
    } else {
      long r = static_cast<long>(rng() % 13) - 6;
      if (std::find(used.begin(), used.end(), r) != used.end()) continue;
      used.push_back(r);
      g = g * UnivariatePoly({Rational(-r, 2), Rational(1)});
      if (kind == 1 && room >= 2) g = g * UnivariatePoly({Rational(-r, 2), Rational(1)});
    }
    if (rng() % 3 == 0) break;
  }
  return g.scaled(Rational(1 + static_cast<long>(rng() % 3)));
}

inline RationalMatrix random_gram(std::mt19937_64& rng, int n, int rows) {
  RationalMatrix b(rows, n);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < n; ++c) {
      b(r, c) = Rational(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 2));
      b(r, c).canonicalize();
    }
  RationalMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int r = 0; r < rows; ++r) g(i, j) += b(r, i) * b(r, j);
  return g;
}

inline RationalPoint random_point(std::mt19937_64& rng, int n, bool positive) {
  RationalPoint p;
  for (int k = 0; k < n; ++k) {
    const long num = positive ? 1 + static_cast<long>(rng() % 20) : static_cast<long>(rng() % 21) - 10;
    p.emplace_back(num, 1 + static_cast<long>(rng() % 4));
    p.back().canonicalize();
  }
  return p;
}

}  // namespace gen
