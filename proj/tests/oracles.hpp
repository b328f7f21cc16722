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

// Test-only reference implementations. They use plain std::set / std::map /
// long double and share no code with the library paths they check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "vamos/linalg.hpp"
#include "vamos/matroid.hpp"

namespace oracle {

using Set = std::set<int>;
using Family = std::set<Set>;

inline Family family_of(const vamos::Matroid& m) {
  Family out;
  for (const auto& b : m.sorted_basis_lists()) out.insert(Set(b.begin(), b.end()));
  return out;
}

inline std::vector<Set> all_k_subsets(int n, int k) {
  std::vector<Set> out;
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::iota(pick.begin(), pick.end(), 1);
  if (k > n) return out;
  while (true) {
    out.emplace_back(pick.begin(), pick.end());
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

inline long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Exchange axiom by direct set manipulation.
inline bool exchange_holds(const Family& bases) {
  for (const auto& b1 : bases) {
    for (const auto& b2 : bases) {
      for (int e : b1) {
        if (b2.count(e)) continue;
        bool ok = false;
        for (int f : b2) {
          if (b1.count(f)) continue;
          Set swapped = b1;
          swapped.erase(e);
          swapped.insert(f);
          if (bases.count(swapped)) {
            ok = true;
            break;
          }
        }
        if (!ok) return false;
      }
    }
  }
  return true;
}

// Isomorphism by trying every permutation (n <= 8 keeps this cheap).
inline bool isomorphic_brute(const Family& a, const Family& b, int n) {
  if (a.size() != b.size()) return false;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    Family image;
    for (const auto& s : a) {
      Set t;
      for (int e : s) t.insert(perm[e - 1]);
      image.insert(t);
    }
    if (image == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Leibniz-formula determinant in exact rationals.
inline vamos::Rational leibniz_det(const vamos::RationalMatrix& m) {
  const int n = m.rows();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  vamos::Rational total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    vamos::Rational term = inversions % 2 == 0 ? 1 : -1;
    for (int i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Distinct real roots of a polynomial with double coefficients (low to high
// degree) via companion-matrix eigenvalues, clustered within `tol`.
inline int numeric_distinct_real_roots(const std::vector<double>& coeffs, double tol) {
  int deg = static_cast<int>(coeffs.size()) - 1;
  while (deg > 0 && coeffs[deg] == 0.0) --deg;
  if (deg <= 0) return 0;
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -coeffs[i] / coeffs[deg];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  // A k-fold root comes back as k nearby eigenvalues, split along the real or
  // the imaginary axis; cluster in the complex plane before classifying.
  // Newton polishing in long double pulls the pieces of a split multiple root
  // back together (linear convergence, but far below the tolerance).
  using Complex = std::complex<long double>;
  auto newton_step = [&](Complex x) {
    Complex p = static_cast<long double>(coeffs[deg]), dp = 0;
    for (int k = deg - 1; k >= 0; --k) {
      dp = dp * x + p;
      p = p * x + static_cast<long double>(coeffs[k]);
    }
    return std::abs(dp) == 0 ? Complex(0) : p / dp;
  };
  std::vector<std::complex<double>> z;
  for (const auto& e : solver.eigenvalues()) {
    Complex x(e.real(), e.imag());
    for (int it = 0; it < 200; ++it) {
      const Complex step = newton_step(x);
      x -= step;
      if (std::abs(step) <= 1e-18L * std::max(1.0L, std::abs(x))) break;
    }
    z.emplace_back(static_cast<double>(x.real()), static_cast<double>(x.imag()));
  }
  std::vector<int> cluster(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) cluster[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(z[i] - z[j]) <= tol * std::max(1.0, std::abs(z[i]))) {
        const int from = cluster[i], to = cluster[j];
        for (auto& c : cluster)
          if (c == from) c = to;
      }
  int distinct = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (cluster[i] != static_cast<int>(i)) continue;
    std::complex<double> mean = 0;
    int size = 0;
    for (std::size_t j = 0; j < z.size(); ++j)
      if (cluster[j] == static_cast<int>(i)) {
        mean += z[j];
        ++size;
      }
    mean /= static_cast<double>(size);
    if (std::abs(mean.imag()) <= tol * std::max(1.0, std::abs(mean))) ++distinct;
  }
  return distinct;
}

}  // namespace oracle
