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

// Sampled stability tests. A passing report is evidence only; a single
// failure is a proof of instability.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "vamos/polynomial.hpp"

namespace vamos {

class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  // Coefficients from the constant term upwards; trailing zeros are trimmed.
  explicit UnivariatePoly(std::vector<Rational> coeffs);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& t) const;
  UnivariatePoly derivative() const;
  UnivariatePoly scaled(const Rational& c) const;
  // g(t + a).
  UnivariatePoly shifted(const Rational& a) const;

  friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);
  friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Quotient and remainder; DomainError on division by zero.
std::pair<UnivariatePoly, UnivariatePoly> divide(const UnivariatePoly& a, const UnivariatePoly& b);
// Monic gcd; gcd(0, 0) = 0.
UnivariatePoly gcd(UnivariatePoly a, UnivariatePoly b);

struct LineSample {
  RationalPoint v;  // strictly positive
  RationalPoint w;
};

// t -> f(t v + w). DomainError on a non-positive v coordinate or a size mismatch.
UnivariatePoly substitute_line(const MultiAffinePoly& f, const LineSample& s);

// Distinct real roots; DomainError on the zero polynomial.
int sturm_real_root_count(const UnivariatePoly& g);
bool is_real_rooted(const UnivariatePoly& g);

// splitmix64. Trial k of a run with seed s draws from
// SplitMix64(s ^ (0x9e3779b97f4a7c15 * (k + 1))).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}
  std::uint64_t next();
  static SplitMix64 for_trial(std::uint64_t seed, std::uint64_t trial);

 private:
  std::uint64_t state_;
};

// v_i uniform on {1/8, ..., 32/8}; w_i uniform on {-16/8, ..., 16/8}.
LineSample draw_line(SplitMix64& rng, int nvars);
RationalPoint draw_signed_point(SplitMix64& rng, int nvars);

struct LineFailure {
  LineSample sample;
  int degree = 0;
  int real_roots = 0;
};

struct RayleighFailure {
  RationalPoint point;
  Rational value;
};

struct StabilityReport {
  std::string check;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<LineFailure> line_failures;
  std::vector<RayleighFailure> rayleigh_failures;

  bool passed() const { return line_failures.empty() && rayleigh_failures.empty(); }
};

// `jobs` splits the trials over threads; output does not depend on it.
StabilityReport sample_stability(const MultiAffinePoly& f, int trials, std::uint64_t seed,
                                 int jobs = 1);
StabilityReport rayleigh_spot_check(const MultiAffinePoly& f, int i, int j, int trials,
                                    std::uint64_t seed, int jobs = 1);
StabilityReport derivative_closure_check(const MultiAffinePoly& f,
                                         std::span<const Rational> lambda, int trials,
                                         std::uint64_t seed, int jobs = 1);

nlohmann::json report_to_json(const StabilityReport& report);
std::string format_report_text(const StabilityReport& report);

}  // namespace vamos
