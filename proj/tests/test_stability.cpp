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

#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "vamos/error.hpp"
#include "vamos/stability.hpp"

using namespace vamos;
using gen::poly;
using gen::as_doubles;
using gen::random_dense;
using gen::random_factored;

namespace {


MultiAffinePoly f_of(const Matroid& m) { return basis_generating_poly(m); }

}  // namespace

TEST_SUITE("stability") {

TEST_CASE("substitute_line examples") {
  const auto e23 = elementary_symmetric(2, 3);
  const LineSample diag{{1, 1, 1}, {0, 0, 0}};
  CHECK(substitute_line(e23, diag) == poly({0, 0, 3}));

  MultiAffinePoly x1x2(2);
  x1x2.add_term(make_subset({1, 2}), 1);
  CHECK(substitute_line(x1x2, LineSample{{1, 1}, {1, -1}}) == poly({-1, 0, 1}));

  const auto f8 = f_of(vamos_matroid(4));
  RationalPoint e1(8, Rational(0));
  e1[0] = 1;
  const auto g = substitute_line(f8, LineSample{RationalPoint(8, Rational(1)), e1});
  CHECK(g.degree() == 4);
  CHECK(g.leading() == 65);

  CHECK_THROWS_AS(substitute_line(x1x2, LineSample{{1, 0}, {0, 0}}), DomainError);
  CHECK_THROWS_AS(substitute_line(x1x2, LineSample{{1, 1, 1}, {0, 0, 0}}), DomainError);
}

TEST_CASE("sturm_real_root_count examples") {
  CHECK(sturm_real_root_count(poly({-1, 0, 1})) == 2);
  CHECK(sturm_real_root_count(poly({1, 0, 1})) == 0);
  CHECK(sturm_real_root_count(poly({1, -3, 0, 1})) == 3);
  CHECK(oracle::numeric_distinct_real_roots({1, -3, 0, 1}, 1e-6) == 3);
  CHECK(sturm_real_root_count(poly({5})) == 0);
  CHECK(sturm_real_root_count(poly({1, -2, 1})) == 1);
  CHECK_THROWS_AS(sturm_real_root_count(UnivariatePoly()), DomainError);
}

TEST_CASE("is_real_rooted examples") {
  // (t-1)^2 (t+2) = t^3 - 3t + 2
  CHECK(is_real_rooted(poly({2, -3, 0, 1})));
  CHECK_FALSE(is_real_rooted(poly({1, 0, 0, 0, 1})));
  CHECK(is_real_rooted(poly({0, 0, 3})));
  CHECK_THROWS_AS(is_real_rooted(UnivariatePoly()), DomainError);
}

TEST_CASE("univariate arithmetic") {
  const auto g = poly({2, -3, 0, 1});
  const auto [q, r] = divide(g, poly({-1, 1}));
  CHECK(r.is_zero());
  CHECK(q == poly({-2, 1, 1}));
  CHECK(gcd(g, g.derivative()) == poly({-1, 1}));
  CHECK(g.shifted(1) == poly({0, 0, 3, 1}));
  CHECK(g(Rational(1)) == 0);
  CHECK_THROWS_AS(divide(g, UnivariatePoly()), DomainError);
}

TEST_CASE("Sturm counts match the numeric root finder") {
  std::mt19937_64 rng(2024);
  int compared = 0;
  for (int k = 0; k < 600; ++k) {
    const auto g = k % 2 == 0 ? random_dense(rng) : random_factored(rng);
    if (g.degree() < 1) continue;
    CHECK(sturm_real_root_count(g) == oracle::numeric_distinct_real_roots(as_doubles(g), 1e-6));
    ++compared;
  }
  CHECK(compared >= 500);
}

TEST_CASE("is_real_rooted is invariant under scaling and shifts") {
  std::mt19937_64 rng(99);
  for (int k = 0; k < 200; ++k) {
    const auto g = k % 2 == 0 ? random_dense(rng) : random_factored(rng);
    const bool base = is_real_rooted(g);
    const Rational c(1 + static_cast<long>(rng() % 7), 3);
    const Rational a(static_cast<long>(rng() % 21) - 10, 4);
    CHECK(is_real_rooted(g.scaled(c)) == base);
    CHECK(is_real_rooted(g.scaled(-c)) == base);
    CHECK(is_real_rooted(g.shifted(a)) == base);
  }
}

TEST_CASE("substitute_line agrees with direct evaluation") {
  const auto f8 = f_of(vamos_matroid(4));
  const auto fano = f_of(fixtures::fano_plane());
  SplitMix64 rng(31);
  for (int k = 0; k < 120; ++k) {
    const auto& f = k % 2 == 0 ? f8 : fano;
    const auto s = draw_line(rng, f.nvars());
    Rational t(static_cast<long>(rng.next() % 41) - 20, 1 + static_cast<long>(rng.next() % 5));
    t.canonicalize();
    RationalPoint x;
    for (int i = 0; i < f.nvars(); ++i) x.push_back(t * s.v[i] + s.w[i]);
    const auto g = substitute_line(f, s);
    CHECK(g(t) == evaluate(f, x));
    CHECK(g.leading() == evaluate(f, s.v));
    CHECK(sgn(g.leading()) > 0);
  }
}

TEST_CASE("sampling draws from the documented grids") {
  SplitMix64 rng(1);
  for (int k = 0; k < 50; ++k) {
    const auto s = draw_line(rng, 10);
    for (const auto& x : s.v) {
      CHECK(x >= Rational(1, 8));
      CHECK(x <= 4);
      CHECK(Rational(x * 8).get_den() == 1);
    }
    for (const auto& x : s.w) {
      CHECK(x >= -2);
      CHECK(x <= 2);
      CHECK(Rational(x * 8).get_den() == 1);
    }
  }
  // Reference values of the splitmix64 stream for state 0.
  SplitMix64 zero(0);
  CHECK(zero.next() == 0xe220a8397b1dcdafULL);
  CHECK(zero.next() == 0x6e789e6aa1b965f4ULL);
}

TEST_CASE("sample_stability on stable polynomials") {
  const auto f10 = f_of(vamos_matroid(5));
  const auto report = sample_stability(f10, 1000, 42);
  CHECK(report.passed());
  CHECK(report.trials == 1000);
  CHECK(sample_stability(f_of(uniform_matroid(2, 4)), 1000, 42).passed());
  CHECK(sample_stability(f_of(vamos_matroid(4)), 1000, 7).passed());
}

TEST_CASE("sample_stability finds a Fano witness") {
  const auto fano = f_of(fixtures::fano_plane());
  const auto report = sample_stability(fano, 200, 1);
  REQUIRE_FALSE(report.passed());
  const auto& w = report.line_failures.front();
  const auto g = substitute_line(fano, w.sample);
  CHECK_FALSE(is_real_rooted(g));
  CHECK(w.degree == 3);
  CHECK(w.real_roots < 3);
}

TEST_CASE("sample_stability is reproducible and independent of jobs") {
  const auto fano = f_of(fixtures::fano_plane());
  const auto a = report_to_json(sample_stability(fano, 300, 5, 1));
  const auto b = report_to_json(sample_stability(fano, 300, 5, 1));
  const auto c = report_to_json(sample_stability(fano, 300, 5, 4));
  CHECK(a.dump() == b.dump());
  CHECK(a.dump() == c.dump());
  CHECK(a.dump() != report_to_json(sample_stability(fano, 300, 6, 1)).dump());
}

TEST_CASE("sample_stability preconditions") {
  CHECK_THROWS_AS(sample_stability(MultiAffinePoly(3), 10, 1), DomainError);
  CHECK_THROWS_AS(sample_stability(elementary_symmetric(2, 3), 0, 1), DomainError);
  MultiAffinePoly mixed(2);
  mixed.add_term(make_subset({1}), 1);
  mixed.add_term(make_subset({1, 2}), 1);
  CHECK_THROWS_AS(sample_stability(mixed, 10, 1), DomainError);
}

TEST_CASE("rayleigh_spot_check") {
  CHECK(rayleigh_spot_check(f_of(vamos_matroid(5)), 5, 7, 1000, 42).passed());
  CHECK(rayleigh_spot_check(f_of(vamos_matroid(4)), 7, 8, 1000, 42).passed());

  const auto fano = f_of(fixtures::fano_plane());
  const auto report = rayleigh_spot_check(fano, 1, 2, 200, 3);
  REQUIRE_FALSE(report.passed());
  const auto& w = report.rayleigh_failures.front();
  CHECK(evaluate(rayleigh_difference(fano, 1, 2), w.point) == w.value);
  CHECK(sgn(w.value) < 0);
  CHECK_THROWS_AS(rayleigh_spot_check(fano, 3, 3, 10, 1), DomainError);
}

TEST_CASE("derivative_closure_check") {
  const std::vector<Rational> ones(3, Rational(1));
  // Each x_i x_j arises once, from d/dx_k of x1x2x3 with k the third index.
  CHECK(directional_derivative(elementary_symmetric(3, 3), ones) == elementary_symmetric(2, 3));
  CHECK(derivative_closure_check(elementary_symmetric(3, 3), ones, 200, 1).passed());

  std::vector<Rational> e5(10, Rational(0));
  e5[4] = 1;
  CHECK(derivative_closure_check(f_of(vamos_matroid(5)), e5, 500, 1).passed());

  CHECK_THROWS_AS(derivative_closure_check(f_of(vamos_matroid(5)),
                                           std::vector<Rational>(10, Rational(0)), 10, 1),
                  DomainError);
  std::vector<Rational> negative(3, Rational(1));
  negative[0] = -1;
  CHECK_THROWS_AS(derivative_closure_check(elementary_symmetric(3, 3), negative, 10, 1),
                  DomainError);
}

TEST_CASE("report serialization") {
  const auto report = sample_stability(f_of(fixtures::fano_plane()), 50, 1);
  const auto doc = report_to_json(report);
  CHECK(doc.at("seed") == 1);
  CHECK(doc.at("trials") == 50);
  CHECK(doc.at("verdict") == (report.passed() ? "pass" : "fail"));
  CHECK(doc.at("failures").size() == report.line_failures.size());
  CHECK(format_report_text(report).find("verdict:") != std::string::npos);
}

}  // TEST_SUITE
