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

#include "vamos/stability.hpp"

#include <optional>

#include "parallel.hpp"
#include "vamos/error.hpp"
#include "vamos/io.hpp"

namespace vamos {

UnivariatePoly::UnivariatePoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

void UnivariatePoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational UnivariatePoly::operator()(const Rational& t) const {
  Rational value = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) value = value * t + *it;
  return value;
}

UnivariatePoly UnivariatePoly::derivative() const {
  std::vector<Rational> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(coeffs_[k] * static_cast<long>(k));
  return UnivariatePoly(std::move(out));
}

UnivariatePoly UnivariatePoly::scaled(const Rational& c) const {
  std::vector<Rational> out = coeffs_;
  for (auto& x : out) x *= c;
  return UnivariatePoly(std::move(out));
}

UnivariatePoly UnivariatePoly::shifted(const Rational& a) const {
  // Horner in the ring of polynomials: g(t + a).
  const UnivariatePoly linear({a, Rational(1)});
  UnivariatePoly out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    out = out * linear;
    std::vector<Rational> c = out.coeffs_;
    if (c.empty()) c.resize(1);
    c[0] += *it;
    out = UnivariatePoly(std::move(c));
  }
  return out;
}

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UnivariatePoly(std::move(out));
}

std::pair<UnivariatePoly, UnivariatePoly> divide(const UnivariatePoly& a, const UnivariatePoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  const int dq = a.degree() - db;
  std::vector<Rational> quot(dq >= 0 ? static_cast<std::size_t>(dq + 1) : 0);
  for (int k = dq; k >= 0; --k) {
    const Rational c = rem[static_cast<std::size_t>(k + db)] / b.leading();
    quot[static_cast<std::size_t>(k)] = c;
    if (sgn(c) == 0) continue;
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k + i)] -= c * b.coeffs()[i];
  }
  return {UnivariatePoly(std::move(quot)), UnivariatePoly(std::move(rem))};
}

namespace {

// Divides by the positive rational content so the leading-term sign is kept.
UnivariatePoly primitive_part(const UnivariatePoly& g) {
  if (g.is_zero()) return g;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& c : g.coeffs()) {
    num_gcd = gcd(num_gcd, Integer(c.get_num()));
    den_lcm = lcm(den_lcm, Integer(c.get_den()));
  }
  return g.scaled(Rational(den_lcm, num_gcd));
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

UnivariatePoly gcd(UnivariatePoly a, UnivariatePoly b) {
  while (!b.is_zero()) {
    auto r = divide(a, b).second;
    a = std::move(b);
    b = primitive_part(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(1 / a.leading());
}

UnivariatePoly substitute_line(const MultiAffinePoly& f, const LineSample& s) {
  const auto n = static_cast<std::size_t>(f.nvars());
  if (s.v.size() != n || s.w.size() != n) {
    throw DomainError("line sample dimension does not match the polynomial");
  }
  for (const auto& x : s.v) {
    if (sgn(x) <= 0) throw DomainError("direction v must have strictly positive coordinates");
  }
  std::vector<Rational> out;
  for (const auto& [mono, coeff] : f.terms()) {
    std::vector<Rational> term{coeff};
    for (int i : elements_of(mono)) {
      // term *= (v_i t + w_i)
      std::vector<Rational> next(term.size() + 1);
      for (std::size_t k = 0; k < term.size(); ++k) {
        next[k] += term[k] * s.w[i - 1];
        next[k + 1] += term[k] * s.v[i - 1];
      }
      term = std::move(next);
    }
    if (out.size() < term.size()) out.resize(term.size());
    for (std::size_t k = 0; k < term.size(); ++k) out[k] += term[k];
  }
  return UnivariatePoly(std::move(out));
}

int sturm_real_root_count(const UnivariatePoly& g) {
  if (g.is_zero()) throw DomainError("Sturm count of the zero polynomial");
  std::vector<UnivariatePoly> seq{primitive_part(g)};
  if (g.degree() > 0) seq.push_back(primitive_part(g.derivative()));
  while (seq.size() >= 2 && seq.back().degree() > 0) {
    auto r = divide(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(primitive_part(r.scaled(-1)));
  }
  std::vector<int> at_neg_inf, at_pos_inf;
  for (const auto& p : seq) {
    const int s = sgn(p.leading());
    at_pos_inf.push_back(s);
    at_neg_inf.push_back(p.degree() % 2 == 0 ? s : -s);
  }
  return sign_changes(at_neg_inf) - sign_changes(at_pos_inf);
}

bool is_real_rooted(const UnivariatePoly& g) {
  if (g.is_zero()) throw DomainError("real-rootedness of the zero polynomial");
  if (g.degree() == 0) return true;
  const auto squarefree = divide(g, gcd(g, g.derivative())).first;
  return sturm_real_root_count(squarefree) == squarefree.degree();
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SplitMix64 SplitMix64::for_trial(std::uint64_t seed, std::uint64_t trial) {
  return SplitMix64(seed ^ (0x9e3779b97f4a7c15ULL * (trial + 1)));
}

LineSample draw_line(SplitMix64& rng, int nvars) {
  LineSample s;
  for (int k = 0; k < nvars; ++k) {
    s.v.emplace_back(static_cast<long>(rng.next() % 32) + 1, 8);
    s.v.back().canonicalize();
  }
  s.w = draw_signed_point(rng, nvars);
  return s;
}

RationalPoint draw_signed_point(SplitMix64& rng, int nvars) {
  RationalPoint p;
  for (int k = 0; k < nvars; ++k) {
    p.emplace_back(static_cast<long>(rng.next() % 33) - 16, 8);
    p.back().canonicalize();
  }
  return p;
}

namespace {

void require_trials(int trials) {
  if (trials <= 0) throw DomainError("trials must be positive");
}

void require_stable_candidate(const MultiAffinePoly& f) {
  if (f.is_zero()) throw DomainError("stability of the zero polynomial is undefined");
  if (!f.homogeneous_degree() || !f.has_positive_coefficients()) {
    throw DomainError("sampling needs a homogeneous polynomial with positive coefficients");
  }
}

}  // namespace

StabilityReport sample_stability(const MultiAffinePoly& f, int trials, std::uint64_t seed,
                                 int jobs) {
  require_trials(trials);
  require_stable_candidate(f);
  std::vector<std::optional<LineFailure>> slots(static_cast<std::size_t>(trials));
  detail::parallel_for(trials, jobs, [&](int k) {
    auto rng = SplitMix64::for_trial(seed, static_cast<std::uint64_t>(k));
    LineSample s = draw_line(rng, f.nvars());
    const auto g = substitute_line(f, s);
    if (!is_real_rooted(g)) {
      slots[static_cast<std::size_t>(k)] =
          LineFailure{std::move(s), g.degree(), sturm_real_root_count(g)};
    }
  });
  StabilityReport report{"real-rootedness along lines", seed, trials, {}, {}};
  for (auto& slot : slots) {
    if (slot) report.line_failures.push_back(std::move(*slot));
  }
  return report;
}

StabilityReport rayleigh_spot_check(const MultiAffinePoly& f, int i, int j, int trials,
                                    std::uint64_t seed, int jobs) {
  require_trials(trials);
  const GeneralPoly delta = rayleigh_difference(f, i, j);
  std::vector<std::optional<RayleighFailure>> slots(static_cast<std::size_t>(trials));
  detail::parallel_for(trials, jobs, [&](int k) {
    auto rng = SplitMix64::for_trial(seed, static_cast<std::uint64_t>(k));
    RationalPoint a = draw_signed_point(rng, f.nvars());
    Rational value = evaluate(delta, a);
    if (sgn(value) < 0) slots[static_cast<std::size_t>(k)] = RayleighFailure{std::move(a), value};
  });
  StabilityReport report{"Rayleigh difference D" + std::to_string(i) + "," + std::to_string(j) +
                             " >= 0",
                         seed, trials, {}, {}};
  for (auto& slot : slots) {
    if (slot) report.rayleigh_failures.push_back(std::move(*slot));
  }
  return report;
}

StabilityReport derivative_closure_check(const MultiAffinePoly& f,
                                         std::span<const Rational> lambda, int trials,
                                         std::uint64_t seed, int jobs) {
  if (lambda.size() != static_cast<std::size_t>(f.nvars())) {
    throw DomainError("lambda dimension does not match the polynomial");
  }
  bool any_positive = false;
  for (const auto& l : lambda) {
    if (sgn(l) < 0) throw DomainError("lambda must be coordinatewise nonnegative");
    if (sgn(l) > 0) any_positive = true;
  }
  if (!any_positive) throw DomainError("lambda must not be identically zero");
  auto report = sample_stability(directional_derivative(f, lambda), trials, seed, jobs);
  report.check = "real-rootedness of a nonnegative directional derivative";
  return report;
}

namespace {

Json point_json(const RationalPoint& p) {
  Json out = Json::array();
  for (const auto& x : p) out.push_back(to_string(x));
  return out;
}

std::string point_text(const RationalPoint& p) {
  std::string out = "(";
  for (std::size_t k = 0; k < p.size(); ++k) out += (k ? ", " : "") + to_string(p[k]);
  return out + ")";
}

}  // namespace

nlohmann::json report_to_json(const StabilityReport& report) {
  Json failures = Json::array();
  for (const auto& f : report.line_failures) {
    failures.push_back(Json{{"v", point_json(f.sample.v)},
                            {"w", point_json(f.sample.w)},
                            {"degree", f.degree},
                            {"distinct_real_roots", f.real_roots}});
  }
  for (const auto& f : report.rayleigh_failures) {
    failures.push_back(Json{{"point", point_json(f.point)}, {"value", to_string(f.value)}});
  }
  return Json{{"check", report.check},
              {"seed", report.seed},
              {"trials", report.trials},
              {"failures", failures},
              {"verdict", report.passed() ? "pass" : "fail"},
              {"note", report.passed() ? "sampling is evidence, not a proof of stability"
                                       : "each failure is a concrete counterexample"}};
}

std::string format_report_text(const StabilityReport& report) {
  std::string out = report.check + ": " + std::to_string(report.trials) + " trials, seed " +
                    std::to_string(report.seed) + "\n";
  for (const auto& f : report.line_failures) {
    out += "  witness v=" + point_text(f.sample.v) + " w=" + point_text(f.sample.w) +
           " degree " + std::to_string(f.degree) + ", " + std::to_string(f.real_roots) +
           " distinct real roots\n";
  }
  for (const auto& f : report.rayleigh_failures) {
    out += "  witness a=" + point_text(f.point) + " value " + to_string(f.value) + "\n";
  }
  if (report.passed()) {
    out += "verdict: pass (sampling is evidence, not a proof of stability)\n";
  } else {
    out += "verdict: fail (" +
           std::to_string(report.line_failures.size() + report.rayleigh_failures.size()) +
           " witnesses)\n";
  }
  return out;
}

}  // namespace vamos
