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

#include "vamos/certificates.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <set>

#include "vamos/error.hpp"

namespace vamos {
namespace {

std::string at(int r, int c) {
  return "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
}

std::vector<int> int_list(const Json& doc, const char* key) {
  std::vector<int> out;
  if (!doc.contains(key)) return out;
  if (!doc.at(key).is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
  for (const auto& v : doc.at(key)) {
    if (!v.is_number_integer()) throw ParseError(std::string("\"") + key + "\" holds a non-integer");
    out.push_back(v.get<int>());
  }
  return out;
}

RationalMatrix assemble_blocks(const Json& blocks) {
  for (const char* key : {"A", "B", "C"}) {
    if (!blocks.contains(key)) throw ParseError(std::string("block form is missing \"") + key + "\"");
  }
  const auto a = matrix_from_json(blocks.at("A"));
  const auto b = matrix_from_json(blocks.at("B"));
  const auto c = matrix_from_json(blocks.at("C"));
  if (!a.is_square() || !c.is_square()) throw ParseError("blocks A and C must be square");
  if (b.rows() != c.rows() || b.cols() != a.rows()) {
    throw ParseError("block B is " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()) +
                     ", expected " + std::to_string(c.rows()) + "x" + std::to_string(a.rows()));
  }
  const int k = a.rows();
  const int n = k + c.rows();
  RationalMatrix g(n, n);
  for (int r = 0; r < n; ++r) {
    for (int col = 0; col < n; ++col) {
      if (r < k && col < k) g(r, col) = a(r, col);
      else if (r >= k && col < k) g(r, col) = b(r - k, col);
      else if (r < k && col >= k) g(r, col) = b(col - k, r);
      else g(r, col) = c(r - k, col - k);
    }
  }
  return g;
}

}  // namespace

GramCertificate parse_certificate(const Json& doc) {
  if (!doc.is_object()) throw ParseError("certificate must be a JSON object");
  if (!doc.contains("nvars") || !doc.at("nvars").is_number_integer()) {
    throw ParseError("missing integer field \"nvars\"");
  }
  GramCertificate c;
  c.nvars = doc.at("nvars").get<int>();
  if (c.nvars < 1 || c.nvars > kMaxElements) throw ParseError("nvars outside 1..64");

  if (!doc.contains("monomials") || !doc.at("monomials").is_array()) {
    throw ParseError("missing \"monomials\" array");
  }
  std::set<Subset> seen;
  for (std::size_t k = 0; k < doc.at("monomials").size(); ++k) {
    const auto& entry = doc.at("monomials")[k];
    const std::string where = "monomial " + std::to_string(k + 1);
    if (!entry.is_array()) throw ParseError(where + " is not an array");
    std::vector<int> vars;
    for (const auto& v : entry) {
      if (!v.is_number_integer()) throw ParseError(where + " holds a non-integer");
      vars.push_back(v.get<int>());
    }
    if (std::adjacent_find(vars.begin(), vars.end(), std::greater_equal<>()) != vars.end()) {
      throw ParseError(where + " must list strictly increasing variables");
    }
    if (!vars.empty() && (vars.front() < 1 || vars.back() > c.nvars)) {
      throw ParseError(where + " uses a variable outside x1..x" + std::to_string(c.nvars));
    }
    const Subset mono = make_subset(vars);
    if (!seen.insert(mono).second) throw ParseError(where + " repeats an earlier monomial");
    c.monomials.push_back(mono);
  }

  const bool has_gram = doc.contains("gram");
  const bool has_blocks = doc.contains("blocks");
  if (has_gram == has_blocks) throw ParseError("exactly one of \"gram\" or \"blocks\" is required");
  c.gram = has_gram ? matrix_from_json(doc.at("gram")) : assemble_blocks(doc.at("blocks"));

  const int dim = static_cast<int>(c.monomials.size());
  if (!c.gram.is_square()) {
    throw ParseError("Gram matrix is " + std::to_string(c.gram.rows()) + "x" +
                     std::to_string(c.gram.cols()) + ", not square");
  }
  if (c.gram.rows() != dim) {
    throw ParseError("Gram matrix dimension " + std::to_string(c.gram.rows()) +
                     " does not match " + std::to_string(dim) + " monomials");
  }
  for (int r = 0; r < dim; ++r) {
    for (int col = r + 1; col < dim; ++col) {
      if (c.gram(r, col) != c.gram(col, r)) {
        throw ParseError("Gram matrix is not symmetric at " + at(r, col) + ": " +
                         to_string(c.gram(r, col)) + " vs " + to_string(c.gram(col, r)));
      }
    }
  }
  if (doc.contains("target")) c.target = recipe_from_json(doc.at("target"));
  return c;
}

GramCertificate read_certificate_file(const std::filesystem::path& path) {
  const Json doc = read_json_file(path);
  try {
    return parse_certificate(doc);
  } catch (const ParseError& e) {
    throw ParseError(path.filename().string() + ": " + e.what());
  }
}

Json certificate_to_json(const GramCertificate& c) {
  Json monomials = Json::array();
  for (Subset m : c.monomials) monomials.push_back(elements_of(m));
  Json doc{{"nvars", c.nvars}, {"monomials", monomials}, {"gram", matrix_to_json(c.gram)}};
  if (c.target) doc["target"] = recipe_to_json(*c.target);
  return doc;
}

Json recipe_to_json(const TargetRecipe& r) {
  return Json{{"matroid", r.matroid}, {"deletions", r.deletions},
              {"contractions", r.contractions}, {"i", r.i}, {"j", r.j}};
}

TargetRecipe recipe_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("target must be a JSON object");
  TargetRecipe r;
  if (!doc.contains("matroid") || !doc.at("matroid").is_string()) {
    throw ParseError("target needs a \"matroid\" reference");
  }
  r.matroid = doc.at("matroid").get<std::string>();
  r.deletions = int_list(doc, "deletions");
  r.contractions = int_list(doc, "contractions");
  for (const char* key : {"i", "j"}) {
    if (!doc.contains(key) || !doc.at(key).is_number_integer()) {
      throw ParseError(std::string("target needs integer \"") + key + "\"");
    }
  }
  r.i = doc.at("i").get<int>();
  r.j = doc.at("j").get<int>();
  return r;
}

std::string describe(const TargetRecipe& r) {
  std::string f = "f(" + r.matroid + ")";
  std::string out = "D" + std::to_string(r.i) + "," + std::to_string(r.j) + "(";
  for (int c : r.contractions) out += "d" + std::to_string(c) + " ";
  out += f;
  if (!r.deletions.empty()) {
    out += "|";
    for (std::size_t k = 0; k < r.deletions.size(); ++k) {
      out += (k ? "," : "") + std::string("x") + std::to_string(r.deletions[k]) + "=0";
    }
  }
  return out + ")";
}

Matroid resolve_matroid(const std::string& ref, const std::filesystem::path& base_dir) {
  if (ref == "v8") return vamos_matroid(4);
  if (ref == "v10") return vamos_matroid(5);
  if (ref.rfind("vamos:", 0) == 0) {
    int half_n = 0;
    try {
      half_n = std::stoi(ref.substr(6));
    } catch (const std::logic_error&) {
      throw ParseError("bad matroid reference '" + ref + "'");
    }
    return vamos_matroid(half_n);
  }
  return read_matroid_file(base_dir / ref);
}

GeneralPoly target_polynomial(const Matroid& m, const TargetRecipe& r) {
  std::set<int> used;
  for (int e : r.deletions) used.insert(e);
  for (int e : r.contractions) {
    if (!used.insert(e).second) throw DomainError("variable x" + std::to_string(e) + " both deleted and contracted");
  }
  if (used.count(r.i) || used.count(r.j)) {
    throw DomainError("Rayleigh indices must not be deleted or contracted");
  }
  MultiAffinePoly f = basis_generating_poly(m);
  for (int e : r.contractions) f = partial_derivative(f, e);
  for (int e : r.deletions) f = restrict_to_zero(f, e);
  return rayleigh_difference(f, r.i, r.j);
}

GeneralPoly gram_expansion(const GramCertificate& c) {
  GeneralPoly out(c.nvars);
  const int n = static_cast<int>(c.monomials.size());
  std::vector<GeneralPoly::Exponents> exps;
  for (Subset m : c.monomials) exps.push_back(exponents_of(m, c.nvars));
  for (int k = 0; k < n; ++k) {
    for (int l = k; l < n; ++l) {
      if (sgn(c.gram(k, l)) == 0) continue;
      GeneralPoly::Exponents e = exps[static_cast<std::size_t>(k)];
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = static_cast<std::uint8_t>(e[v] + exps[static_cast<std::size_t>(l)][v]);
      out.add_term(e, k == l ? c.gram(k, l) : Rational(2 * c.gram(k, l)));
    }
  }
  return out;
}

IdentityResult verify_gram_identity(const GramCertificate& c, const GeneralPoly& target) {
  IdentityResult result;
  if (target.nvars() != c.nvars) {
    result.holds = false;
    result.reason = "certificate has " + std::to_string(c.nvars) + " variables, target has " +
                    std::to_string(target.nvars());
    return result;
  }
  if (const auto deg = target.homogeneous_degree(); deg && *deg % 2 == 0) {
    for (std::size_t k = 0; k < c.monomials.size(); ++k) {
      if (cardinality(c.monomials[k]) * 2 != *deg) {
        result.holds = false;
        result.reason = "monomial " + std::to_string(k + 1) + " has degree " +
                        std::to_string(cardinality(c.monomials[k])) + ", target has degree " +
                        std::to_string(*deg);
        return result;
      }
    }
  }
  const GeneralPoly expansion = gram_expansion(c);
  const auto diff = first_difference(target, expansion);
  if (diff) {
    result.holds = false;
    result.monomial = diff;
    result.target_coeff = target.coefficient(*diff);
    result.gram_coeff = expansion.coefficient(*diff);
    result.reason = "coefficient of " + format_monomial(*diff) + ": target " +
                    to_string(result.target_coeff) + ", m^T G m " + to_string(result.gram_coeff);
  }
  return result;
}

namespace {

struct Elimination {
  bool is_psd = true;
  Integer scale = 1;                   // L: common denominator of G
  std::vector<int> pivots;             // chosen indices in order
  std::vector<Integer> pivot_values;   // A^{(k)}_pp
  std::vector<Integer> previous;       // d_{k-1}
  std::vector<std::vector<Integer>> columns;  // A^{(k)} column at the pivot
  std::vector<Rational> witness;
};

// Bareiss on A = L*G, symmetric pivoting. w[a] tracks a vector with
// w[a]^T G w[b] = S_ab, the Schur complement in rational terms, so that any
// failure yields an explicit vector witness.
Elimination eliminate(const RationalMatrix& g) {
  const int n = g.rows();
  Elimination out;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out.scale = lcm(out.scale, Integer(g(r, c).get_den()));

  std::vector<std::vector<Integer>> a(static_cast<std::size_t>(n), std::vector<Integer>(static_cast<std::size_t>(n)));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const Rational scaled = g(r, c) * Rational(out.scale);
      a[r][c] = scaled.get_num();
    }

  std::vector<std::vector<Rational>> w(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int r = 0; r < n; ++r) w[r][r] = 1;

  std::vector<bool> active(static_cast<std::size_t>(n), true);
  Integer d = 1;
  for (int step = 0; step < n; ++step) {
    int p = -1;
    for (int k = 0; k < n; ++k) {
      if (active[k] && sgn(a[k][k]) > 0 && (p < 0 || a[k][k] > a[p][p])) p = k;
    }
    if (p < 0) {
      for (int k = 0; k < n; ++k) {
        if (active[k] && sgn(a[k][k]) < 0) {
          out.is_psd = false;
          out.witness = w[k];
          return out;
        }
      }
      for (int r = 0; r < n; ++r) {
        if (!active[r]) continue;
        for (int c = r + 1; c < n; ++c) {
          if (!active[c] || sgn(a[r][c]) == 0) continue;
          // Zero diagonal with a nonzero off-diagonal: u = w_r - sign(x) w_c
          // gives u^T G u = -2 |S_rc| < 0.
          out.is_psd = false;
          const int s = sgn(a[r][c]);
          out.witness = w[r];
          for (int k = 0; k < n; ++k) out.witness[k] -= s * w[c][k];
          return out;
        }
      }
      return out;
    }

    std::vector<Integer> column(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) column[k] = active[k] ? a[k][p] : Integer(0);
    out.pivots.push_back(p);
    out.pivot_values.push_back(a[p][p]);
    out.previous.push_back(d);
    out.columns.push_back(column);

    active[p] = false;
    for (int r = 0; r < n; ++r) {
      if (!active[r]) continue;
      Rational factor(a[r][p], a[p][p]);
      factor.canonicalize();
      if (sgn(factor) != 0) {
        for (int k = 0; k < n; ++k) w[r][k] -= factor * w[p][k];
      }
      for (int c = r; c < n; ++c) {
        if (!active[c]) continue;
        Integer v = a[p][p] * a[r][c] - a[r][p] * a[p][c];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
        a[r][c] = v;
        a[c][r] = v;
      }
    }
    d = a[p][p];
  }
  return out;
}

// A negative diagonal entry gives e_a; otherwise the first pair with
// G_aa + G_bb < 2|G_ab| gives e_a - sign(G_ab) e_b. Used to report readable
// witnesses ahead of the elimination's vector.
std::optional<std::vector<Rational>> simple_witness(const RationalMatrix& g) {
  const int n = g.rows();
  for (int a = 0; a < n; ++a) {
    if (sgn(g(a, a)) < 0) {
      std::vector<Rational> u(static_cast<std::size_t>(n));
      u[a] = 1;
      return u;
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const int s = sgn(g(a, b));
      if (s != 0 && g(a, a) + g(b, b) - 2 * s * g(a, b) < 0) {
        std::vector<Rational> u(static_cast<std::size_t>(n));
        u[a] = 1;
        u[b] = -s;
        return u;
      }
    }
  }
  return std::nullopt;
}

void require_symmetric(const RationalMatrix& g) {
  if (!g.is_square()) throw DomainError("PSD check needs a square matrix");
  if (!g.is_symmetric()) throw DomainError("PSD check needs an exactly symmetric matrix");
}

}  // namespace

PsdVerdict verify_psd(const RationalMatrix& g) {
  require_symmetric(g);
  const auto e = eliminate(g);
  PsdVerdict v;
  v.is_psd = e.is_psd;
  v.rank = static_cast<int>(e.pivots.size());
  if (!e.is_psd) {
    v.witness = simple_witness(g).value_or(e.witness);
    v.witness_value = quadratic_form(g, v.witness);
  }
  return v;
}

bool witness_reverifies(const RationalMatrix& g, const PsdVerdict& verdict) {
  if (verdict.is_psd) return verdict.witness.empty();
  if (verdict.witness.size() != static_cast<std::size_t>(g.rows())) return false;
  const Rational value = quadratic_form(g, verdict.witness);
  return sgn(value) < 0 && value == verdict.witness_value;
}

GeneralPoly SosDecomposition::expand() const {
  GeneralPoly out(nvars);
  for (const auto& term : terms) {
    GeneralPoly linear(nvars);
    for (std::size_t k = 0; k < monomials.size(); ++k) {
      if (sgn(term.form[k]) != 0) linear.add_term(exponents_of(monomials[k], nvars), term.form[k]);
    }
    out += (linear * linear).scaled(term.weight);
  }
  return out;
}

SosDecomposition sos_decompose(const GramCertificate& c) {
  require_symmetric(c.gram);
  const auto e = eliminate(c.gram);
  if (!e.is_psd) throw DomainError("sum-of-squares decomposition needs a PSD Gram matrix");
  SosDecomposition out;
  out.nvars = c.nvars;
  out.monomials = c.monomials;
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    SosTerm term;
    term.weight = Rational(1) / Rational(e.scale * e.previous[k] * e.pivot_values[k]);
    for (const auto& x : e.columns[k]) term.form.emplace_back(x);
    out.terms.push_back(std::move(term));
  }
  return out;
}

EigenSummary float_psd_oracle(const RationalMatrix& g) {
  require_symmetric(g);
  const int n = g.rows();
  if (n == 0) return {};
  Eigen::MatrixXd m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = to_double(g(r, c));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  return {solver.eigenvalues().minCoeff(), solver.eigenvalues().maxCoeff()};
}

}  // namespace vamos
