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

#include "vamos/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "vamos/error.hpp"

namespace vamos {
namespace {

std::string join_ints(const std::vector<int>& values) {
  std::string out = "[";
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(values[k]);
  }
  return out + "]";
}

int require_int(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_number_integer()) {
    throw ParseError(std::string("missing integer field \"") + key + "\"");
  }
  return doc.at(key).get<int>();
}

std::string basis_text(Subset b) {
  return join_ints(elements_of(b));
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw LoadError("cannot write " + path.string());
  out << text;
}

Json read_json_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

// ----------------------------------------------------------------- matroids

LabeledMatroid labeled_matroid_from_json(const Json& doc, bool validate_exchange) {
  if (!doc.is_object()) throw ParseError("matroid must be a JSON object");
  const int n = require_int(doc, "n");
  const int rank = require_int(doc, "rank");
  if (!doc.contains("bases") || !doc.at("bases").is_array()) {
    throw ParseError("missing \"bases\" array");
  }
  std::vector<std::vector<int>> bases;
  for (const auto& b : doc.at("bases")) {
    if (!b.is_array()) throw ParseError("each basis must be an array");
    std::vector<int> elems;
    for (const auto& e : b) {
      if (!e.is_number_integer()) throw ParseError("basis elements must be integers");
      elems.push_back(e.get<int>());
    }
    if (!std::is_sorted(elems.begin(), elems.end())) {
      throw ParseError("basis " + join_ints(elems) + " is not sorted");
    }
    bases.push_back(std::move(elems));
  }
  Matroid m = [&] {
    try {
      return Matroid::from_lists(n, rank, bases);
    } catch (const StructuralError& e) {
      throw ParseError(e.what());
    }
  }();
  const auto exchange = validate_exchange ? check_basis_exchange(m) : ExchangeResult{};
  if (!exchange.holds) {
    const auto& w = *exchange.witness;
    throw ParseError("bases violate the exchange axiom: B1=" + basis_text(w.first) +
                     " B2=" + basis_text(w.second) + " e=" + std::to_string(w.element));
  }
  LabeledMatroid out = LabeledMatroid::identity(std::move(m));
  if (doc.contains("labels")) {
    std::vector<int> labels;
    for (const auto& l : doc.at("labels")) {
      if (!l.is_number_integer()) throw ParseError("labels must be integers");
      labels.push_back(l.get<int>());
    }
    if (static_cast<int>(labels.size()) != n ||
        !std::is_sorted(labels.begin(), labels.end()) ||
        std::adjacent_find(labels.begin(), labels.end()) != labels.end() ||
        (n > 0 && (labels.front() < 1 || labels.back() > kMaxElements))) {
      throw ParseError("labels must be n strictly increasing integers in 1..64");
    }
    out.labels = std::move(labels);
  }
  return out;
}

Matroid matroid_from_json(const Json& doc) {
  return labeled_matroid_from_json(doc).matroid;
}

Matroid read_matroid_file(const std::filesystem::path& path) {
  return matroid_from_json(read_json_file(path));
}

Json matroid_to_json(const Matroid& m) {
  return Json{{"n", m.size()}, {"rank", m.rank()}, {"bases", m.sorted_basis_lists()}};
}

Json matroid_to_json(const LabeledMatroid& m) {
  Json doc = matroid_to_json(m.matroid);
  doc["labels"] = m.labels;
  return doc;
}

namespace {

std::string format_matroid_impl(const Matroid& m, const std::vector<int>* labels) {
  std::string out = "{\n  \"n\": " + std::to_string(m.size()) +
                    ",\n  \"rank\": " + std::to_string(m.rank()) + ",\n";
  if (labels != nullptr) out += "  \"labels\": " + join_ints(*labels) + ",\n";
  out += "  \"bases\": [\n";
  const auto lists = m.sorted_basis_lists();
  for (std::size_t k = 0; k < lists.size(); ++k) {
    out += "    " + join_ints(lists[k]) + (k + 1 < lists.size() ? ",\n" : "\n");
  }
  out += "  ]\n}\n";
  return out;
}

}  // namespace

std::string format_matroid(const Matroid& m) { return format_matroid_impl(m, nullptr); }

std::string format_matroid(const LabeledMatroid& m) {
  return format_matroid_impl(m.matroid, &m.labels);
}

// -------------------------------------------------------------- polynomials

std::string format_monomial(const GeneralPoly::Exponents& exponents) {
  std::string out;
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    if (exponents[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(k + 1);
    if (exponents[k] > 1) out += '^' + std::to_string(exponents[k]);
  }
  return out.empty() ? "1" : out;
}

std::string format_monomial(Subset monomial) {
  std::string out;
  for (int v : elements_of(monomial)) {
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(v);
  }
  return out.empty() ? "1" : out;
}

std::string format_poly_text(const GeneralPoly& f) {
  if (f.is_zero()) return "0\n";
  std::string out;
  for (const auto& [exps, coeff] : f.terms()) {
    out += (sgn(coeff) > 0 ? "+" : "") + to_string(coeff) + ' ' + format_monomial(exps) + '\n';
  }
  return out;
}

std::string format_poly_text(const MultiAffinePoly& f) {
  return format_poly_text(GeneralPoly::from(f));
}

GeneralPoly parse_poly_text(const std::string& text, int nvars) {
  GeneralPoly f(nvars);
  std::istringstream lines(text);
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line == "0") continue;
    const auto space = line.find(' ');
    if (space == std::string::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": expected '<coeff> <monomial>'");
    }
    const Rational coeff = parse_rational(line.substr(0, space));
    GeneralPoly::Exponents exps(static_cast<std::size_t>(nvars), 0);
    const std::string mono = line.substr(space + 1);
    if (mono != "1") {
      std::istringstream factors(mono);
      std::string factor;
      while (std::getline(factors, factor, '*')) {
        if (factor.size() < 2 || factor[0] != 'x') {
          throw ParseError("line " + std::to_string(line_no) + ": bad factor '" + factor + "'");
        }
        const auto caret = factor.find('^');
        try {
          const int var = std::stoi(factor.substr(1, caret - 1));
          const int power = caret == std::string::npos ? 1 : std::stoi(factor.substr(caret + 1));
          if (var < 1 || var > nvars || power < 1 || exps[var - 1] + power > 255) {
            throw ParseError("line " + std::to_string(line_no) + ": factor out of range");
          }
          exps[var - 1] = static_cast<std::uint8_t>(exps[var - 1] + power);
        } catch (const std::logic_error&) {
          throw ParseError("line " + std::to_string(line_no) + ": bad factor '" + factor + "'");
        }
      }
    }
    f.add_term(exps, coeff);
  }
  return f;
}

Json poly_to_json(const GeneralPoly& f) {
  Json terms = Json::array();
  for (const auto& [exps, coeff] : f.terms()) {
    std::vector<int> vars;
    for (std::size_t k = 0; k < exps.size(); ++k) {
      for (int p = 0; p < exps[k]; ++p) vars.push_back(static_cast<int>(k) + 1);
    }
    terms.push_back(Json{{"vars", vars}, {"coeff", to_string(coeff)}});
  }
  return Json{{"nvars", f.nvars()}, {"terms", terms}};
}

Json poly_to_json(const MultiAffinePoly& f) { return poly_to_json(GeneralPoly::from(f)); }

GeneralPoly poly_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("polynomial must be a JSON object");
  const int nvars = require_int(doc, "nvars");
  if (nvars < 0 || nvars > kMaxElements) throw ParseError("nvars outside 0..64");
  GeneralPoly f(nvars);
  if (!doc.contains("terms") || !doc.at("terms").is_array()) {
    throw ParseError("missing \"terms\" array");
  }
  for (const auto& term : doc.at("terms")) {
    GeneralPoly::Exponents exps(static_cast<std::size_t>(nvars), 0);
    for (const auto& v : term.at("vars")) {
      const int var = v.get<int>();
      if (var < 1 || var > nvars) throw ParseError("variable index out of range");
      ++exps[var - 1];
    }
    f.add_term(exps, rational_from_json(term.at("coeff")));
  }
  return f;
}

// ------------------------------------------------------------------ matrices

Rational rational_from_json(const Json& value) {
  if (value.is_number_integer()) return Rational(value.get<long>());
  if (value.is_string()) return parse_rational(value.get<std::string>());
  throw ParseError("expected a rational string \"p/q\" or an integer, got " + value.dump());
}

RationalMatrix matrix_from_json(const Json& rows) {
  if (!rows.is_array()) throw ParseError("matrix must be an array of rows");
  std::vector<std::vector<Rational>> data;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_array()) throw ParseError("matrix row " + std::to_string(r + 1) + " is not an array");
    std::vector<Rational> row;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      try {
        row.push_back(rational_from_json(rows[r][c]));
      } catch (const ParseError& e) {
        throw ParseError("entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                         "): " + e.what());
      }
    }
    data.push_back(std::move(row));
  }
  try {
    return RationalMatrix::from_rows(data);
  } catch (const StructuralError& e) {
    throw ParseError(e.what());
  }
}

Json matrix_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace vamos
