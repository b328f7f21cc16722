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

// File formats.
//
// Matroid JSON:     {"n": int, "rank": int, "bases": [[int,...],...]}
//                   1-based sorted elements, optional "labels" for minors.
// Polynomial text:  one term per line, "+p/q x1*x3^2", canonical order;
//                   the zero polynomial is the single line "0".
// Polynomial JSON:  {"nvars": n, "terms": [{"vars": [...], "coeff": "p/q"}]}
//                   where a variable repeats once per power.

#include <filesystem>
#include <string>

#include "json.hpp"
#include "vamos/linalg.hpp"
#include "vamos/matroid.hpp"
#include "vamos/polynomial.hpp"

namespace vamos {

using Json = nlohmann::json;

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);
Json read_json_file(const std::filesystem::path& path);

// Validates structure and the exchange axiom; ParseError otherwise.
Matroid matroid_from_json(const Json& doc);
// With validate_exchange = false only the structure is checked; callers that
// want to report the axiom failure themselves use this.
LabeledMatroid labeled_matroid_from_json(const Json& doc, bool validate_exchange = true);
Matroid read_matroid_file(const std::filesystem::path& path);

Json matroid_to_json(const Matroid& m);
Json matroid_to_json(const LabeledMatroid& m);

// Canonical serialization: bases in lexicographic order, one per line.
std::string format_matroid(const Matroid& m);
std::string format_matroid(const LabeledMatroid& m);

// "x1*x3^2"; "1" for the constant monomial.
std::string format_monomial(const GeneralPoly::Exponents& exponents);
std::string format_monomial(Subset monomial);

std::string format_poly_text(const GeneralPoly& f);
std::string format_poly_text(const MultiAffinePoly& f);
GeneralPoly parse_poly_text(const std::string& text, int nvars);

Json poly_to_json(const GeneralPoly& f);
Json poly_to_json(const MultiAffinePoly& f);
GeneralPoly poly_from_json(const Json& doc);

// Entries as "p/q" strings or integers; floats rejected.
Rational rational_from_json(const Json& value);
RationalMatrix matrix_from_json(const Json& rows);
Json matrix_to_json(const RationalMatrix& m);

}  // namespace vamos
