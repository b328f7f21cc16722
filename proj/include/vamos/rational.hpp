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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace vamos {

// Arbitrary-precision rationals. Every value that leaves this library is
// canonical: lowest terms, positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q", "-p/q" or an integer. Floats, blanks and zero denominators
// are rejected with ParseError.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

// Closest double; only for cross-checks and display.
inline double to_double(const Rational& value) { return value.get_d(); }

}  // namespace vamos
