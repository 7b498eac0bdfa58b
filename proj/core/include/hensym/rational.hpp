// Copyright 2026 The hensym Authors
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

#ifndef HENSYM_RATIONAL_HPP_
#define HENSYM_RATIONAL_HPP_

#include <gmpxx.h>

#include <optional>
#include <string>

namespace hensym {

/// All model data, balances and comparisons use exact rational arithmetic.
/// Floating point appears only in human-readable report output.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "3", "-4", "3/4", "1.5", "2.5e2" into an exact rational.
/// Throws ParseError on malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

/// Like parse_rational but returns nullopt instead of throwing.
std::optional<Rational> try_parse_rational(const std::string& text);

/// Canonical form: "n" when the denominator is 1, else "n/d".
std::string to_string(const Rational& r);

double to_double(const Rational& r);

/// n^m as an exact big integer.  m >= 0; pow_bigint(0, 0) is 1.
BigInt pow_bigint(const BigInt& n, unsigned long m);

BigInt factorial(unsigned long n);

/// |a - b| <= rel_eps * max(|a|, |b|), all in exact arithmetic.
bool approx_equal(const Rational& a, const Rational& b, const Rational& rel_eps);

}  // namespace hensym

#endif  // HENSYM_RATIONAL_HPP_
