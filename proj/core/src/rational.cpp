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

#include "hensym/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "hensym/errors.hpp"

namespace hensym {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

// "12.345" -> 12345/1000, sign handled by caller of the full parse.
std::optional<Rational> parse_decimal(const std::string& s) {
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    if (!is_integer_token(s)) return std::nullopt;
    return Rational(mpz_class(s));
  }
  std::string head = s.substr(0, dot);
  std::string tail = s.substr(dot + 1);
  if (tail.empty() || !is_integer_token(tail) || tail[0] == '+' || tail[0] == '-') {
    return std::nullopt;
  }
  bool negative = false;
  if (!head.empty() && (head[0] == '+' || head[0] == '-')) {
    negative = head[0] == '-';
    head = head.substr(1);
  }
  if (!head.empty() && !is_integer_token(head)) return std::nullopt;
  mpz_class num(head.empty() ? "0" : head);
  mpz_class den = 1;
  for (char c : tail) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  Rational r(num, den);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

}  // namespace

std::optional<Rational> try_parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;

  // a/b with both sides integer
  if (auto slash = text.find('/'); slash != std::string::npos) {
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den)) return std::nullopt;
    mpz_class d(den);
    if (d == 0) return std::nullopt;
    Rational r(mpz_class(num), d);
    r.canonicalize();
    return r;
  }

  // optional exponent: mantissa e/E exponent
  auto epos = text.find_first_of("eE");
  std::string mantissa = epos == std::string::npos ? text : text.substr(0, epos);
  auto base = parse_decimal(mantissa);
  if (!base) return std::nullopt;
  if (epos == std::string::npos) return base;

  std::string exp = text.substr(epos + 1);
  if (!is_integer_token(exp)) return std::nullopt;
  long e = std::strtol(exp.c_str(), nullptr, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  Rational r = *base;
  if (e >= 0) {
    r *= Rational(scale);
  } else {
    r /= Rational(scale);
  }
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  auto r = try_parse_rational(text);
  if (!r) throw ParseError("not a rational number: '" + text + "'");
  return *r;
}

std::string to_string(const Rational& r) {
  return r.get_str();
}

double to_double(const Rational& r) {
  return r.get_d();
}

BigInt pow_bigint(const BigInt& n, unsigned long m) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), n.get_mpz_t(), m);
  return out;
}

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

bool approx_equal(const Rational& a, const Rational& b, const Rational& rel_eps) {
  if (a == b) return true;
  Rational diff = abs(a - b);
  Rational scale = std::max(abs(a), abs(b));
  return diff <= rel_eps * scale;
}

}  // namespace hensym
