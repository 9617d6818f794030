// Copyright 2026 The ncprob Authors
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

#include "ncprob/rational.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "ncprob/error.hpp"

namespace ncprob {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) throw ParseError("malformed rational '" + std::string(whole) + "'");
  mpz_class out;
  out.set_str(std::string(digits), 10);
  if (!text.empty() && text.front() == '-') out = -out;
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

Rational parse_decimal(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = text.substr(e + 1);
    mpz_class exp_value = parse_integer(exp_text, whole);
    if (!exp_value.fits_slong_p() || abs(exp_value) > 100000) {
      throw ParseError("exponent out of range in '" + std::string(whole) + "'");
    }
    exponent = exp_value.get_si();
    text = text.substr(0, e);
  }
  std::string digits;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      throw ParseError("malformed rational '" + std::string(whole) + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(text)) throw ParseError("malformed rational '" + std::string(whole) + "'");
    digits = std::string(text);
  }
  mpz_class mantissa(digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational out = exponent >= 0 ? Rational(mantissa * scale) : Rational(mantissa, scale);
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  text = trim(text);
  if (text.empty()) throw ParseError("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(trim(text.substr(0, slash)), whole);
    std::string_view den_text = trim(text.substr(slash + 1));
    if (!den_text.empty() && den_text.front() == '-') {
      throw ParseError("negative denominator in '" + std::string(whole) + "'");
    }
    mpz_class den = parse_integer(den_text, whole);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(whole) + "'");
    Rational out(num, den);
    out.canonicalize();
    return out;
  }
  if (text.find_first_of(".eE") != std::string_view::npos) return parse_decimal(text, whole);
  return Rational(parse_integer(text, whole));
}

std::string format_rational(const Rational& value) { return value.get_str(10); }

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) throw DomainError("cannot convert a non-finite value to a rational");
  char buffer[64];
  auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return parse_rational(std::string_view(buffer, static_cast<std::size_t>(result.ptr - buffer)));
}

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (is_zero(base)) throw DomainError("zero raised to a negative power");
    return Rational(1) / pow(base, -exponent);
  }
  Rational out(1);
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace ncprob
