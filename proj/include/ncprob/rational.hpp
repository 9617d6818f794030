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

#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace ncprob {

/// Exact arbitrary-precision rational. All identities are checked over this field.
using Rational = mpq_class;

/// Parses "p/q", "p", or a decimal literal such as "-1.25e-3". Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q" in lowest terms, or "p" when q = 1.
std::string format_rational(const Rational& value);

/// Exact rational value of the shortest decimal that round-trips `value`.
Rational rational_from_double(double value);

Rational pow(const Rational& base, int exponent);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

/// Gaussian rational a + bi. Used only to carry complex matrix moments
/// into the exact series pipeline.
struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() = default;
  ComplexRational(Rational real) : re(std::move(real)) {}  // NOLINT(google-explicit-constructor)
  ComplexRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}
  ComplexRational(int real) : re(real) {}  // NOLINT(google-explicit-constructor)

  ComplexRational& operator+=(const ComplexRational& other) {
    re += other.re;
    im += other.im;
    return *this;
  }
  ComplexRational& operator-=(const ComplexRational& other) {
    re -= other.re;
    im -= other.im;
    return *this;
  }
  ComplexRational& operator*=(const ComplexRational& other) {
    Rational r = re * other.re - im * other.im;
    im = re * other.im + im * other.re;
    re = std::move(r);
    return *this;
  }

  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
  friend ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  static ComplexRational from_complex(std::complex<double> value) {
    return {rational_from_double(value.real()), rational_from_double(value.imag())};
  }
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
};

inline bool is_zero(const ComplexRational& value) { return is_zero(value.re) && is_zero(value.im); }

}  // namespace ncprob
