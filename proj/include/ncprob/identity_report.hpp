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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ncprob/rational.hpp"
#include "ncprob/series.hpp"

namespace ncprob {

/// One compared quantity. `word` may also hold a partition or parameter label.
struct Assertion {
  std::string word;
  std::string lhs;
  std::string rhs;
  std::optional<double> delta;
};

/// Outcome of checking one identity: how many quantities were compared and
/// which of them disagreed.
struct IdentityReport {
  std::string name;
  std::size_t checked = 0;
  std::vector<Assertion> failures;
  std::vector<Assertion> details;  // per-word deltas for floating checks

  bool passed() const { return failures.empty(); }

  void fail(std::string word, std::string lhs, std::string rhs, std::optional<double> delta = std::nullopt) {
    failures.push_back({std::move(word), std::move(lhs), std::move(rhs), delta});
  }
};

inline std::string format_coefficient(const Rational& c) { return format_rational(c); }
inline std::string format_coefficient(const ComplexRational& c) {
  return format_rational(c.re) + (sgn(c.im) < 0 ? "" : "+") + format_rational(c.im) + "i";
}

/// Exact comparison of every coefficient up to the smaller truncation degree.
template <class C>
IdentityReport compare_series(std::string name, const BasicSeries<C>& lhs, const BasicSeries<C>& rhs) {
  detail::require_same_alphabet(lhs, rhs);
  IdentityReport report;
  report.name = std::move(name);
  const int degree = std::min(lhs.degree(), rhs.degree());
  std::size_t per_length = 1;
  for (int n = 1; n <= degree; ++n) {
    per_length *= static_cast<std::size_t>(lhs.alphabet_size());
    report.checked += per_length;
  }
  auto check = [&](const Word& w) {
    const C* a = lhs.find(w);
    const C* b = rhs.find(w);
    const C za{};
    const C& x = a ? *a : za;
    const C& y = b ? *b : za;
    if (!(x == y)) report.fail(w.to_string(), format_coefficient(x), format_coefficient(y));
  };
  for (const auto& [w, c] : lhs.terms()) {
    if (static_cast<int>(w.size()) <= degree) check(w);
  }
  for (const auto& [w, c] : rhs.terms()) {
    if (static_cast<int>(w.size()) <= degree && !lhs.find(w)) check(w);
  }
  return report;
}

}  // namespace ncprob
