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

#include <algorithm>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncprob/error.hpp"
#include "ncprob/rational.hpp"
#include "ncprob/word.hpp"

namespace ncprob {

namespace detail {
void warn_degree_cap(int degree);
}  // namespace detail

/// Truncated power series in k non-commuting indeterminates with zero constant term.
///
/// Coefficients are known for every word of length 1..degree; absent entries
/// are zero. Zero coefficients are never stored. Requests beyond the
/// truncation degree are errors, since those coefficients are unknown rather
/// than zero.
template <class C>
class BasicSeries {
 public:
  using Coefficient = C;
  using TermMap = std::map<Word, C>;

  BasicSeries(int k, int degree) : k_(k), degree_(degree) {
    if (k < 1) throw PreconditionError("series alphabet size must be >= 1");
    if (degree < 1) throw PreconditionError("series truncation degree must be >= 1");
    if (degree > kAdvisoryDegreeCap) detail::warn_degree_cap(degree);
  }

  int alphabet_size() const { return k_; }
  int degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  C coefficient(const Word& w) const {
    check_word(w);
    auto it = terms_.find(w);
    return it == terms_.end() ? C{} : it->second;
  }

  /// Lookup for hot loops where `w` is already known to be valid.
  const C* find(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? nullptr : &it->second;
  }

  void set(const Word& w, C value) {
    check_word(w);
    if (ncprob::is_zero(value)) {
      terms_.erase(w);
    } else {
      terms_.insert_or_assign(w, std::move(value));
    }
  }

  void accumulate(const Word& w, const C& value) {
    check_word(w);
    if (ncprob::is_zero(value)) return;
    auto [it, inserted] = terms_.try_emplace(w, value);
    if (!inserted) {
      it->second += value;
      if (ncprob::is_zero(it->second)) terms_.erase(it);
    }
  }

  static BasicSeries monomial(int k, int degree, const Word& w, C value) {
    BasicSeries s(k, degree);
    s.set(w, std::move(value));
    return s;
  }

  /// The series z_i of a single indeterminate.
  static BasicSeries variable(int k, int degree, int letter) {
    return monomial(k, degree, Word{letter}, C(1));
  }

  friend bool operator==(const BasicSeries& a, const BasicSeries& b) {
    return a.k_ == b.k_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  void check_word(const Word& w) const {
    if (w.empty()) throw PreconditionError("series coefficients are not defined for the empty word");
    if (static_cast<int>(w.size()) > degree_) {
      throw DegreeExceeded("word " + w.to_string() + " has length " + std::to_string(w.size()) +
                           " beyond truncation degree " + std::to_string(degree_));
    }
    for (int letter : w.letters()) {
      if (letter < 1 || letter > k_) {
        throw PreconditionError("letter " + std::to_string(letter) + " outside alphabet 1.." +
                                std::to_string(k_));
      }
    }
  }

  int k_;
  int degree_;
  TermMap terms_;
};

using TruncatedSeries = BasicSeries<Rational>;

namespace detail {

template <class C>
void require_same_alphabet(const BasicSeries<C>& f, const BasicSeries<C>& g) {
  if (f.alphabet_size() != g.alphabet_size()) {
    throw MismatchError("alphabet mismatch: k = " + std::to_string(f.alphabet_size()) + " vs k = " +
                        std::to_string(g.alphabet_size()));
  }
}

// Terms of f grouped by word length; index 0 unused.
template <class C>
std::vector<std::vector<std::pair<Word, C>>> terms_by_length(const BasicSeries<C>& f) {
  std::vector<std::vector<std::pair<Word, C>>> buckets(f.degree() + 1);
  for (const auto& [w, c] : f.terms()) buckets[w.size()].emplace_back(w, c);
  return buckets;
}

// Solves g = f + sign * g * f degree by degree. Every coefficient of g at
// length n only needs g at shorter lengths, so one pass suffices.
template <class C>
BasicSeries<C> solve_right_recursion(const BasicSeries<C>& f, int sign) {
  const int n_max = f.degree();
  auto f_by_len = terms_by_length(f);
  std::vector<std::vector<std::pair<Word, C>>> g_by_len(n_max + 1);
  BasicSeries<C> g(f.alphabet_size(), n_max);
  for (int n = 1; n <= n_max; ++n) {
    std::map<Word, C> level;
    for (const auto& [w, c] : f_by_len[n]) level[w] += c;
    for (int a = 1; a < n; ++a) {
      for (const auto& [u, gu] : g_by_len[a]) {
        for (const auto& [v, fv] : f_by_len[n - a]) {
          C term = gu * fv;
          if (sign < 0) {
            level[u.concat(v)] -= term;
          } else {
            level[u.concat(v)] += term;
          }
        }
      }
    }
    for (auto& [w, c] : level) {
      if (ncprob::is_zero(c)) continue;
      g.set(w, c);
      g_by_len[n].emplace_back(w, std::move(c));
    }
  }
  return g;
}

}  // namespace detail

template <class C>
BasicSeries<C> add(const BasicSeries<C>& f, const BasicSeries<C>& g) {
  detail::require_same_alphabet(f, g);
  const int degree = std::min(f.degree(), g.degree());
  BasicSeries<C> out(f.alphabet_size(), degree);
  for (const auto* s : {&f, &g}) {
    for (const auto& [w, c] : s->terms()) {
      if (static_cast<int>(w.size()) <= degree) out.accumulate(w, c);
    }
  }
  return out;
}

template <class C>
BasicSeries<C> scale(const C& factor, const BasicSeries<C>& f) {
  BasicSeries<C> out(f.alphabet_size(), f.degree());
  if (ncprob::is_zero(factor)) return out;
  for (const auto& [w, c] : f.terms()) out.set(w, factor * c);
  return out;
}

template <class C>
BasicSeries<C> negate(const BasicSeries<C>& f) {
  return scale(C(-1), f);
}

template <class C>
BasicSeries<C> subtract(const BasicSeries<C>& f, const BasicSeries<C>& g) {
  return add(f, negate(g));
}

/// Non-commutative Cauchy product, truncated at the smaller degree.
template <class C>
BasicSeries<C> multiply(const BasicSeries<C>& f, const BasicSeries<C>& g) {
  detail::require_same_alphabet(f, g);
  const int degree = std::min(f.degree(), g.degree());
  BasicSeries<C> out(f.alphabet_size(), degree);
  for (const auto& [u, fu] : f.terms()) {
    if (static_cast<int>(u.size()) >= degree) break;  // terms are ordered by length
    for (const auto& [v, gv] : g.terms()) {
      if (static_cast<int>(u.size() + v.size()) > degree) break;
      out.accumulate(u.concat(v), fu * gv);
    }
  }
  return out;
}

/// f (1 + f)^{-1}: the moment-series to eta-series map.
template <class C>
BasicSeries<C> geometric_inverse_combination(const BasicSeries<C>& f) {
  return detail::solve_right_recursion(f, -1);
}

/// f (1 - f)^{-1}: inverse of geometric_inverse_combination.
template <class C>
BasicSeries<C> invert_eta_to_moments(const BasicSeries<C>& f) {
  return detail::solve_right_recursion(f, +1);
}

/// Coefficient of w scaled by r^{|w|}.
template <class C>
BasicSeries<C> dilate(const BasicSeries<C>& f, const C& r) {
  BasicSeries<C> out(f.alphabet_size(), f.degree());
  if (ncprob::is_zero(r)) return out;
  std::vector<C> powers{C(1)};
  for (int n = 1; n <= f.degree(); ++n) powers.push_back(powers.back() * r);
  for (const auto& [w, c] : f.terms()) out.set(w, powers[w.size()] * c);
  return out;
}

/// Drops every coefficient above `degree` (which must not exceed f.degree()).
template <class C>
BasicSeries<C> truncate(const BasicSeries<C>& f, int degree) {
  if (degree > f.degree()) {
    throw DegreeExceeded("cannot raise truncation degree from " + std::to_string(f.degree()) + " to " +
                         std::to_string(degree));
  }
  BasicSeries<C> out(f.alphabet_size(), degree);
  for (const auto& [w, c] : f.terms()) {
    if (static_cast<int>(w.size()) <= degree) out.set(w, c);
  }
  return out;
}

template <class C>
BasicSeries<C> operator+(const BasicSeries<C>& f, const BasicSeries<C>& g) {
  return add(f, g);
}
template <class C>
BasicSeries<C> operator-(const BasicSeries<C>& f, const BasicSeries<C>& g) {
  return subtract(f, g);
}
template <class C>
BasicSeries<C> operator*(const BasicSeries<C>& f, const BasicSeries<C>& g) {
  return multiply(f, g);
}

}  // namespace ncprob
