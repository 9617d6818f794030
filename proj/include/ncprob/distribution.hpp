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

#include <string>

#include "ncprob/identity_report.hpp"
#include "ncprob/series.hpp"
#include "ncprob/transforms.hpp"

namespace ncprob {

/// A truncated moment functional: moments of all words of length 1..degree,
/// with the empty word implicitly at 1. No positivity is assumed.
class Distribution {
 public:
  explicit Distribution(TruncatedSeries moments) : moments_(std::move(moments)) {}

  static Distribution from_moments(TruncatedSeries m) { return Distribution(std::move(m)); }
  static Distribution from_r(const TruncatedSeries& r) { return Distribution(moments_from_free_cumulants(r)); }
  static Distribution from_eta(const TruncatedSeries& eta) { return Distribution(invert_eta_to_moments(eta)); }

  /// All moments zero.
  static Distribution delta0(int k, int degree) { return Distribution(TruncatedSeries(k, degree)); }
  /// All moments one.
  static Distribution delta1(int k, int degree);

  int alphabet_size() const { return moments_.alphabet_size(); }
  int degree() const { return moments_.degree(); }

  const TruncatedSeries& moments() const { return moments_; }
  TruncatedSeries r_view() const { return free_cumulants_from_moments(moments_); }
  TruncatedSeries eta_view() const { return geometric_inverse_combination(moments_); }

  /// mu(X_w); the empty word gives 1.
  Rational moment(const Word& w) const { return w.empty() ? Rational(1) : moments_.coefficient(w); }

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  TruncatedSeries moments_;
};

Distribution free_convolve(const Distribution& a, const Distribution& b);
Distribution boolean_convolve(const Distribution& a, const Distribution& b);
/// mu^{boxplus t}; t > 0.
Distribution free_power(const Distribution& d, const Rational& t);
/// mu^{uplus t}; t > 0.
Distribution boolean_power(const Distribution& d, const Rational& t);

enum class BtRoute {
  Composition,  // (mu^{boxplus(1+t)})^{uplus 1/(1+t)}
  RSeries,      // R = (1/t) Reta(t R_mu)
  EtaSeries,    // eta = (1/t) Reta(t eta_mu)
};

/// B_t for t >= 0. B_0 is the identity on every route.
Distribution bbp_transform(const Distribution& d, const Rational& t, BtRoute route = BtRoute::Composition);

/// mu o D_r for r > 0.
Distribution dilate_dist(const Distribution& d, const Rational& r);

/// Moments of x_1 y_1, ..., x_k y_k for free tuples x ~ a, y ~ b.
Distribution mult_convolve(const Distribution& a, const Distribution& b);

/// gamma_t: R = t (z_1^2 + ... + z_k^2); t > 0.
Distribution semicircular(const Rational& t, int k, int degree);

/// eta_{Phi(nu)} = sum_i z_i (1 + M_nu) z_i. The result has degree nu.degree + 2.
template <class C>
BasicSeries<C> phi_eta(const BasicSeries<C>& nu_moments) {
  const int k = nu_moments.alphabet_size();
  BasicSeries<C> eta(k, nu_moments.degree() + 2);
  for (int i = 1; i <= k; ++i) eta.set(Word{i, i}, C(1));
  for (const auto& [u, c] : nu_moments.terms()) {
    for (int i = 1; i <= k; ++i) {
      std::vector<int> letters{i};
      letters.insert(letters.end(), u.letters().begin(), u.letters().end());
      letters.push_back(i);
      eta.set(Word(std::move(letters)), c);
    }
  }
  return eta;
}

Distribution phi_map(const Distribution& nu);

// ---------------------------------------------------------------------------
// Identity checks

/// (mu^{boxplus p})^{uplus q} = (mu^{uplus q'})^{boxplus p'} with
/// p' = pq/(1-p+pq), q' = 1-p+pq. Needs p >= 1 and q > (p-1)/p.
IdentityReport check_exponent_commutation(const Distribution& d, const Rational& p, const Rational& q);

/// The three B_t routes agree.
IdentityReport check_bt_routes(const Distribution& d, const Rational& t);

/// B_s(B_t(mu)) = B_{s+t}(mu).
IdentityReport check_semigroup(const Distribution& d, const Rational& s, const Rational& t);

/// R_{B_1(mu)} = eta_mu.
IdentityReport check_bbp_at_one(const Distribution& d);

/// B_t(a boxtimes b) = B_t(a) boxtimes B_t(b).
IdentityReport check_boxtimes_homomorphism(const Distribution& a, const Distribution& b, const Rational& t);

/// (a^{boxplus t}) boxtimes (b^{boxplus t}) = (a boxtimes b)^{boxplus t} o D_t.
IdentityReport check_free_power_dilation(const Distribution& a, const Distribution& b, const Rational& t);
/// Boolean analogue.
IdentityReport check_boolean_power_dilation(const Distribution& a, const Distribution& b, const Rational& t);

/// Phi(nu boxplus gamma_t) = B_t(Phi(nu)).
IdentityReport check_phi_brownian(const Distribution& nu, const Rational& t);

/// Moments from Boolean cumulants: Int(n) sum against series algebra, both directions.
IdentityReport check_boolean_routes(const Distribution& d);

}  // namespace ncprob
