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

#include "ncprob/distribution.hpp"

#include <algorithm>

namespace ncprob {

namespace {

void require_positive(const Rational& value, const char* name) {
  if (sgn(value) <= 0) throw DomainError(std::string(name) + " must be > 0, got " + format_rational(value));
}

std::pair<TruncatedSeries, TruncatedSeries> common_degree(const Distribution& a, const Distribution& b) {
  detail::require_same_alphabet(a.moments(), b.moments());
  const int degree = std::min(a.degree(), b.degree());
  return {truncate(a.moments(), degree), truncate(b.moments(), degree)};
}

IdentityReport compare_moments(std::string name, const Distribution& lhs, const Distribution& rhs) {
  return compare_series(std::move(name), lhs.moments(), rhs.moments());
}

void absorb(IdentityReport& into, const IdentityReport& from) {
  into.checked += from.checked;
  for (const auto& f : from.failures) {
    into.failures.push_back({from.name + ": " + f.word, f.lhs, f.rhs, f.delta});
  }
}

}  // namespace

Distribution Distribution::delta1(int k, int degree) {
  TruncatedSeries m(k, degree);
  for (int n = 1; n <= degree; ++n) {
    for (const auto& w : all_words(k, n)) m.set(w, Rational(1));
  }
  return Distribution(std::move(m));
}

Distribution free_convolve(const Distribution& a, const Distribution& b) {
  return Distribution::from_r(a.r_view() + b.r_view());
}

Distribution boolean_convolve(const Distribution& a, const Distribution& b) {
  return Distribution::from_eta(a.eta_view() + b.eta_view());
}

Distribution free_power(const Distribution& d, const Rational& t) {
  require_positive(t, "free convolution power t");
  return Distribution::from_r(scale(t, d.r_view()));
}

Distribution boolean_power(const Distribution& d, const Rational& t) {
  require_positive(t, "Boolean convolution power t");
  return Distribution::from_eta(scale(t, d.eta_view()));
}

Distribution bbp_transform(const Distribution& d, const Rational& t, BtRoute route) {
  if (sgn(t) < 0) throw DomainError("B_t needs t >= 0, got " + format_rational(t));
  if (sgn(t) == 0) return d;
  const Rational inv_t = 1 / t;
  switch (route) {
    case BtRoute::Composition: {
      const Rational one_plus_t = 1 + t;
      const Rational inv = 1 / one_plus_t;
      return boolean_power(free_power(d, one_plus_t), inv);
    }
    case BtRoute::RSeries:
      return Distribution::from_r(scale(inv_t, reta(scale(t, d.r_view()))));
    case BtRoute::EtaSeries:
      return Distribution::from_eta(scale(inv_t, reta(scale(t, d.eta_view()))));
  }
  throw PreconditionError("unknown B_t route");
}

Distribution dilate_dist(const Distribution& d, const Rational& r) {
  require_positive(r, "dilation factor r");
  return Distribution(dilate(d.moments(), r));
}

Distribution mult_convolve(const Distribution& a, const Distribution& b) {
  auto [ma, mb] = common_degree(a, b);
  const TruncatedSeries kappa = free_cumulants_from_moments(ma);
  TruncatedSeries out(ma.alphabet_size(), ma.degree());
  for (int n = 1; n <= ma.degree(); ++n) {
    const auto& parts = partition_family(PartitionFamily::NonCrossing, n);
    for (const auto& w : all_words(ma.alphabet_size(), n)) {
      Rational sum = 0;
      for (const auto& p : parts) {
        Rational left = detail::ranked_coefficient(w, p.ranks, kappa);
        if (is_zero(left)) continue;
        sum += left * detail::ranked_coefficient(w, p.complement, mb);
      }
      out.set(w, std::move(sum));
    }
  }
  return Distribution(std::move(out));
}

Distribution semicircular(const Rational& t, int k, int degree) {
  require_positive(t, "semicircular variance t");
  TruncatedSeries r(k, degree);
  if (degree >= 2) {
    for (int i = 1; i <= k; ++i) r.set(Word{i, i}, t);
  }
  return Distribution::from_r(r);
}

Distribution phi_map(const Distribution& nu) {
  return Distribution::from_eta(phi_eta(nu.moments()));
}

// ---------------------------------------------------------------------------

IdentityReport check_exponent_commutation(const Distribution& d, const Rational& p, const Rational& q) {
  if (p < 1) throw DomainError("exponent commutation needs p >= 1, got " + format_rational(p));
  const Rational q_min = (p - 1) / p;
  if (q <= q_min) {
    throw DomainError("exponent commutation needs q > (p-1)/p = " + format_rational(q_min) + ", got " +
                      format_rational(q));
  }
  const Rational q_prime = 1 - p + p * q;
  const Rational p_prime = p * q / q_prime;
  const Distribution lhs = boolean_power(free_power(d, p), q);
  const Distribution rhs = free_power(boolean_power(d, q_prime), p_prime);
  return compare_moments("(mu^{+p})^{u q} = (mu^{u q'})^{+p'}, p = " + format_rational(p) + ", q = " +
                             format_rational(q) + ", p' = " + format_rational(p_prime) + ", q' = " +
                             format_rational(q_prime),
                         lhs, rhs);
}

IdentityReport check_bt_routes(const Distribution& d, const Rational& t) {
  const Distribution composed = bbp_transform(d, t, BtRoute::Composition);
  IdentityReport report;
  report.name = "B_t routes agree, t = " + format_rational(t);
  absorb(report, compare_moments("composition vs R-route", composed, bbp_transform(d, t, BtRoute::RSeries)));
  absorb(report, compare_moments("composition vs eta-route", composed, bbp_transform(d, t, BtRoute::EtaSeries)));
  return report;
}

IdentityReport check_semigroup(const Distribution& d, const Rational& s, const Rational& t) {
  const Rational sum = s + t;
  return compare_moments("B_s(B_t mu) = B_{s+t} mu, s = " + format_rational(s) + ", t = " + format_rational(t),
                         bbp_transform(bbp_transform(d, t), s), bbp_transform(d, sum));
}

IdentityReport check_bbp_at_one(const Distribution& d) {
  return compare_series("R(B_1 mu) = eta(mu)", bbp_transform(d, 1).r_view(), d.eta_view());
}

IdentityReport check_boxtimes_homomorphism(const Distribution& a, const Distribution& b, const Rational& t) {
  return compare_moments("B_t(a x b) = B_t(a) x B_t(b), t = " + format_rational(t),
                         bbp_transform(mult_convolve(a, b), t),
                         mult_convolve(bbp_transform(a, t), bbp_transform(b, t)));
}

IdentityReport check_free_power_dilation(const Distribution& a, const Distribution& b, const Rational& t) {
  return compare_moments("a^{+t} x b^{+t} = (a x b)^{+t} o D_t, t = " + format_rational(t),
                         mult_convolve(free_power(a, t), free_power(b, t)),
                         dilate_dist(free_power(mult_convolve(a, b), t), t));
}

IdentityReport check_boolean_power_dilation(const Distribution& a, const Distribution& b, const Rational& t) {
  return compare_moments("a^{u t} x b^{u t} = (a x b)^{u t} o D_t, t = " + format_rational(t),
                         mult_convolve(boolean_power(a, t), boolean_power(b, t)),
                         dilate_dist(boolean_power(mult_convolve(a, b), t), t));
}

IdentityReport check_phi_brownian(const Distribution& nu, const Rational& t) {
  const Distribution gamma = semicircular(t, nu.alphabet_size(), nu.degree());
  return compare_moments("Phi(nu + gamma_t) = B_t(Phi(nu)), t = " + format_rational(t),
                         phi_map(free_convolve(nu, gamma)), bbp_transform(phi_map(nu), t));
}

IdentityReport check_boolean_routes(const Distribution& d) {
  IdentityReport report;
  report.name = "Boolean conversions: interval sum vs series algebra";
  const TruncatedSeries eta = d.eta_view();
  absorb(report, compare_series("moments", moments_from_boolean_cumulants(eta), invert_eta_to_moments(eta)));
  absorb(report, compare_series("cumulants", boolean_cumulants_from_moments(d.moments()), eta));
  return report;
}

}  // namespace ncprob
