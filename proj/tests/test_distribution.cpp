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

#include <doctest.h>

#include "ncprob/distribution.hpp"
#include "ncprob/random.hpp"

using namespace ncprob;

namespace {

Word ones(int n) { return Word(std::vector<int>(static_cast<std::size_t>(n), 1)); }

Rational q(const char* s) { return parse_rational(s); }

// Symmetric Bernoulli on {-1, 1}: eta = z^2.
Distribution bernoulli(int degree) {
  return Distribution::from_eta(TruncatedSeries::monomial(1, degree, Word{1, 1}, 1));
}

void require_pass(const IdentityReport& r) {
  INFO(r.name);
  for (const auto& f : r.failures) INFO(f.word << ": " << f.lhs << " vs " << f.rhs);
  CHECK(r.passed());
  CHECK(r.checked > 0);
}

}  // namespace

TEST_CASE("views round trip") {
  Rng rng(2);
  const auto mu = random_distribution(rng, 2, 6);
  CHECK(Distribution::from_r(mu.r_view()) == mu);
  CHECK(Distribution::from_eta(mu.eta_view()) == mu);
  CHECK(mu.moment(Word{}) == 1);
}

TEST_CASE("point masses") {
  const auto d0 = Distribution::delta0(2, 5);
  CHECK(d0.moments().is_zero());
  CHECK(d0.r_view().is_zero());
  const auto d1 = Distribution::delta1(2, 5);
  CHECK(d1.moment(Word{1, 2, 2, 1}) == 1);
  // delta_1: R = z_1 + z_2 only
  const auto r = d1.r_view();
  CHECK(r.coefficient(Word{1}) == 1);
  CHECK(r.terms().size() == 2);
}

TEST_CASE("semicircular moments") {
  const auto s = semicircular(q("3/2"), 1, 8);
  const Rational expected[] = {0, 0, q("3/2"), 0, 2 * q("9/4"), 0, 5 * q("27/8"), 0, 14 * q("81/16")};
  for (int n = 1; n <= 8; ++n) CHECK(s.moment(ones(n)) == expected[n]);
  const auto s2 = semicircular(Rational(1), 2, 4);
  CHECK(s2.moment(Word{1, 2, 2, 1}) == 1);
  CHECK(s2.moment(Word{1, 2, 1, 2}) == 0);
  CHECK_THROWS_AS(semicircular(Rational(0), 1, 4), DomainError);
}

TEST_CASE("convolutions add the matching cumulants") {
  const auto a = semicircular(q("1/2"), 2, 6);
  const auto b = semicircular(q("5/2"), 2, 6);
  CHECK(free_convolve(a, b) == semicircular(Rational(3), 2, 6));
  Rng rng(8);
  const auto mu = random_distribution(rng, 2, 6);
  CHECK(free_convolve(mu, Distribution::delta0(2, 6)) == mu);
  CHECK(boolean_convolve(mu, Distribution::delta0(2, 6)) == mu);
  const auto nu = random_distribution(rng, 2, 6);
  CHECK(boolean_convolve(mu, nu).eta_view() == mu.eta_view() + nu.eta_view());
  CHECK(free_convolve(mu, nu) == free_convolve(nu, mu));
  // different degrees truncate to the smaller
  CHECK(free_convolve(mu, Distribution::delta0(2, 4)).degree() == 4);
  // Bernoulli boxplus Bernoulli: arcsine on [-2, 2], moments binomial(2m, m)
  const auto arc = free_convolve(bernoulli(8), bernoulli(8));
  CHECK(arc.moment(ones(2)) == 2);
  CHECK(arc.moment(ones(4)) == 6);
  CHECK(arc.moment(ones(6)) == 20);
  CHECK(arc.moment(ones(8)) == 70);
}

TEST_CASE("convolution powers") {
  Rng rng(9);
  const auto mu = random_distribution(rng, 2, 5);
  CHECK(free_power(mu, Rational(1)) == mu);
  CHECK(boolean_power(mu, Rational(1)) == mu);
  CHECK(free_power(mu, Rational(2)) == free_convolve(mu, mu));
  CHECK(boolean_power(mu, Rational(2)) == boolean_convolve(mu, mu));
  CHECK(free_power(free_power(mu, q("1/3")), Rational(3)) == mu);
  CHECK_THROWS_AS(free_power(mu, Rational(0)), DomainError);
  CHECK_THROWS_AS(boolean_power(mu, q("-1/2")), DomainError);
}

TEST_CASE("B_t on known inputs") {
  // B_1 carries the symmetric Bernoulli law to the standard semicircle
  CHECK(bbp_transform(bernoulli(8), Rational(1)) == semicircular(Rational(1), 1, 8));
  CHECK(bbp_transform(Distribution::delta0(2, 5), Rational(2)) == Distribution::delta0(2, 5));
  // point masses are fixed
  CHECK(bbp_transform(Distribution::delta1(1, 6), q("5/2")) == Distribution::delta1(1, 6));
  Rng rng(4);
  const auto mu = random_distribution(rng, 2, 5);
  for (auto route : {BtRoute::Composition, BtRoute::RSeries, BtRoute::EtaSeries}) {
    CHECK(bbp_transform(mu, Rational(0), route) == mu);
  }
  CHECK_THROWS_AS(bbp_transform(mu, q("-1/3")), DomainError);
}

TEST_CASE("identity checks on random laws") {
  Rng rng(12);
  for (int trial = 0; trial < 2; ++trial) {
    const auto mu = random_distribution(rng, 2, 5);
    const auto nu = random_distribution(rng, 2, 5);
    require_pass(check_semigroup(mu, q("1/2"), q("3/2")));
    require_pass(check_semigroup(mu, Rational(0), Rational(2)));
    require_pass(check_bbp_at_one(mu));
    require_pass(check_bt_routes(mu, q("2/3")));
    require_pass(check_exponent_commutation(mu, Rational(2), q("3/4")));
    require_pass(check_boolean_routes(mu));
    require_pass(check_boxtimes_homomorphism(mu, nu, q("1/2")));
    require_pass(check_free_power_dilation(mu, nu, Rational(2)));
    require_pass(check_boolean_power_dilation(mu, nu, q("1/2")));
  }
  const auto mu = random_distribution(rng, 1, 4);
  CHECK_THROWS_AS(check_exponent_commutation(mu, q("1/2"), Rational(1)), DomainError);
  CHECK_THROWS_AS(check_exponent_commutation(mu, Rational(2), q("1/2")), DomainError);
}

TEST_CASE("a wrong law fails the check with a located word") {
  Rng rng(13);
  const auto mu = random_distribution(rng, 2, 4);
  TruncatedSeries bumped = mu.moments();
  bumped.set(Word{2, 1}, mu.moment(Word{2, 1}) + 1);
  const auto r = compare_series("bumped", bumped, mu.moments());
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].word == "2,1");
}

TEST_CASE("multiplicative convolution") {
  Rng rng(14);
  const auto mu = random_distribution(rng, 2, 5);
  CHECK(mult_convolve(mu, Distribution::delta1(2, 5)) == mu);
  CHECK(mult_convolve(Distribution::delta1(2, 5), mu) == mu);
  // free Poisson with itself: Fuss-Catalan numbers binomial(3n, n) / (2n + 1)
  TruncatedSeries r(1, 5);
  for (int n = 1; n <= 5; ++n) r.set(ones(n), 1);
  const auto mp = Distribution::from_r(r);
  const auto fc = mult_convolve(mp, mp);
  const int expected[] = {0, 1, 3, 12, 55, 273};
  for (int n = 1; n <= 5; ++n) CHECK(fc.moment(ones(n)) == expected[n]);
  // dilation by delta_r
  CHECK(mult_convolve(mu, dilate_dist(Distribution::delta1(2, 5), Rational(3))) == dilate_dist(mu, Rational(3)));
}

TEST_CASE("dilation") {
  const auto s = semicircular(Rational(1), 1, 6);
  CHECK(dilate_dist(s, Rational(2)) == semicircular(Rational(4), 1, 6));
  CHECK_THROWS_AS(dilate_dist(s, Rational(0)), DomainError);
}

TEST_CASE("Phi on small inputs") {
  // Phi(delta_0): eta = sum z_i z_i
  const auto p0 = phi_map(Distribution::delta0(2, 4));
  CHECK(p0.degree() == 6);
  const auto eta = p0.eta_view();
  CHECK(eta.coefficient(Word{1, 1}) == 1);
  CHECK(eta.coefficient(Word{2, 2}) == 1);
  CHECK(eta.terms().size() == 2);
  // k = 1: symmetric Bernoulli
  const auto b = phi_map(Distribution::delta0(1, 4));
  CHECK(b == bernoulli(6));
  // eta_{(i, u, i)} = nu(u)
  Rng rng(15);
  const auto nu = random_distribution(rng, 2, 3);
  const auto e = phi_map(nu).eta_view();
  CHECK(e.coefficient(Word{1, 2, 1, 1}) == nu.moment(Word{2, 1}));
  CHECK(e.coefficient(Word{2, 1, 2, 1}) == 0);
  CHECK(e.coefficient(Word{2, 2, 1, 2, 2}) == nu.moment(Word{2, 1, 2}));
}

TEST_CASE("Phi intertwines the Brownian motion with B_t") {
  Rng rng(16);
  const auto nu = random_distribution(rng, 2, 3);
  for (const char* t : {"1/2", "1", "3"}) require_pass(check_phi_brownian(nu, q(t)));
}
