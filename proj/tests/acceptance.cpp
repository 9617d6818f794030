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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ncprob/brownian.hpp"
#include "ncprob/distribution.hpp"
#include "ncprob/operator_model.hpp"
#include "ncprob/random.hpp"
#include "ncprob/verify.hpp"

using namespace ncprob;

namespace {

Rational q(const char* s) { return parse_rational(s); }

struct Outcome {
  std::size_t checked = 0;
  std::vector<std::string> problems;

  void add(const IdentityReport& r) {
    checked += r.checked;
    for (const auto& f : r.failures) problems.push_back(r.name + " @ " + f.word + ": " + f.lhs + " vs " + f.rhs);
  }
  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) problems.push_back(what);
  }
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;  // 0: no limit
  std::function<void(Outcome&)> body;
};

std::vector<Distribution> random_laws(std::uint64_t seed, int count, int k, int degree) {
  Rng rng(seed);
  std::vector<Distribution> out;
  for (int i = 0; i < count; ++i) out.push_back(random_distribution(rng, k, degree));
  return out;
}

void semigroup(Outcome& out) {
  const std::vector<std::pair<const char*, const char*>> pairs{{"1", "1"}, {"1/2", "3/2"}, {"2", "3"}, {"0", "2"}};
  for (const auto& mu : random_laws(101, 5, 2, 6)) {
    for (auto [s, t] : pairs) out.add(check_semigroup(mu, q(s), q(t)));
  }
}

void bbp_at_one(Outcome& out) {
  for (const auto& mu : random_laws(102, 5, 2, 6)) out.add(check_bbp_at_one(mu));
}

void commutation(Outcome& out) {
  const std::vector<std::pair<const char*, const char*>> pq{{"2", "3/4"}, {"3", "7/8"}, {"3/2", "1/2"}};
  for (const auto& mu : random_laws(103, 5, 2, 6)) {
    for (auto [p, qq] : pq) out.add(check_exponent_commutation(mu, q(p), q(qq)));
  }
}

void reta_identities(Outcome& out) {
  Rng rng(104);
  for (int trial = 0; trial < 3; ++trial) {
    const auto f = random_series(rng, 2, 6);
    for (const char* s : {"1", "2", "-1/2", "3/4"}) out.add(check_reta_scaled_compose(q(s), f));
    const auto rf = reta(f);
    out.add(compare_series("Reta^{-1}(g) = -Reta(-g)", reta_inverse(f), negate(reta(negate(f)))));
    out.add(compare_series("-Reta(-g) = signed sum", reta_inverse(f), reta_inverse_signed(f)));
    out.add(compare_series("Reta(-Reta f) = -f", reta(negate(rf)), negate(f)));
    out.add(compare_series("Reta(Reta^{-1} f) = f", reta(reta_inverse(f)), f));
    out.add(compare_series("Reta^{-1}(Reta f) = f", reta_inverse(rf), f));
  }
}

void ll_count(Outcome& out) {
  SuiteOptions o;
  o.n = 7;
  for (const auto& r : run_suite("lemma35", o).checks) out.add(r);
}

void brownian(Outcome& out) {
  for (const auto& nu : random_laws(106, 3, 2, 6)) {
    for (const char* t : {"1", "1/3"}) out.add(check_brownian_vs_convolution(nu, q(t)));
    out.add(check_brownian_polynomial(nu, {q("1"), q("2"), q("3"), q("5")}));
  }
}

void phi_brownian(Outcome& out) {
  for (std::uint64_t seed : {107u, 207u, 307u}) {
    for (const auto& nu : random_laws(seed, 1, 2, 4)) {
      for (const char* t : {"1/2", "1", "3"}) out.add(check_phi_brownian(nu, q(t)));
    }
  }
}

void alpha_beta(Outcome& out) {
  SuiteOptions o;
  o.n = 8;
  for (const auto& r : run_suite("alpha-beta", o).checks) out.add(r);
}

void boxtimes(Outcome& out) {
  const auto laws = random_laws(109, 6, 2, 5);
  for (std::size_t i = 0; i + 1 < laws.size(); i += 2) {
    const auto& a = laws[i];
    const auto& b = laws[i + 1];
    out.add(compare_series("mu x delta_1 = mu", mult_convolve(a, Distribution::delta1(2, 5)).moments(), a.moments()));
    for (const char* t : {"1/2", "1", "2"}) out.add(check_boxtimes_homomorphism(a, b, q(t)));
    for (const char* t : {"1/2", "2"}) {
      out.add(check_free_power_dilation(a, b, q(t)));
      out.add(check_boolean_power_dilation(a, b, q(t)));
    }
  }
}

void add_model(Outcome& out, const OperatorModelReport& r) {
  for (const auto* c : {&r.structure, &r.moments, &r.lemma, &r.vanishing}) out.add(*c);
}

void operator_model(Outcome& out) {
  const auto trivial = verify_phi_model(trivial_model_input(), 6, 1e-12);
  add_model(out, trivial);
  out.expect(trivial.max_delta <= 1e-12, "closed-form case exceeds 1e-12");
  const std::vector<std::pair<int, int>> shapes{{1, 1}, {2, 2}, {3, 2}, {4, 2}, {4, 3}};
  std::uint64_t seed = 110;
  for (auto [dim, k] : shapes) add_model(out, verify_phi_model(random_model_input(seed++, dim, k), 6, 1e-9));
}

void counts(Outcome& out) {
  const std::uint64_t catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
  const std::uint64_t motzkin[] = {1, 1, 2, 4, 9, 21, 51, 127, 323};
  for (int n = 1; n <= 10; ++n) {
    out.expect(enumerate_nc(n).size() == catalan[n], "|NC(" + std::to_string(n) + ")|");
    out.expect(enumerate_interval(n).size() == (std::uint64_t{1} << (n - 1)), "|Int(" + std::to_string(n) + ")|");
  }
  for (int n = 1; n <= 8; ++n) {
    out.expect(enumerate_nc_le2(n).size() == motzkin[n], "|NC<=2(" + std::to_string(n) + ")|");
  }
  for (int n = 1; n <= 7; ++n) {
    for (const auto& p : enumerate_nc(n)) {
      out.expect(p.block_count() + kreweras_complement(p).block_count() == static_cast<std::size_t>(n + 1),
                 "|pi| + |K(pi)| for " + p.to_string());
    }
  }
}

void cross_route(Outcome& out) {
  for (const auto& mu : random_laws(112, 5, 2, 6)) {
    for (const char* t : {"1/2", "1", "2", "3"}) out.add(check_bt_routes(mu, q(t)));
    out.add(check_boolean_routes(mu));
    out.add(check_functional_equation(mu.r_view(), mu.moments()));
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "B_s o B_t = B_{s+t} on 5 random laws, k=2, degree 6", 10, semigroup},
      {2, "R-view of B_1(mu) equals the eta-view of mu", 0, bbp_at_one},
      {3, "free/Boolean exponent commutation", 0, commutation},
      {4, "Reta scaled composition, inverse forms and round trips", 0, reta_identities},
      {5, "ll-count binomial formula vs enumeration, n <= 7", 5, ll_count},
      {6, "pairing formula vs nu boxplus gamma_t, and polynomial in t", 0, brownian},
      {7, "Phi(nu boxplus gamma_t) = B_t(Phi(nu))", 0, phi_brownian},
      {8, "alpha/beta bijection, n <= 8", 10, alpha_beta},
      {9, "boxtimes identity, homomorphism and power dilations", 0, boxtimes},
      {10, "operator model against exact Phi", 30, operator_model},
      {11, "Catalan, interval, Motzkin and Kreweras counts", 0, counts},
      {12, "cross-route consistency", 0, cross_route},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome out;
    std::string error;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(out);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool slow = c.limit_seconds > 0 && seconds > c.limit_seconds;
    const bool ok = error.empty() && out.problems.empty() && out.checked > 0 && !slow;
    if (!ok) ++failed;
    std::printf("criterion %2d: %s  (%.2f s, %zu checks)  %s\n", c.id, ok ? "PASS" : "FAIL", seconds, out.checked,
                c.title);
    if (!error.empty()) std::printf("    error: %s\n", error.c_str());
    if (slow) std::printf("    over the %.0f s limit\n", c.limit_seconds);
    for (std::size_t i = 0; i < out.problems.size() && i < 10; ++i) std::printf("    %s\n", out.problems[i].c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
