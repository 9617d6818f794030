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

#include "ncprob/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "ncprob/brownian.hpp"
#include "ncprob/distribution.hpp"
#include "ncprob/operator_model.hpp"
#include "ncprob/random.hpp"

namespace ncprob {

namespace {

using Suite = std::function<void(const SuiteOptions&, Rng&, std::vector<IdentityReport>&)>;

std::vector<Rational> params_or(const SuiteOptions& o, std::initializer_list<const char*> defaults) {
  if (!o.t.empty()) return o.t;
  std::vector<Rational> out;
  for (const char* d : defaults) out.push_back(parse_rational(d));
  return out;
}

IdentityReport tagged(IdentityReport r, int trial) {
  r.name = "trial " + std::to_string(trial) + ": " + r.name;
  return r;
}

void semigroup(const SuiteOptions& o, Rng& rng, std::vector<IdentityReport>& out) {
  const std::vector<std::pair<const char*, const char*>> pairs{{"1", "1"}, {"1/2", "3/2"}, {"2", "3"}, {"0", "2"}};
  for (int trial = 0; trial < o.trials; ++trial) {
    const Distribution mu = random_distribution(rng, o.k, o.degree);
    for (auto [s, t] : pairs) out.push_back(tagged(check_semigroup(mu, parse_rational(s), parse_rational(t)), trial));
    out.push_back(tagged(check_bbp_at_one(mu), trial));
  }
}

void commutation(const SuiteOptions& o, Rng& rng, std::vector<IdentityReport>& out) {
  const std::vector<std::pair<const char*, const char*>> pq{{"2", "3/4"}, {"3", "7/8"}, {"3/2", "1/2"}};
  for (int trial = 0; trial < o.trials; ++trial) {
    const Distribution mu = random_distribution(rng, o.k, o.degree);
    for (auto [p, q] : pq) {
      out.push_back(tagged(check_exponent_commutation(mu, parse_rational(p), parse_rational(q)), trial));
    }
  }
}

void reta_iteration(const SuiteOptions& o, Rng& rng, std::vector<IdentityReport>& out) {
  const auto s_values = params_or(o, {"1", "2", "-1/2", "3/4"});
  for (int trial = 0; trial < o.trials; ++trial) {
    const TruncatedSeries f = random_series(rng, o.k, o.degree);
    for (const auto& s : s_values) out.push_back(tagged(check_reta_scaled_compose(s, f), trial));
    const TruncatedSeries rf = reta(f);
    out.push_back(tagged(compare_series("Reta(-Reta f) = -f", reta(negate(rf)), negate(f)), trial));
    out.push_back(tagged(compare_series("Reta^{-1}(g) = -Reta(-g) = signed sum", reta_inverse(f),
                                        reta_inverse_signed(f)),
                         trial));
    out.push_back(tagged(compare_series("Reta(Reta^{-1} f) = f", reta(reta_inverse(f)), f), trial));
    out.push_back(tagged(compare_series("Reta^{-1}(Reta f) = f", reta_inverse(rf), f), trial));
  }
}

void lemma35(const SuiteOptions& o, Rng&, std::vector<IdentityReport>& out) {
  IdentityReport report;
  report.name = "card{rho >> pi, |rho| = p} = binomial(|pi|-1, p-1)";
  for (int m = 1; m <= o.n; ++m) {
    for (const auto& cached : partition_family(PartitionFamily::BelowOneCoarse, m)) {
      const auto& pi = cached.partition;
      for (int p = 1; p <= static_cast<int>(pi.block_count()); ++p) {
        ++report.checked;
        const auto formula = count_ll_above(pi, p);
        const auto brute = count_ll_above_enumerated(pi, p);
        if (formula != brute) {
          report.fail(pi.to_string() + " p=" + std::to_string(p), std::to_string(formula), std::to_string(brute));
        }
      }
    }
  }
  out.push_back(std::move(report));
}

void boxtimes_homo(const SuiteOptions& o, Rng& rng, std::vector<IdentityReport>& out) {
  const auto ts = params_or(o, {"1/2", "1", "2"});
  for (int trial = 0; trial < o.trials; ++trial) {
    const Distribution a = random_distribution(rng, o.k, o.degree);
    const Distribution b = random_distribution(rng, o.k, o.degree);
    out.push_back(tagged(compare_series("mu x delta_1 = mu", mult_convolve(a, Distribution::delta1(o.k, o.degree)).moments(),
                                        a.moments()),
                         trial));
    for (const auto& t : ts) out.push_back(tagged(check_boxtimes_homomorphism(a, b, t), trial));
  }
}

void power_dilation(const SuiteOptions& o, Rng& rng, std::vector<IdentityReport>& out) {
  const auto ts = params_or(o, {"1/2", "2"});
  for (int trial = 0; trial < o.trials; ++trial) {
    const Distribution a = random_distribution(rng, o.k, o.degree);
    const Distribution b = random_distribution(rng, o.k, o.degree);
    for (const auto& t : ts) {
      out.push_back(tagged(check_free_power_dilation(a, b, t), trial));
      out.push_back(tagged(check_boolean_power_dilation(a, b, t), trial));
    }
  }
}

void brownian(const SuiteOptions& o, Rng& rng, std::vector<IdentityReport>& out) {
  const auto ts = params_or(o, {"1", "1/3"});
  std::vector<Rational> points;
  for (int p : {1, 2, 3, 5, 7, 11, 13, 17}) {
    if (points.size() >= std::max<std::size_t>(4, static_cast<std::size_t>(o.degree) / 2 + 1)) break;
    points.emplace_back(p);
  }
  for (int trial = 0; trial < o.trials; ++trial) {
    const Distribution nu = random_distribution(rng, o.k, o.degree);
    for (const auto& t : ts) out.push_back(tagged(check_brownian_vs_convolution(nu, t), trial));
    out.push_back(tagged(check_brownian_polynomial(nu, points), trial));
  }
}

void phi_brownian(const SuiteOptions& o, Rng& rng, std::vector<IdentityReport>& out) {
  const auto ts = params_or(o, {"1/2", "1", "3"});
  for (int trial = 0; trial < o.trials; ++trial) {
    const Distribution nu = random_distribution(rng, o.k, o.degree);
    for (const auto& t : ts) out.push_back(tagged(check_phi_brownian(nu, t), trial));
  }
}

void operator_model(const SuiteOptions& o, Rng& rng, std::vector<IdentityReport>& out) {
  auto add = [&](const OperatorModelReport& r, const std::string& label) {
    for (const auto* c : {&r.structure, &r.moments, &r.lemma, &r.vanishing}) {
      IdentityReport copy = *c;
      copy.name = label + ": " + copy.name;
      out.push_back(std::move(copy));
    }
  };
  add(verify_phi_model(trivial_model_input(), o.degree, std::min(o.tolerance, 1e-12)), "closed form d=1");
  for (int trial = 0; trial < o.trials; ++trial) {
    const std::uint64_t seed = rng();
    add(verify_phi_model(random_model_input(seed, o.dim, o.k), o.degree, o.tolerance),
        "seed " + std::to_string(seed));
  }
}

void alpha_beta(const SuiteOptions& o, Rng&, std::vector<IdentityReport>& out) {
  IdentityReport ba;
  ba.name = "beta(alpha(rho)) = rho on NC_{<=2}(n)";
  IdentityReport ab;
  ab.name = "alpha(beta(pi)) = pi on singleton-free pi with 0 ~ n+1";
  for (int m = 1; m <= o.n; ++m) {
    for (const auto& cached : partition_family(PartitionFamily::NonCrossingLe2, m)) {
      const PartialPairing rho(cached.partition);
      const SetPartition image = assign_singletons(rho);
      ++ba.checked;
      if (!is_singleton_free_with_outer_block(image)) {
        ba.fail(cached.partition.to_string(), image.to_string(), "outside the target set");
        continue;
      }
      const PartialPairing back = extract_pairing(image);
      if (!(back == rho)) ba.fail(cached.partition.to_string(), back.partition().to_string(), cached.partition.to_string());
    }
    for (const auto& pi : enumerate_nc(GroundSet::range(0, m + 1))) {
      if (!is_singleton_free_with_outer_block(pi)) continue;
      ++ab.checked;
      const SetPartition back = assign_singletons(extract_pairing(pi));
      if (!(back == pi)) ab.fail(pi.to_string(), back.to_string(), pi.to_string());
    }
  }
  out.push_back(std::move(ba));
  out.push_back(std::move(ab));
}

void cross_route(const SuiteOptions& o, Rng& rng, std::vector<IdentityReport>& out) {
  const auto ts = params_or(o, {"1/2", "1", "2", "3"});
  for (int trial = 0; trial < o.trials; ++trial) {
    const Distribution mu = random_distribution(rng, o.k, o.degree);
    for (const auto& t : ts) out.push_back(tagged(check_bt_routes(mu, t), trial));
    out.push_back(tagged(check_boolean_routes(mu), trial));
    out.push_back(tagged(check_functional_equation(mu.r_view(), mu.moments()), trial));
    out.push_back(tagged(compare_series("Reta(R) = eta", reta(mu.r_view()), mu.eta_view()), trial));
  }
}

const std::map<std::string, Suite, std::less<>>& registry() {
  static const std::map<std::string, Suite, std::less<>> suites{
      {"semigroup", semigroup},         {"commutation", commutation},       {"reta-iteration", reta_iteration},
      {"lemma35", lemma35},             {"boxtimes-homo", boxtimes_homo},   {"power-dilation", power_dilation},
      {"brownian", brownian},           {"phi-brownian", phi_brownian},     {"operator-model", operator_model},
      {"alpha-beta", alpha_beta},       {"cross-route", cross_route},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"semigroup",     "commutation",    "reta-iteration", "lemma35",
                                              "boxtimes-homo", "power-dilation", "brownian",       "phi-brownian",
                                              "operator-model", "alpha-beta",    "cross-route"};
  return names;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
  const auto& suites = registry();
  auto it = suites.find(name);
  if (it == suites.end()) throw PreconditionError("unknown verification suite \"" + std::string(name) + "\"");
  if (options.k < 1 || options.degree < 1 || options.trials < 0 || options.n < 1) {
    throw PreconditionError("suite options need k >= 1, degree >= 1, trials >= 0, n >= 1");
  }
  SuiteReport report{std::string(name), options, {}};
  Rng rng(options.seed);
  it->second(options, rng, report.checks);
  return report;
}

}  // namespace ncprob
