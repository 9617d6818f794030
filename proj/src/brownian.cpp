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

#include "ncprob/brownian.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace ncprob {

namespace {

struct PairingData {
  SetPartition rho;
  SetPartition completion;
  std::vector<std::pair<int, int>> pairs;       // 0-based
  std::vector<int> singles;                     // 0-based positions of S(rho)
  std::vector<SetPartition::Block> hat_ranks;   // rho-hat as ranks within `singles`
};

std::vector<PairingData> build_pairings(int n) {
  std::vector<PairingData> out;
  for (const auto& cached : partition_family(PartitionFamily::NonCrossingLe2, n)) {
    const PartialPairing rho(cached.partition);
    PairingData data{cached.partition, {}, {}, {}, {}};
    for (const auto& b : cached.partition.blocks()) {
      if (b.size() == 2) data.pairs.emplace_back(b[0] - 1, b[1] - 1);
    }
    const GroundSet s = singletons(rho);
    for (int x : s.elements()) data.singles.push_back(x - 1);
    if (!s.empty()) {
      const GroundSet d = doubletons(rho);
      // Nothing separates singletons when there are no doubletons.
      data.completion = d.empty() ? SetPartition::coarsest(s)
                                  : maximal_completion(restrict_partition(cached.partition, d), s);
      data.hat_ranks = data.completion.rank_blocks();
    }
    out.push_back(std::move(data));
  }
  return out;
}

const std::vector<PairingData>& pairings(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const std::vector<PairingData>>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  auto built = std::make_unique<const std::vector<PairingData>>(build_pairings(n));
  std::lock_guard lock(mutex);
  return *cache.try_emplace(n, std::move(built)).first->second;
}

bool pairs_match(const PairingData& data, const Word& w) {
  for (auto [p, q] : data.pairs) {
    if (w[static_cast<std::size_t>(p)] != w[static_cast<std::size_t>(q)]) return false;
  }
  return true;
}

Rational nu_factor(const PairingData& data, const TruncatedSeries& moments, const Word& w) {
  if (data.singles.empty()) return 1;
  return detail::ranked_coefficient(w.restrict_to(data.singles), data.hat_ranks, moments);
}

void check_word(const Distribution& nu, const Word& w) {
  if (w.empty()) throw PreconditionError("Brownian moments need a nonempty word");
  nu.moments().coefficient(w);
}

}  // namespace

bool compatible(const PartialPairing& rho, const Word& w) {
  if (rho.ground().size() != w.size()) {
    throw MismatchError("pairing " + rho.partition().to_string() + " does not match word length " +
                        std::to_string(w.size()));
  }
  const auto& ground = rho.ground();
  for (const auto& b : rho.partition().blocks()) {
    if (b.size() == 2 && w[ground.rank(b[0])] != w[ground.rank(b[1])]) return false;
  }
  return true;
}

Rational brownian_moment(const Distribution& nu, const Rational& t, const Word& w, bool skip_incompatible) {
  if (sgn(t) <= 0) throw DomainError("Brownian time t must be > 0, got " + format_rational(t));
  check_word(nu, w);
  Rational sum = 0;
  for (const auto& data : pairings(static_cast<int>(w.size()))) {
    const bool ok = pairs_match(data, w);
    if (!ok && skip_incompatible) continue;
    Rational term = pow(t, static_cast<int>(data.pairs.size())) * nu_factor(data, nu.moments(), w);
    if (ok) sum += term;  // the delta factor is 0 otherwise
  }
  return sum;
}

std::vector<BrownianTerm> brownian_terms(const Distribution& nu, const Rational& t, const Word& w) {
  if (sgn(t) <= 0) throw DomainError("Brownian time t must be > 0, got " + format_rational(t));
  check_word(nu, w);
  std::vector<BrownianTerm> out;
  for (const auto& data : pairings(static_cast<int>(w.size()))) {
    BrownianTerm term;
    term.rho = data.rho;
    term.completion = data.completion;
    term.doubletons = static_cast<int>(data.pairs.size());
    term.compatible = pairs_match(data, w);
    term.nu_factor = nu_factor(data, nu.moments(), w);
    term.value = term.compatible ? Rational(pow(t, term.doubletons) * term.nu_factor) : Rational(0);
    out.push_back(std::move(term));
  }
  return out;
}

std::vector<Rational> brownian_polynomial(const Distribution& nu, const Word& w) {
  check_word(nu, w);
  std::vector<Rational> coeffs(w.size() / 2 + 1);
  for (const auto& data : pairings(static_cast<int>(w.size()))) {
    if (!pairs_match(data, w)) continue;
    coeffs[data.pairs.size()] += nu_factor(data, nu.moments(), w);
  }
  return coeffs;
}

Distribution brownian_moments(const Distribution& nu, const Rational& t) {
  TruncatedSeries out(nu.alphabet_size(), nu.degree());
  for (int n = 1; n <= nu.degree(); ++n) {
    for (const auto& w : all_words(nu.alphabet_size(), n)) out.set(w, brownian_moment(nu, t, w));
  }
  return Distribution(std::move(out));
}

IdentityReport check_brownian_vs_convolution(const Distribution& nu, const Rational& t) {
  const Distribution conv = free_convolve(nu, semicircular(t, nu.alphabet_size(), nu.degree()));
  return compare_series("pairing formula = nu + gamma_t, t = " + format_rational(t), brownian_moments(nu, t).moments(),
                        conv.moments());
}

namespace {

// Coefficients of the polynomial of degree < points.size() through (x_j, y_j).
std::vector<Rational> interpolate(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  const std::size_t m = x.size();
  std::vector<Rational> out(m);
  for (std::size_t j = 0; j < m; ++j) {
    // Lagrange basis polynomial for node j, built by multiplying (t - x_i).
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == j) continue;
      std::vector<Rational> next(basis.size() + 1);
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d];
        next[d] -= basis[d] * x[i];
      }
      basis = std::move(next);
      denom *= x[j] - x[i];
    }
    const Rational factor = y[j] / denom;
    for (std::size_t d = 0; d < basis.size(); ++d) out[d] += factor * basis[d];
  }
  return out;
}

}  // namespace

IdentityReport check_brownian_polynomial(const Distribution& nu, const std::vector<Rational>& points) {
  const std::size_t needed = static_cast<std::size_t>(nu.degree()) / 2 + 1;
  if (points.size() < needed) {
    throw PreconditionError("polynomial check at degree " + std::to_string(nu.degree()) + " needs " +
                            std::to_string(needed) + " points");
  }
  std::vector<Distribution> conv;
  for (const auto& t : points) conv.push_back(free_convolve(nu, semicircular(t, nu.alphabet_size(), nu.degree())));
  IdentityReport report;
  report.name = "pairing formula is the interpolated polynomial in t";
  for (int n = 1; n <= nu.degree(); ++n) {
    for (const auto& w : all_words(nu.alphabet_size(), n)) {
      std::vector<Rational> values;
      for (const auto& c : conv) values.push_back(c.moment(w));
      auto fitted = interpolate(points, values);
      auto direct = brownian_polynomial(nu, w);
      direct.resize(fitted.size());
      ++report.checked;
      for (std::size_t d = 0; d < fitted.size(); ++d) {
        if (fitted[d] != direct[d]) {
          report.fail(w.to_string() + " [t^" + std::to_string(d) + "]", format_rational(direct[d]),
                      format_rational(fitted[d]));
        }
      }
    }
  }
  return report;
}

}  // namespace ncprob
