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

#include "ncprob/transforms.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace ncprob {

namespace {

std::vector<CachedPartition> build_family(PartitionFamily family, int n) {
  std::vector<SetPartition> parts;
  switch (family) {
    case PartitionFamily::NonCrossing:
      parts = enumerate_nc(n);
      break;
    case PartitionFamily::BelowOneCoarse: {
      const auto one = SetPartition::coarsest(GroundSet::range(1, n));
      for (auto& p : enumerate_nc(n)) {
        if (ll_order(p, one)) parts.push_back(std::move(p));
      }
      break;
    }
    case PartitionFamily::Interval:
      parts = enumerate_interval(n);
      break;
    case PartitionFamily::NonCrossingLe2:
      parts = enumerate_nc_le2(n);
      break;
  }
  std::vector<CachedPartition> out;
  out.reserve(parts.size());
  for (auto& p : parts) {
    CachedPartition entry{p, p.rank_blocks(), {}};
    if (family == PartitionFamily::NonCrossing) entry.complement = kreweras_complement(p).rank_blocks();
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace

const std::vector<CachedPartition>& partition_family(PartitionFamily family, int n) {
  static std::mutex mutex;
  static std::map<std::pair<PartitionFamily, int>, std::unique_ptr<const std::vector<CachedPartition>>> cache;
  const auto key = std::make_pair(family, n);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  // Built outside the lock; a concurrent duplicate build is discarded.
  auto built = std::make_unique<const std::vector<CachedPartition>>(build_family(family, n));
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace(key, std::move(built));
  return *it->second;
}

namespace {

// Cf_w(result) = sum over the family at |w| of Cf_{w;pi}(f). With `alternate`,
// terms with an even number of blocks are subtracted.
TruncatedSeries partition_sum(const TruncatedSeries& f, PartitionFamily family, bool alternate) {
  TruncatedSeries out(f.alphabet_size(), f.degree());
  for (int n = 1; n <= f.degree(); ++n) {
    const auto& parts = partition_family(family, n);
    for (const auto& w : all_words(f.alphabet_size(), n)) {
      Rational sum = 0;
      for (const auto& p : parts) {
        Rational term = detail::ranked_coefficient(w, p.ranks, f);
        if (is_zero(term)) continue;
        if (alternate && p.ranks.size() % 2 == 0) {
          sum -= term;
        } else {
          sum += term;
        }
      }
      out.set(w, std::move(sum));
    }
  }
  return out;
}

// Inverts partition_sum degree by degree: every partition other than 1_n only
// touches shorter words, which are already known.
TruncatedSeries partition_sum_inverse(const TruncatedSeries& m, PartitionFamily family) {
  TruncatedSeries out(m.alphabet_size(), m.degree());
  for (int n = 1; n <= m.degree(); ++n) {
    const auto& parts = partition_family(family, n);
    for (const auto& w : all_words(m.alphabet_size(), n)) {
      const Rational* mw = m.find(w);
      Rational value = mw ? *mw : Rational(0);
      for (const auto& p : parts) {
        if (p.ranks.size() == 1) continue;
        value -= detail::ranked_coefficient(w, p.ranks, out);
      }
      out.set(w, std::move(value));
    }
  }
  return out;
}

}  // namespace

TruncatedSeries reta(const TruncatedSeries& f) { return partition_sum(f, PartitionFamily::BelowOneCoarse, false); }

Rational reta_pi(const Word& w, const SetPartition& rho, const TruncatedSeries& f) {
  const int n = static_cast<int>(w.size());
  if (!(rho.ground() == GroundSet::range(1, n))) {
    throw PreconditionError("partition " + rho.to_string() + " is not a partition of {1.." + std::to_string(n) + "}");
  }
  if (!is_noncrossing(rho)) throw PreconditionError("partition " + rho.to_string() + " is not non-crossing");
  f.coefficient(w);
  Rational sum = 0;
  for (const auto& p : partition_family(PartitionFamily::NonCrossing, n)) {
    if (ll_order(p.partition, rho)) sum += detail::ranked_coefficient(w, p.ranks, f);
  }
  return sum;
}

TruncatedSeries reta_inverse(const TruncatedSeries& g) { return negate(reta(negate(g))); }

TruncatedSeries reta_inverse_signed(const TruncatedSeries& g) {
  return partition_sum(g, PartitionFamily::BelowOneCoarse, true);
}

IdentityReport check_reta_scaled_compose(const Rational& s, const TruncatedSeries& f) {
  if (s == -1) throw DomainError("s = -1 is excluded; use Reta(-Reta(f)) = -f instead");
  const Rational one_plus_s = 1 + s;
  const TruncatedSeries lhs = reta(scale(s, reta(f)));
  const TruncatedSeries rhs = scale(Rational(s / one_plus_s), reta(scale(one_plus_s, f)));
  return compare_series("Reta(s Reta f) = s/(1+s) Reta((1+s) f), s = " + format_rational(s), lhs, rhs);
}

TruncatedSeries moments_from_free_cumulants(const TruncatedSeries& r) {
  return partition_sum(r, PartitionFamily::NonCrossing, false);
}

TruncatedSeries free_cumulants_from_moments(const TruncatedSeries& m) {
  return partition_sum_inverse(m, PartitionFamily::NonCrossing);
}

TruncatedSeries moments_from_boolean_cumulants(const TruncatedSeries& b) {
  return partition_sum(b, PartitionFamily::Interval, false);
}

TruncatedSeries boolean_cumulants_from_moments(const TruncatedSeries& m) {
  return partition_sum_inverse(m, PartitionFamily::Interval);
}

namespace {

// S_u = sum_i ( r_{ui} h_i + h_i S_{ui} ); the full substitution is S_empty.
TruncatedSeries substitute_tail(const TruncatedSeries& r, const std::vector<TruncatedSeries>& h, const Word& u,
                                int degree) {
  TruncatedSeries out(r.alphabet_size(), degree);
  if (static_cast<int>(u.size()) >= degree) return out;
  for (int i = 1; i <= r.alphabet_size(); ++i) {
    const Word ui = u.concat(Word{i});
    if (const Rational* c = r.find(ui)) out = out + scale(*c, h[static_cast<std::size_t>(i - 1)]);
    const TruncatedSeries tail = substitute_tail(r, h, ui, degree);
    if (!tail.is_zero()) out = out + h[static_cast<std::size_t>(i - 1)] * tail;
  }
  return out;
}

}  // namespace

TruncatedSeries substitute_functional(const TruncatedSeries& r, const TruncatedSeries& m) {
  detail::require_same_alphabet(r, m);
  const int degree = std::min(r.degree(), m.degree());
  const TruncatedSeries mt = truncate(m, degree);
  std::vector<TruncatedSeries> h;
  for (int i = 1; i <= r.alphabet_size(); ++i) {
    const auto z = TruncatedSeries::variable(r.alphabet_size(), degree, i);
    h.push_back(z + z * mt);
  }
  return substitute_tail(r, h, Word{}, degree);
}

IdentityReport check_functional_equation(const TruncatedSeries& r, const TruncatedSeries& m) {
  return compare_series("R(z(1+M)) = M", substitute_functional(r, m), m);
}

}  // namespace ncprob
