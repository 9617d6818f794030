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

#include <span>
#include <vector>

#include "ncprob/identity_report.hpp"
#include "ncprob/partition.hpp"
#include "ncprob/series.hpp"

namespace ncprob {

/// Families of partitions of {1..n} that partition sums range over.
enum class PartitionFamily {
  NonCrossing,     // NC(n)
  BelowOneCoarse,  // pi in NC(n) with pi << 1_n
  Interval,        // Int(n)
  NonCrossingLe2,  // NC_{<=2}(n)
};

struct CachedPartition {
  SetPartition partition;
  std::vector<SetPartition::Block> ranks;       // 0-based positions
  std::vector<SetPartition::Block> complement;  // Kreweras complement ranks; NonCrossing only
};

/// Memoized partition list, shared across threads. Entries are never evicted.
const std::vector<CachedPartition>& partition_family(PartitionFamily family, int n);

namespace detail {

// Product over blocks of the coefficient of w restricted to the block.
// Positions are 0-based; callers guarantee every block fits the degree.
template <class C>
C ranked_coefficient(const Word& w, const std::vector<SetPartition::Block>& blocks, const BasicSeries<C>& f) {
  C out(1);
  for (const auto& block : blocks) {
    const C* c = f.find(w.restrict_to(block));
    if (!c) return C{};
    out *= *c;
  }
  return out;
}

}  // namespace detail

/// Cf_{w;p}(f): product over blocks B of p of Cf_{w|B}(f). The ground set of p
/// is identified with the positions of w in increasing order.
template <class C>
C generalized_coefficient(const Word& w, const SetPartition& p, const BasicSeries<C>& f) {
  if (p.size() != w.size()) {
    throw PreconditionError("partition " + p.to_string() + " does not match word length " + std::to_string(w.size()));
  }
  f.coefficient(w);  // validates letters and degree
  return detail::ranked_coefficient(w, p.rank_blocks(), f);
}

/// Cf_w(Reta f) = sum over pi << 1_n of Cf_{w;pi}(f).
TruncatedSeries reta(const TruncatedSeries& f);
/// Cf_{w;rho}(Reta f) computed directly as the sum over pi << rho.
Rational reta_pi(const Word& w, const SetPartition& rho, const TruncatedSeries& f);
/// -Reta(-g).
TruncatedSeries reta_inverse(const TruncatedSeries& g);
/// The alternating form: sum over pi << 1_n of (-1)^{1+|pi|} Cf_{w;pi}(g).
TruncatedSeries reta_inverse_signed(const TruncatedSeries& g);

/// Reta(s Reta(f)) against s/(1+s) Reta((1+s) f). Throws DomainError at s = -1.
IdentityReport check_reta_scaled_compose(const Rational& s, const TruncatedSeries& f);

/// Moment-cumulant formula over NC(n).
TruncatedSeries moments_from_free_cumulants(const TruncatedSeries& r);
/// Inverse, by subtracting the contributions of all pi != 1_n degree by degree.
TruncatedSeries free_cumulants_from_moments(const TruncatedSeries& m);

/// Moment-Boolean cumulant formula over Int(n).
TruncatedSeries moments_from_boolean_cumulants(const TruncatedSeries& b);
TruncatedSeries boolean_cumulants_from_moments(const TruncatedSeries& m);

/// R(z_1(1+M), ..., z_k(1+M)), truncated at the common degree.
TruncatedSeries substitute_functional(const TruncatedSeries& r, const TruncatedSeries& m);
/// R(z(1+M)) = M.
IdentityReport check_functional_equation(const TruncatedSeries& r, const TruncatedSeries& m);

}  // namespace ncprob
