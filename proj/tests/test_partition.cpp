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

#include <set>

#include "ncprob/error.hpp"
#include "ncprob/partition.hpp"
#include "oracles.hpp"

using namespace ncprob;

TEST_CASE("partition construction and parsing") {
  const auto p = SetPartition::parse("{1,9}{2,8}{3,4,7}{5,6}");
  CHECK(p.block_count() == 4);
  CHECK(p.size() == 9);
  CHECK(p.same_block(3, 7));
  CHECK_FALSE(p.same_block(1, 2));
  CHECK(p.to_string() == "{1,9}{2,8}{3,4,7}{5,6}");
  CHECK(SetPartition::parse("{2,1}{3}") == SetPartition({{3}, {1, 2}}));
  CHECK_THROWS_AS(SetPartition::parse("{1,2}{2}"), PreconditionError);
  CHECK_THROWS_AS(SetPartition::parse("{1,2"), ParseError);
  CHECK_THROWS_AS(SetPartition::parse("1,2"), ParseError);
  CHECK_THROWS_AS(SetPartition({{1, 2}, {2, 3}}), PreconditionError);
  CHECK_THROWS_AS(SetPartition(GroundSet{1, 2, 3}, {{1, 2}}), PreconditionError);
  CHECK_THROWS_AS(SetPartition(std::vector<SetPartition::Block>{{1}, {}}), PreconditionError);
}

TEST_CASE("non-crossing enumeration matches brute force") {
  for (int n = 1; n <= 7; ++n) {
    CAPTURE(n);
    const auto fast = enumerate_nc(n);
    CHECK(fast.size() == catalan_number(n));
    CHECK(fast == oracle::brute_nc(oracle::range(1, n)));
    for (const auto& p : fast) CHECK(is_noncrossing(p));
  }
  CHECK(enumerate_nc(GroundSet{2, 5, 9}).size() == 5);
}

TEST_CASE("catalan, interval and NC<=2 counts") {
  const std::uint64_t catalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
  for (int n = 1; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(catalan_number(n) == catalan[n]);
    CHECK(enumerate_nc(n).size() == catalan[n]);
    CHECK(enumerate_interval(n).size() == (std::uint64_t{1} << (n - 1)));
  }
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    const auto le2 = enumerate_nc_le2(n);
    CHECK(le2.size() == oracle::motzkin(n));
    for (const auto& p : le2) {
      for (const auto& b : p.blocks()) CHECK(b.size() <= 2);
    }
  }
}

TEST_CASE("crossing detection agrees with the four-point definition") {
  for (const auto& blocks : oracle::all_set_partitions(oracle::range(1, 6))) {
    CHECK(is_noncrossing(SetPartition(blocks)) == !oracle::crosses(blocks));
  }
  CHECK_FALSE(is_noncrossing(SetPartition::parse("{1,3}{2,4}")));
  CHECK(is_noncrossing(SetPartition::parse("{1,4}{2,3}")));
}

TEST_CASE("interval partitions are non-crossing and contiguous") {
  for (const auto& p : enumerate_interval(6)) {
    CHECK(is_noncrossing(p));
    for (const auto& b : p.blocks()) CHECK(b.back() - b.front() + 1 == static_cast<int>(b.size()));
  }
}

TEST_CASE("refinement and the ll order") {
  const auto fine = SetPartition::finest(GroundSet::range(1, 4));
  const auto one = SetPartition::coarsest(GroundSet::range(1, 4));
  CHECK(leq_refinement(fine, one));
  CHECK_FALSE(leq_refinement(one, fine));
  // {1,4}{2,3} << 1_4; {1,2}{3,4} is not.
  CHECK(ll_order(SetPartition::parse("{1,4}{2,3}"), one));
  CHECK_FALSE(ll_order(SetPartition::parse("{1,2}{3,4}"), one));
  CHECK(ll_order(one, one));
  CHECK(ll_order(SetPartition::parse("{1,2}{3}"), SetPartition::parse("{1,2}{3}")));
  // pi << sigma: pi <= sigma and each sigma-block has its min and max in one pi-block
  for (const auto& pi : enumerate_nc(5)) {
    for (const auto& sigma : enumerate_nc(5)) {
      bool expected = leq_refinement(pi, sigma);
      if (expected) {
        for (const auto& s : sigma.blocks()) {
          const auto a = pi.block_index_of(s.front());
          expected = expected && a == pi.block_index_of(s.back());
        }
      }
      CHECK(ll_order(pi, sigma) == expected);
    }
  }
}

TEST_CASE("ll-count formula against enumeration") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& pi : enumerate_nc(n)) {
      if (!ll_order(pi, SetPartition::coarsest(GroundSet::range(1, n)))) continue;
      for (int p = 1; p <= static_cast<int>(pi.block_count()); ++p) {
        CHECK(count_ll_above(pi, p) == binomial(static_cast<int>(pi.block_count()) - 1, p - 1));
        CHECK(count_ll_above(pi, p) == count_ll_above_enumerated(pi, p));
      }
    }
  }
  CHECK_THROWS_AS(count_ll_above(SetPartition::parse("{1,2}{3,4}"), 1), PreconditionError);
}

TEST_CASE("restriction and disjoint union") {
  const auto p = SetPartition::parse("{1,5}{2,3}{4}");
  const auto r = restrict_partition(p, GroundSet{1, 3, 4});
  CHECK(r == SetPartition(GroundSet{1, 3, 4}, {{1}, {3}, {4}}));
  const auto u = disjoint_union(SetPartition(GroundSet{1, 4}, {{1, 4}}), SetPartition(GroundSet{2, 3}, {{2}, {3}}));
  CHECK(u == SetPartition::parse("{1,4}{2}{3}"));
  CHECK_THROWS_AS(disjoint_union(SetPartition(GroundSet{1}, {{1}}), SetPartition(GroundSet{1}, {{1}})), MismatchError);
}

TEST_CASE("maximal completion matches brute force") {
  // every NC pi1 on a subset L1 of {1..n}, completed on the complement
  for (int n = 1; n <= 6; ++n) {
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
      std::vector<int> l1;
      std::vector<int> l2;
      for (int i = 0; i < n; ++i) ((mask >> i) & 1u ? l1 : l2).push_back(i + 1);
      for (const auto& p1 : enumerate_nc(GroundSet(l1))) {
        const auto expected = oracle::brute_completion(p1, l2);
        REQUIRE(expected.has_value());
        CAPTURE(p1.to_string());
        CHECK(maximal_completion(p1, GroundSet(l2)) == *expected);
      }
    }
  }
}

TEST_CASE("kreweras complement") {
  for (int n = 1; n <= 7; ++n) {
    std::set<SetPartition> images;
    for (const auto& p : enumerate_nc(n)) {
      const auto k = kreweras_complement(p);
      CHECK(is_noncrossing(k));
      CHECK(p.block_count() + k.block_count() == static_cast<std::size_t>(n + 1));
      images.insert(k);
    }
    CHECK(images.size() == catalan_number(n));  // a bijection
  }
  const auto one = SetPartition::coarsest(GroundSet::range(1, 4));
  CHECK(kreweras_complement(one) == SetPartition::finest(GroundSet::range(1, 4)));
  CHECK(kreweras_complement(SetPartition::finest(GroundSet::range(1, 4))) == one);
  CHECK(kreweras_complement(SetPartition::parse("{1,2}{3}")) == SetPartition::parse("{1}{2,3}"));
}

TEST_CASE("pairings and the singleton assignment") {
  const PartialPairing rho(SetPartition::parse("{1,4}{2}{3}{5}"));
  CHECK(doubletons(rho) == GroundSet{1, 4});
  CHECK(singletons(rho) == GroundSet{2, 3, 5});
  const auto pi = assign_singletons(rho);
  CHECK(pi == SetPartition(GroundSet::range(0, 6), {{0, 5, 6}, {1, 2, 3, 4}}));
  CHECK(is_singleton_free_with_outer_block(pi));
  CHECK(extract_pairing(pi) == rho);
  CHECK_THROWS_AS(PartialPairing(SetPartition::parse("{1,2,3}")), PreconditionError);
  CHECK_FALSE(is_singleton_free_with_outer_block(SetPartition(GroundSet::range(0, 3), {{0, 3}, {1}, {2}})));
}

TEST_CASE("alpha and beta are inverse bijections") {
  for (int n = 1; n <= 8; ++n) {
    std::size_t targets = 0;
    for (const auto& pi : enumerate_nc(GroundSet::range(0, n + 1))) {
      if (!is_singleton_free_with_outer_block(pi)) continue;
      ++targets;
      CHECK(assign_singletons(extract_pairing(pi)) == pi);
    }
    const auto le2 = enumerate_nc_le2(n);
    CHECK(targets == le2.size());
    for (const auto& p : le2) {
      const PartialPairing rho(p);
      CHECK(extract_pairing(assign_singletons(rho)) == rho);
    }
  }
}
