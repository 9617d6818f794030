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

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ncprob {

/// A strictly increasing finite set of integers with the inherited total order.
class GroundSet {
 public:
  GroundSet() = default;
  GroundSet(std::initializer_list<int> elements);
  explicit GroundSet(std::vector<int> elements);

  /// {first, first+1, ..., last}; empty when last < first.
  static GroundSet range(int first, int last);

  std::span<const int> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  int operator[](std::size_t i) const { return elements_[i]; }
  bool contains(int x) const;
  /// 0-based rank of x in the set; throws if absent.
  std::size_t rank(int x) const;

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  std::vector<int> elements_;
};

/// A partition of a ground set, in canonical form: each block sorted, blocks
/// ordered by their minimum. Equality is structural.
class SetPartition {
 public:
  using Block = std::vector<int>;

  SetPartition() = default;
  /// Validates that the blocks are nonempty, disjoint and cover `ground`.
  SetPartition(GroundSet ground, std::vector<Block> blocks);
  /// Ground set is the union of the blocks.
  explicit SetPartition(std::vector<Block> blocks);

  /// 0_M: every element a singleton.
  static SetPartition finest(const GroundSet& ground);
  /// 1_M: one block.
  static SetPartition coarsest(const GroundSet& ground);
  /// Parses "{1,9}{2,8}{3,6,7}{4,5}".
  static SetPartition parse(std::string_view text);

  const GroundSet& ground() const { return ground_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  std::size_t size() const { return ground_.size(); }

  /// Index (into blocks()) of the block containing x.
  std::size_t block_index_of(int x) const;
  bool same_block(int x, int y) const;

  /// Blocks with elements replaced by their 0-based rank in the ground set.
  std::vector<Block> rank_blocks() const;

  std::string to_string() const;

  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.ground_ == b.ground_ && a.blocks_ == b.blocks_;
  }
  friend bool operator<(const SetPartition& a, const SetPartition& b) {
    if (a.ground_.size() != b.ground_.size()) return a.ground_.size() < b.ground_.size();
    return a.blocks_ < b.blocks_;
  }

 private:
  GroundSet ground_;
  std::vector<Block> blocks_;
};

/// A partition whose blocks have one or two elements.
class PartialPairing {
 public:
  explicit PartialPairing(SetPartition partition);

  const SetPartition& partition() const { return partition_; }
  const GroundSet& ground() const { return partition_.ground(); }

  friend bool operator==(const PartialPairing&, const PartialPairing&) = default;

 private:
  SetPartition partition_;
};

// ---------------------------------------------------------------------------
// Enumeration

/// All non-crossing partitions of `ground`, each exactly once (Catalan many).
std::vector<SetPartition> enumerate_nc(const GroundSet& ground);
std::vector<SetPartition> enumerate_nc(int n);
/// Non-crossing partitions with blocks of size 1 or 2 (Motzkin many).
std::vector<SetPartition> enumerate_nc_le2(int n);
/// Partitions of {1..n} whose blocks are integer intervals (2^{n-1} many).
std::vector<SetPartition> enumerate_interval(int n);

std::uint64_t catalan_number(int n);
std::uint64_t binomial(int n, int r);

// ---------------------------------------------------------------------------
// Order structure

/// No i<j<k<l with i~k, j~l in distinct blocks.
bool is_noncrossing(const SetPartition& p);
/// p <= q in reversed refinement order: every block of p sits inside a block of q.
bool leq_refinement(const SetPartition& p, const SetPartition& q);
/// p << q: p <= q and each block of q has its min and max in one block of p.
bool ll_order(const SetPartition& p, const SetPartition& q);

/// |{rho in NC(n) : rho >> p, |rho| = count}| = binomial(|p|-1, count-1). Requires p << 1_n.
std::uint64_t count_ll_above(const SetPartition& p, int count);
/// The same count obtained by scanning NC(n).
std::uint64_t count_ll_above_enumerated(const SetPartition& p, int count);

// ---------------------------------------------------------------------------
// Restriction, union, completion

SetPartition restrict_partition(const SetPartition& p, const GroundSet& subset);
SetPartition disjoint_union(const SetPartition& p1, const SetPartition& p2);

/// The largest sigma in NC(complement) such that p1 joined with sigma is
/// non-crossing. `p1` must be non-crossing and disjoint from `complement`.
SetPartition maximal_completion(const SetPartition& p1, const GroundSet& complement);

/// Kreweras complement of a non-crossing partition of {1..n}.
SetPartition kreweras_complement(const SetPartition& p);

// ---------------------------------------------------------------------------
// Partial pairings

GroundSet doubletons(const PartialPairing& rho);
GroundSet singletons(const PartialPairing& rho);

/// Assigns each singleton of rho (on {1..n}) to the innermost doubleton above
/// it, with {0, n+1} added as the outermost doubleton.
SetPartition assign_singletons(const PartialPairing& rho);

/// True when pi (on {0..n+1}) has 0 ~ n+1 and no singleton blocks.
bool is_singleton_free_with_outer_block(const SetPartition& pi);

/// Inverse of assign_singletons: keeps {min, max} of every block not holding 0.
PartialPairing extract_pairing(const SetPartition& pi);

}  // namespace ncprob
