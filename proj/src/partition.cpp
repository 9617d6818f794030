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

#include "ncprob/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <string>

#include "ncprob/error.hpp"

namespace ncprob {

// ---------------------------------------------------------------------------
// GroundSet

GroundSet::GroundSet(std::initializer_list<int> elements) : GroundSet(std::vector<int>(elements)) {}

GroundSet::GroundSet(std::vector<int> elements) : elements_(std::move(elements)) {
  for (std::size_t i = 1; i < elements_.size(); ++i) {
    if (elements_[i - 1] >= elements_[i]) throw PreconditionError("ground set must be strictly increasing");
  }
}

GroundSet GroundSet::range(int first, int last) {
  std::vector<int> out;
  for (int x = first; x <= last; ++x) out.push_back(x);
  return GroundSet(std::move(out));
}

bool GroundSet::contains(int x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

std::size_t GroundSet::rank(int x) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
  if (it == elements_.end() || *it != x) {
    throw PreconditionError("element " + std::to_string(x) + " is not in the ground set");
  }
  return static_cast<std::size_t>(it - elements_.begin());
}

// ---------------------------------------------------------------------------
// SetPartition

namespace {

void canonicalize(std::vector<SetPartition::Block>& blocks) {
  for (auto& b : blocks) {
    if (b.empty()) throw PreconditionError("partition blocks must be nonempty");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

std::vector<int> flatten_sorted(const std::vector<SetPartition::Block>& blocks) {
  std::vector<int> all;
  for (const auto& b : blocks) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

SetPartition::SetPartition(GroundSet ground, std::vector<Block> blocks)
    : ground_(std::move(ground)), blocks_(std::move(blocks)) {
  canonicalize(blocks_);
  auto all = flatten_sorted(blocks_);
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw PreconditionError("partition blocks must be pairwise disjoint");
  }
  if (!std::equal(all.begin(), all.end(), ground_.elements().begin(), ground_.elements().end())) {
    throw PreconditionError("partition blocks must cover the ground set exactly");
  }
}

SetPartition::SetPartition(std::vector<Block> blocks) {
  canonicalize(blocks);
  auto all = flatten_sorted(blocks);
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw PreconditionError("partition blocks must be pairwise disjoint");
  }
  ground_ = GroundSet(std::move(all));
  blocks_ = std::move(blocks);
}

SetPartition SetPartition::finest(const GroundSet& ground) {
  std::vector<Block> blocks;
  for (int x : ground.elements()) blocks.push_back({x});
  return SetPartition(ground, std::move(blocks));
}

SetPartition SetPartition::coarsest(const GroundSet& ground) {
  if (ground.empty()) return SetPartition(ground, {});
  auto e = ground.elements();
  return SetPartition(ground, {Block(e.begin(), e.end())});
}

SetPartition SetPartition::parse(std::string_view text) {
  std::vector<Block> blocks;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '{') throw ParseError("malformed partition '" + std::string(text) + "'");
    ++i;
    Block block;
    while (true) {
      skip_space();
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc()) throw ParseError("malformed partition '" + std::string(text) + "'");
      i = static_cast<std::size_t>(ptr - text.data());
      block.push_back(value);
      skip_space();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == '}') {
        ++i;
        break;
      }
      throw ParseError("malformed partition '" + std::string(text) + "'");
    }
    blocks.push_back(std::move(block));
    skip_space();
  }
  return SetPartition(std::move(blocks));
}

std::size_t SetPartition::block_index_of(int x) const {
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (std::binary_search(blocks_[b].begin(), blocks_[b].end(), x)) return b;
  }
  throw PreconditionError("element " + std::to_string(x) + " is not in the partition");
}

bool SetPartition::same_block(int x, int y) const { return block_index_of(x) == block_index_of(y); }

std::vector<SetPartition::Block> SetPartition::rank_blocks() const {
  std::vector<Block> out;
  out.reserve(blocks_.size());
  for (const auto& b : blocks_) {
    Block r;
    r.reserve(b.size());
    for (int x : b) r.push_back(static_cast<int>(ground_.rank(x)));
    out.push_back(std::move(r));
  }
  return out;
}

std::string SetPartition::to_string() const {
  std::string out;
  for (const auto& b : blocks_) {
    out += '{';
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(b[i]);
    }
    out += '}';
  }
  return out;
}

PartialPairing::PartialPairing(SetPartition partition) : partition_(std::move(partition)) {
  for (const auto& b : partition_.blocks()) {
    if (b.size() > 2) throw PreconditionError("partial pairing has a block with more than 2 elements");
  }
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

using Pattern = std::vector<SetPartition::Block>;  // blocks over indices 0..m-1

// Non-crossing patterns of {0..m-1}. The block of 0 is chosen first; the gaps
// it leaves are partitioned independently.
class NcPatternTable {
 public:
  const std::vector<Pattern>& get(int m) {
    while (static_cast<int>(table_.size()) <= m) table_.push_back(build(static_cast<int>(table_.size())));
    return table_[static_cast<std::size_t>(m)];
  }

 private:
  std::vector<Pattern> build(int m) {
    if (m == 0) return {Pattern{}};
    std::vector<Pattern> out;
    const int rest = m - 1;
    for (std::uint32_t mask = 0; mask < (1u << rest); ++mask) {
      SetPartition::Block first{0};
      for (int j = 1; j < m; ++j) {
        if (mask & (1u << (j - 1))) first.push_back(j);
      }
      // gaps: runs of unchosen indices between block members, and after the last one
      std::vector<std::pair<int, int>> gaps;  // [start, length)
      for (std::size_t b = 0; b < first.size(); ++b) {
        int start = first[b] + 1;
        int end = b + 1 < first.size() ? first[b + 1] : m;
        if (end > start) gaps.emplace_back(start, end - start);
      }
      std::vector<Pattern> partial{Pattern{first}};
      for (auto [start, len] : gaps) {
        const auto& sub = get(len);
        std::vector<Pattern> next;
        next.reserve(partial.size() * sub.size());
        for (const auto& base : partial) {
          for (const auto& s : sub) {
            Pattern combined = base;
            for (const auto& blk : s) {
              SetPartition::Block shifted;
              for (int x : blk) shifted.push_back(x + start);
              combined.push_back(std::move(shifted));
            }
            next.push_back(std::move(combined));
          }
        }
        partial = std::move(next);
      }
      for (auto& p : partial) out.push_back(std::move(p));
    }
    return out;
  }

  std::vector<std::vector<Pattern>> table_;
};

std::vector<Pattern> nc_le2_patterns(int m) {
  std::vector<std::vector<Pattern>> table{{Pattern{}}};
  for (int size = 1; size <= m; ++size) {
    std::vector<Pattern> out;
    for (const auto& tail : table[static_cast<std::size_t>(size - 1)]) {
      Pattern p{{0}};
      for (const auto& b : tail) {
        SetPartition::Block s;
        for (int x : b) s.push_back(x + 1);
        p.push_back(std::move(s));
      }
      out.push_back(std::move(p));
    }
    for (int j = 1; j < size; ++j) {
      for (const auto& inner : table[static_cast<std::size_t>(j - 1)]) {
        for (const auto& outer : table[static_cast<std::size_t>(size - 1 - j)]) {
          Pattern p{{0, j}};
          for (const auto& b : inner) {
            SetPartition::Block s;
            for (int x : b) s.push_back(x + 1);
            p.push_back(std::move(s));
          }
          for (const auto& b : outer) {
            SetPartition::Block s;
            for (int x : b) s.push_back(x + j + 1);
            p.push_back(std::move(s));
          }
          out.push_back(std::move(p));
        }
      }
    }
    table.push_back(std::move(out));
  }
  return table[static_cast<std::size_t>(m)];
}

SetPartition from_pattern(const GroundSet& ground, const Pattern& pattern) {
  std::vector<SetPartition::Block> blocks;
  blocks.reserve(pattern.size());
  for (const auto& b : pattern) {
    SetPartition::Block mapped;
    mapped.reserve(b.size());
    for (int i : b) mapped.push_back(ground[static_cast<std::size_t>(i)]);
    blocks.push_back(std::move(mapped));
  }
  return SetPartition(ground, std::move(blocks));
}

void check_enumeration_size(std::size_t n) {
  if (n > static_cast<std::size_t>(kAdvisoryPartitionCap)) {
    warn("enumerating partitions of a " + std::to_string(n) + "-element set exceeds the advisory cap of " +
         std::to_string(kAdvisoryPartitionCap));
  }
}

}  // namespace

std::vector<SetPartition> enumerate_nc(const GroundSet& ground) {
  if (ground.empty()) throw PreconditionError("cannot enumerate partitions of an empty ground set");
  check_enumeration_size(ground.size());
  NcPatternTable table;
  const auto& patterns = table.get(static_cast<int>(ground.size()));
  std::vector<SetPartition> out;
  out.reserve(patterns.size());
  for (const auto& p : patterns) out.push_back(from_pattern(ground, p));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SetPartition> enumerate_nc(int n) { return enumerate_nc(GroundSet::range(1, n)); }

std::vector<SetPartition> enumerate_nc_le2(int n) {
  if (n < 1) throw PreconditionError("n must be >= 1");
  check_enumeration_size(static_cast<std::size_t>(n));
  const GroundSet ground = GroundSet::range(1, n);
  std::vector<SetPartition> out;
  for (const auto& p : nc_le2_patterns(n)) out.push_back(from_pattern(ground, p));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SetPartition> enumerate_interval(int n) {
  if (n < 1) throw PreconditionError("n must be >= 1");
  check_enumeration_size(static_cast<std::size_t>(n));
  const GroundSet ground = GroundSet::range(1, n);
  std::vector<SetPartition> out;
  // bit i of `cuts` set: a block ends after element i+1
  for (std::uint32_t cuts = 0; cuts < (1u << (n - 1)); ++cuts) {
    std::vector<SetPartition::Block> blocks{{1}};
    for (int x = 2; x <= n; ++x) {
      if (cuts & (1u << (x - 2))) blocks.emplace_back();
      blocks.back().push_back(x);
    }
    out.emplace_back(ground, std::move(blocks));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t catalan_number(int n) { return n < 0 ? 0 : binomial(2 * n, n) / static_cast<std::uint64_t>(n + 1); }

std::uint64_t binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t out = 1;
  for (int i = 1; i <= r; ++i) out = out * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return out;
}

// ---------------------------------------------------------------------------
// Order structure

namespace {

void require_same_ground(const SetPartition& p, const SetPartition& q) {
  if (!(p.ground() == q.ground())) throw MismatchError("partitions live on different ground sets");
}

// Block index of each ground element, indexed by rank.
std::vector<std::size_t> rank_labels(const SetPartition& p) {
  std::vector<std::size_t> labels(p.size());
  const auto ranked = p.rank_blocks();
  for (std::size_t b = 0; b < ranked.size(); ++b) {
    for (int r : ranked[b]) labels[static_cast<std::size_t>(r)] = b;
  }
  return labels;
}

}  // namespace

bool is_noncrossing(const SetPartition& p) {
  // Scan left to right keeping a stack of blocks that have started but not
  // ended. Revisiting a block that is not on top means some block opened
  // inside it and is still open, which is a crossing.
  const auto ranked = p.rank_blocks();
  const auto labels = rank_labels(p);
  std::vector<std::size_t> open;
  for (std::size_t r = 0; r < labels.size(); ++r) {
    const std::size_t b = labels[r];
    const auto& block = ranked[b];
    const bool first = static_cast<std::size_t>(block.front()) == r;
    const bool last = static_cast<std::size_t>(block.back()) == r;
    if (first) {
      if (!last) open.push_back(b);
      continue;
    }
    if (open.empty() || open.back() != b) return false;
    if (last) open.pop_back();
  }
  return true;
}

bool leq_refinement(const SetPartition& p, const SetPartition& q) {
  require_same_ground(p, q);
  const auto labels = rank_labels(q);
  for (const auto& block : p.rank_blocks()) {
    for (int r : block) {
      if (labels[static_cast<std::size_t>(r)] != labels[static_cast<std::size_t>(block.front())]) return false;
    }
  }
  return true;
}

bool ll_order(const SetPartition& p, const SetPartition& q) {
  if (!leq_refinement(p, q)) return false;
  const auto labels = rank_labels(p);
  for (const auto& block : q.rank_blocks()) {
    if (labels[static_cast<std::size_t>(block.front())] != labels[static_cast<std::size_t>(block.back())]) {
      return false;
    }
  }
  return true;
}

namespace {

void require_ll_below_one(const SetPartition& p, int count) {
  if (p.ground().empty()) throw PreconditionError("partition has an empty ground set");
  if (!is_noncrossing(p)) throw PreconditionError("partition " + p.to_string() + " is not non-crossing");
  const auto e = p.ground().elements();
  if (!p.same_block(e.front(), e.back())) {
    throw PreconditionError("partition " + p.to_string() + " is not << 1_n (min and max in different blocks)");
  }
  if (count < 1 || count > static_cast<int>(p.block_count())) {
    throw PreconditionError("block count " + std::to_string(count) + " outside 1.." +
                            std::to_string(p.block_count()));
  }
}

}  // namespace

std::uint64_t count_ll_above(const SetPartition& p, int count) {
  require_ll_below_one(p, count);
  return binomial(static_cast<int>(p.block_count()) - 1, count - 1);
}

std::uint64_t count_ll_above_enumerated(const SetPartition& p, int count) {
  require_ll_below_one(p, count);
  std::uint64_t n = 0;
  for (const auto& rho : enumerate_nc(p.ground())) {
    if (static_cast<int>(rho.block_count()) == count && ll_order(p, rho)) ++n;
  }
  return n;
}

// ---------------------------------------------------------------------------
// Restriction, union, completion

SetPartition restrict_partition(const SetPartition& p, const GroundSet& subset) {
  if (subset.empty()) throw PreconditionError("cannot restrict to an empty subset");
  for (int x : subset.elements()) {
    if (!p.ground().contains(x)) {
      throw PreconditionError("restriction subset element " + std::to_string(x) + " is outside the ground set");
    }
  }
  std::vector<SetPartition::Block> blocks;
  for (const auto& b : p.blocks()) {
    SetPartition::Block kept;
    for (int x : b) {
      if (subset.contains(x)) kept.push_back(x);
    }
    if (!kept.empty()) blocks.push_back(std::move(kept));
  }
  return SetPartition(subset, std::move(blocks));
}

namespace {

GroundSet merged_ground(const GroundSet& a, const GroundSet& b) {
  std::vector<int> all(a.elements().begin(), a.elements().end());
  all.insert(all.end(), b.elements().begin(), b.elements().end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw MismatchError("ground sets overlap");
  }
  return GroundSet(std::move(all));
}

}  // namespace

SetPartition disjoint_union(const SetPartition& p1, const SetPartition& p2) {
  if (p1.ground().empty() || p2.ground().empty()) {
    throw PreconditionError("disjoint union requires two nonempty ground sets");
  }
  GroundSet ground = merged_ground(p1.ground(), p2.ground());
  std::vector<SetPartition::Block> blocks = p1.blocks();
  blocks.insert(blocks.end(), p2.blocks().begin(), p2.blocks().end());
  return SetPartition(std::move(ground), std::move(blocks));
}

SetPartition maximal_completion(const SetPartition& p1, const GroundSet& complement) {
  if (p1.ground().empty()) throw PreconditionError("maximal completion needs a nonempty partition to complete");
  if (complement.empty()) throw PreconditionError("maximal completion needs a nonempty complement");
  merged_ground(p1.ground(), complement);  // overlap check
  if (!is_noncrossing(p1)) throw PreconditionError("partition " + p1.to_string() + " is not non-crossing");

  // x < y share a block of the completion iff no block of p1 has points both
  // strictly inside (x, y) and outside [x, y].
  const auto elems = complement.elements();
  const std::size_t m = elems.size();
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (find(i) == find(j)) continue;
      const int x = elems[i];
      const int y = elems[j];
      bool separated = false;
      for (const auto& block : p1.blocks()) {
        bool inside = false;
        bool outside = false;
        for (int a : block) {
          if (a > x && a < y) {
            inside = true;
          } else {
            outside = true;
          }
        }
        if (inside && outside) {
          separated = true;
          break;
        }
      }
      if (!separated) parent[find(j)] = find(i);
    }
  }
  std::vector<SetPartition::Block> blocks(m);
  for (std::size_t i = 0; i < m; ++i) blocks[find(i)].push_back(elems[i]);
  std::erase_if(blocks, [](const auto& b) { return b.empty(); });
  return SetPartition(complement, std::move(blocks));
}

SetPartition kreweras_complement(const SetPartition& p) {
  const int n = static_cast<int>(p.size());
  if (n < 1 || !(p.ground() == GroundSet::range(1, n))) {
    throw PreconditionError("Kreweras complement expects a partition of {1..n}");
  }
  // Interleave 1 < 1' < 2 < 2' < ...: unprimed i sits at 2i-1, primed i at 2i.
  std::vector<SetPartition::Block> odd;
  for (const auto& b : p.blocks()) {
    SetPartition::Block mapped;
    for (int x : b) mapped.push_back(2 * x - 1);
    odd.push_back(std::move(mapped));
  }
  std::vector<int> even;
  for (int i = 1; i <= n; ++i) even.push_back(2 * i);
  const SetPartition completion = maximal_completion(SetPartition(std::move(odd)), GroundSet(std::move(even)));
  std::vector<SetPartition::Block> blocks;
  for (const auto& b : completion.blocks()) {
    SetPartition::Block mapped;
    for (int y : b) mapped.push_back(y / 2);
    blocks.push_back(std::move(mapped));
  }
  return SetPartition(GroundSet::range(1, n), std::move(blocks));
}

// ---------------------------------------------------------------------------
// Partial pairings

GroundSet doubletons(const PartialPairing& rho) {
  std::vector<int> out;
  for (const auto& b : rho.partition().blocks()) {
    if (b.size() == 2) out.insert(out.end(), b.begin(), b.end());
  }
  std::sort(out.begin(), out.end());
  return GroundSet(std::move(out));
}

GroundSet singletons(const PartialPairing& rho) {
  std::vector<int> out;
  for (const auto& b : rho.partition().blocks()) {
    if (b.size() == 1) out.push_back(b.front());
  }
  std::sort(out.begin(), out.end());
  return GroundSet(std::move(out));
}

SetPartition assign_singletons(const PartialPairing& rho) {
  const SetPartition& p = rho.partition();
  const int n = static_cast<int>(p.size());
  if (n < 1 || !(p.ground() == GroundSet::range(1, n))) {
    throw PreconditionError("assign_singletons expects a partial pairing of {1..n}");
  }
  if (!is_noncrossing(p)) throw PreconditionError("partial pairing " + p.to_string() + " is not non-crossing");

  std::vector<SetPartition::Block> blocks{{0, n + 1}};
  std::vector<std::size_t> pair_slot;  // blocks index per doubleton of p, in p order
  for (const auto& b : p.blocks()) {
    if (b.size() == 2) {
      pair_slot.push_back(blocks.size());
      blocks.push_back(b);
    } else {
      pair_slot.push_back(0);
    }
  }
  for (const auto& b : p.blocks()) {
    if (b.size() != 1) continue;
    const int i = b.front();
    std::size_t target = 0;  // {0, n+1}
    int innermost_left = 0;
    for (std::size_t d = 0; d < p.blocks().size(); ++d) {
      const auto& pair = p.blocks()[d];
      if (pair.size() == 2 && pair[0] < i && i < pair[1] && pair[0] > innermost_left) {
        innermost_left = pair[0];
        target = pair_slot[d];
      }
    }
    blocks[target].push_back(i);
  }
  return SetPartition(GroundSet::range(0, n + 1), std::move(blocks));
}

bool is_singleton_free_with_outer_block(const SetPartition& pi) {
  const int top = static_cast<int>(pi.size()) - 1;
  if (top < 2 || !(pi.ground() == GroundSet::range(0, top))) return false;
  if (!pi.same_block(0, top)) return false;
  for (const auto& b : pi.blocks()) {
    if (b.size() == 1) return false;
  }
  return is_noncrossing(pi);
}

PartialPairing extract_pairing(const SetPartition& pi) {
  if (!is_singleton_free_with_outer_block(pi)) {
    throw PreconditionError("partition " + pi.to_string() +
                            " is not a non-crossing partition of {0..n+1} with 0 ~ n+1 and no singletons");
  }
  const int n = static_cast<int>(pi.size()) - 2;
  std::vector<SetPartition::Block> blocks;
  std::vector<bool> covered(static_cast<std::size_t>(n + 1), false);
  for (const auto& b : pi.blocks()) {
    if (b.front() == 0) continue;
    blocks.push_back({b.front(), b.back()});
    covered[static_cast<std::size_t>(b.front())] = covered[static_cast<std::size_t>(b.back())] = true;
  }
  for (int i = 1; i <= n; ++i) {
    if (!covered[static_cast<std::size_t>(i)]) blocks.push_back({i});
  }
  return PartialPairing(SetPartition(GroundSet::range(1, n), std::move(blocks)));
}

}  // namespace ncprob
