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

// Independent reference computations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ncprob/partition.hpp"
#include "ncprob/rational.hpp"

namespace oracle {

using Blocks = std::vector<std::vector<int>>;

// Every set partition of `ground`, from restricted growth strings (Bell many).
inline std::vector<Blocks> all_set_partitions(const std::vector<int>& ground) {
  std::vector<Blocks> out;
  const std::size_t n = ground.size();
  if (n == 0) return {Blocks{}};
  std::vector<int> rgs(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
    if (i == n) {
      Blocks blocks(static_cast<std::size_t>(used));
      for (std::size_t j = 0; j < n; ++j) blocks[static_cast<std::size_t>(rgs[j])].push_back(ground[j]);
      out.push_back(std::move(blocks));
      return;
    }
    for (int b = 0; b <= used; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  rgs[0] = 0;
  rec(1, 1);
  return out;
}

inline std::vector<int> range(int first, int last) {
  std::vector<int> out;
  for (int x = first; x <= last; ++x) out.push_back(x);
  return out;
}

// The four-point definition: i < j < k < l, i ~ k, j ~ l, in distinct blocks.
inline bool crosses(const Blocks& blocks) {
  for (std::size_t a = 0; a < blocks.size(); ++a) {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (a == b) continue;
      for (int i : blocks[a]) {
        for (int k : blocks[a]) {
          if (k <= i) continue;
          for (int j : blocks[b]) {
            if (j <= i || j >= k) continue;
            for (int l : blocks[b]) {
              if (l > k) return true;
            }
          }
        }
      }
    }
  }
  return false;
}

inline std::vector<ncprob::SetPartition> brute_nc(const std::vector<int>& ground) {
  std::vector<ncprob::SetPartition> out;
  for (auto& blocks : all_set_partitions(ground)) {
    if (!crosses(blocks)) out.emplace_back(ncprob::GroundSet(ground), std::move(blocks));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::uint64_t motzkin(int n) {
  std::vector<std::uint64_t> m{1, 1};
  for (int i = 2; i <= n; ++i) {
    std::uint64_t v = m[static_cast<std::size_t>(i - 1)];
    for (int k = 0; k <= i - 2; ++k) v += m[static_cast<std::size_t>(k)] * m[static_cast<std::size_t>(i - 2 - k)];
    m.push_back(v);
  }
  return m[static_cast<std::size_t>(n)];
}

inline bool refines(const ncprob::SetPartition& p, const ncprob::SetPartition& q) {
  for (const auto& b : p.blocks()) {
    const auto target = q.block_index_of(b.front());
    for (int x : b) {
      if (q.block_index_of(x) != target) return false;
    }
  }
  return true;
}

// The largest sigma in NC(l2) with p1 joined to sigma non-crossing, found by
// scanning all candidates; nullopt if no single maximum exists.
inline std::optional<ncprob::SetPartition> brute_completion(const ncprob::SetPartition& p1,
                                                            const std::vector<int>& l2) {
  std::vector<ncprob::SetPartition> good;
  for (const auto& sigma : brute_nc(l2)) {
    Blocks joined = p1.blocks();
    joined.insert(joined.end(), sigma.blocks().begin(), sigma.blocks().end());
    if (!crosses(joined)) good.push_back(sigma);
  }
  for (const auto& top : good) {
    bool is_max = true;
    for (const auto& s : good) {
      if (!refines(s, top)) {
        is_max = false;
        break;
      }
    }
    if (is_max) return top;
  }
  return std::nullopt;
}

// Coefficients c_1..c_n of sum_{j>=1} sign^{j+1} x^{j*step} truncated at n (k = 1).
inline std::vector<ncprob::Rational> geometric(int n, int step, int sign) {
  std::vector<ncprob::Rational> out(static_cast<std::size_t>(n + 1));
  int s = 1;
  for (int e = step; e <= n; e += step) {
    out[static_cast<std::size_t>(e)] = s;
    s *= sign;
  }
  return out;
}

}  // namespace oracle
