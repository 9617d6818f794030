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

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ncprob {

/// A finite sequence of 1-based letter indices, indexing monomials z_{i1}...z_{in}.
///
/// Words order by (length, letters) so that iterating a coefficient map visits
/// all degree-1 words first, then degree 2, and so on.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<int> letters) : letters_(letters) {}
  explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  std::span<const int> letters() const { return letters_; }

  /// Largest letter, or 0 for the empty word.
  int max_letter() const;

  /// Letters at the given 0-based positions, in the given order.
  Word restrict_to(std::span<const int> positions) const;
  Word concat(const Word& tail) const;
  Word subword(std::size_t offset, std::size_t count) const;

  /// "1,2,1"; the empty word formats as "".
  std::string to_string() const;
  static Word parse(std::string_view text);

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<int> letters_;
};

/// All k^n words of length n over {1..k}, in lexicographic order.
std::vector<Word> all_words(int k, int n);

}  // namespace ncprob
