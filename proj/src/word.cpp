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

#include "ncprob/word.hpp"

#include <algorithm>
#include <charconv>

#include "ncprob/error.hpp"

namespace ncprob {

int Word::max_letter() const {
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

Word Word::restrict_to(std::span<const int> positions) const {
  std::vector<int> out;
  out.reserve(positions.size());
  for (int p : positions) out.push_back(letters_.at(static_cast<std::size_t>(p)));
  return Word(std::move(out));
}

Word Word::concat(const Word& tail) const {
  std::vector<int> out;
  out.reserve(letters_.size() + tail.letters_.size());
  out.insert(out.end(), letters_.begin(), letters_.end());
  out.insert(out.end(), tail.letters_.begin(), tail.letters_.end());
  return Word(std::move(out));
}

Word Word::subword(std::size_t offset, std::size_t count) const {
  return Word(std::vector<int>(letters_.begin() + static_cast<std::ptrdiff_t>(offset),
                               letters_.begin() + static_cast<std::ptrdiff_t>(offset + count)));
}

std::string Word::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(letters_[i]);
  }
  return out;
}

Word Word::parse(std::string_view text) {
  std::vector<int> letters;
  if (text.empty()) return Word();
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size() || value < 1) {
      throw ParseError("malformed word '" + std::string(text) + "'");
    }
    letters.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Word(std::move(letters));
}

std::vector<Word> all_words(int k, int n) {
  std::vector<Word> out;
  if (k < 1 || n < 0) return out;
  std::vector<int> letters(static_cast<std::size_t>(n), 1);
  while (true) {
    out.emplace_back(letters);
    int i = n - 1;
    while (i >= 0 && letters[static_cast<std::size_t>(i)] == k) {
      letters[static_cast<std::size_t>(i)] = 1;
      --i;
    }
    if (i < 0) break;
    ++letters[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace ncprob
