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

#include "ncprob/random.hpp"

namespace ncprob {

Rational random_rational(Rng& rng) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  const int p = num(rng);
  const int q = den(rng);
  Rational out(p, q);
  out.canonicalize();
  return out;
}

TruncatedSeries random_series(Rng& rng, int k, int degree) {
  TruncatedSeries out(k, degree);
  for (int n = 1; n <= degree; ++n) {
    for (const auto& w : all_words(k, n)) out.set(w, random_rational(rng));
  }
  return out;
}

Distribution random_distribution(Rng& rng, int k, int degree) {
  return Distribution::from_moments(random_series(rng, k, degree));
}

}  // namespace ncprob
