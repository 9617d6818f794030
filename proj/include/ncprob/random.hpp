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

#include <random>

#include "ncprob/distribution.hpp"

namespace ncprob {

using Rng = std::mt19937_64;

/// p/q with p in [-5, 5] and q in [1, 4].
Rational random_rational(Rng& rng);

/// Every coefficient of every word up to `degree` drawn by random_rational.
TruncatedSeries random_series(Rng& rng, int k, int degree);

/// A distribution with random rational moments.
Distribution random_distribution(Rng& rng, int k, int degree);

}  // namespace ncprob
