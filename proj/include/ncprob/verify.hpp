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
#include <string>
#include <string_view>
#include <vector>

#include "ncprob/identity_report.hpp"
#include "ncprob/rational.hpp"

namespace ncprob {

struct SuiteOptions {
  int k = 2;
  int degree = 6;
  std::uint64_t seed = 7;
  int trials = 5;
  int n = 7;                   // partition size for the combinatorial suites
  std::vector<Rational> t;     // overrides the suite's parameter list when nonempty
  int dim = 3;                 // operator-model Hilbert dimension
  double tolerance = 1e-9;     // operator-model only
};

struct SuiteReport {
  std::string suite;
  SuiteOptions options;
  std::vector<IdentityReport> checks;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed()) return false;
    }
    return true;
  }
};

/// semigroup, commutation, reta-iteration, lemma35, boxtimes-homo,
/// power-dilation, brownian, phi-brownian, operator-model, alpha-beta,
/// cross-route.
const std::vector<std::string>& suite_names();

/// Throws PreconditionError for an unknown name.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options);

}  // namespace ncprob
