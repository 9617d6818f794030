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

#include <vector>

#include "ncprob/distribution.hpp"
#include "ncprob/partition.hpp"

namespace ncprob {

/// Every doubleton {p, q} of rho has w_p = w_q.
bool compatible(const PartialPairing& rho, const Word& w);

/// One summand of the NC_{<=2}(n) moment formula.
struct BrownianTerm {
  SetPartition rho;
  SetPartition completion;  // rho-hat on S(rho); empty when S(rho) is empty
  int doubletons = 0;
  bool compatible = false;
  Rational nu_factor;  // Cf_{w|S; rho-hat}(M_nu), 1 when S(rho) is empty
  Rational value;      // t^doubletons * nu_factor, 0 when incompatible
};

/// (nu boxplus gamma_t)(X_w) summed over NC_{<=2}(|w|). With
/// `skip_incompatible` false every pairing is visited and its delta factor
/// evaluated; the sum is the same.
Rational brownian_moment(const Distribution& nu, const Rational& t, const Word& w, bool skip_incompatible = true);

/// All summands, in canonical partition order.
std::vector<BrownianTerm> brownian_terms(const Distribution& nu, const Rational& t, const Word& w);

/// Coefficients c_0, c_1, ... with (nu boxplus gamma_t)(X_w) = sum_j c_j t^j.
std::vector<Rational> brownian_polynomial(const Distribution& nu, const Word& w);

/// Every moment of nu boxplus gamma_t through the pairing formula.
Distribution brownian_moments(const Distribution& nu, const Rational& t);

/// Pairing formula against free_convolve(nu, gamma_t) on every word.
IdentityReport check_brownian_vs_convolution(const Distribution& nu, const Rational& t);

/// Interpolates the convolution route through `points` and compares the
/// resulting polynomial in t with brownian_polynomial on every word.
IdentityReport check_brownian_polynomial(const Distribution& nu, const std::vector<Rational>& points);

}  // namespace ncprob
