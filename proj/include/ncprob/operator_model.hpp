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

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "ncprob/identity_report.hpp"
#include "ncprob/series.hpp"

namespace ncprob {

using Complex = std::complex<double>;

/// Hermitian a_1..a_k on C^dim with a unit state vector xi_0.
struct ModelInput {
  int dim = 0;
  int k = 0;
  std::vector<Eigen::MatrixXcd> matrices;
  Eigen::VectorXcd state;
};

/// Operators on K = C + H^k, basis (Omega_0, v_1(H), ..., v_k(H)).
struct ModelOutput {
  int dim = 0;  // 1 + k * input dim
  int k = 0;
  std::vector<Eigen::MatrixXcd> w;  // Omega_0 -> Omega_j = v_j xi_0
  std::vector<Eigen::MatrixXcd> x;  // 0 + a_j + ... + a_j
  std::vector<Eigen::MatrixXcd> y;  // w_j + x_j + w_j^*
};

inline constexpr double kModelInputTolerance = 1e-12;

/// Throws PreconditionError unless every a_j is Hermitian and |xi_0| = 1 within 1e-12.
void validate(const ModelInput& input);

ModelOutput build_model(const ModelInput& input);

/// <a_{w_1} ... a_{w_n} xi_0, xi_0> for every word up to `degree`.
std::map<Word, Complex> input_moments(const ModelInput& input, int degree);
/// <y_{w_1} ... y_{w_n} Omega_0, Omega_0> for every word up to `degree`.
std::map<Word, Complex> model_moments(const ModelOutput& output, int degree);

/// Carries floating moments into an exact series, one shortest round-trip decimal per part.
BasicSeries<ComplexRational> rationalize(const std::map<Word, Complex>& moments, int k, int degree);

/// Seeded random input: Hermitian entries with parts in [-1, 1], random unit state.
ModelInput random_model_input(std::uint64_t seed, int dim, int k);

/// The closed-form case dim = 1, k = 1, a_1 = [0], xi_0 = 1.
ModelInput trivial_model_input();

struct OperatorModelReport {
  std::uint64_t seed = 0;
  IdentityReport structure;    // Hermitian y_j, block rules, partial-isometry contract
  IdentityReport moments;      // model moments against Phi(nu); per-word deltas in details
  IdentityReport lemma;        // w_{i'}^* x_{j_1}...x_{j_m} w_{i''} Omega_0 = lambda Omega_0
  IdentityReport vanishing;    // u-words off the segment recipe vanish; on it they factor
  double max_delta = 0;
  bool passed() const { return structure.passed() && moments.passed() && lemma.passed() && vanishing.passed(); }
};

/// Compares the model against the exact Phi pipeline through `degree`. Each
/// floating comparison accepts |a - b| <= max(tolerance, tolerance * |b|).
/// The operator-word checks run through min(degree, word_degree).
OperatorModelReport verify_phi_model(const ModelInput& input, int degree, double tolerance = 1e-9,
                                     int word_degree = 5);

}  // namespace ncprob
