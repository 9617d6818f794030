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

#include <doctest.h>

#include "ncprob/distribution.hpp"
#include "ncprob/operator_model.hpp"

using namespace ncprob;

namespace {

ModelInput diagonal_input() {
  ModelInput in;
  in.dim = 2;
  in.k = 2;
  Eigen::MatrixXcd a1 = Eigen::MatrixXcd::Zero(2, 2);
  a1(0, 0) = 1;
  a1(1, 1) = -1;
  Eigen::MatrixXcd a2 = Eigen::MatrixXcd::Zero(2, 2);
  a2(0, 1) = Complex(0, 1);
  a2(1, 0) = Complex(0, -1);
  in.matrices = {a1, a2};
  in.state = Eigen::VectorXcd::Zero(2);
  in.state(0) = 1;
  return in;
}

}  // namespace

TEST_CASE("input validation") {
  auto in = diagonal_input();
  CHECK_NOTHROW(validate(in));
  auto bad = in;
  bad.matrices[1](0, 1) = 2;
  CHECK_THROWS_AS(validate(bad), PreconditionError);
  bad = in;
  bad.state(0) = 0.5;
  CHECK_THROWS_AS(validate(bad), PreconditionError);
  bad = in;
  bad.matrices.pop_back();
  CHECK_THROWS_AS(validate(bad), PreconditionError);
  bad = in;
  bad.state = Eigen::VectorXcd::Ones(3) / std::sqrt(3.0);
  CHECK_THROWS_AS(validate(bad), PreconditionError);
}

TEST_CASE("model structure") {
  const auto out = build_model(diagonal_input());
  CHECK(out.dim == 5);
  Eigen::MatrixXcd omega_proj = Eigen::MatrixXcd::Zero(5, 5);
  omega_proj(0, 0) = 1;
  for (int j = 0; j < 2; ++j) {
    const auto& y = out.y[static_cast<std::size_t>(j)];
    CHECK((y - y.adjoint()).norm() < 1e-15);
    const auto& w = out.w[static_cast<std::size_t>(j)];
    CHECK((w.adjoint() * w - omega_proj).norm() < 1e-15);
    CHECK(out.x[static_cast<std::size_t>(j)].row(0).norm() == 0);
  }
  // w_1^* w_2 = 0: the ranges sit in different blocks
  CHECK((out.w[0].adjoint() * out.w[1]).norm() == 0);
}

TEST_CASE("closed-form case") {
  const auto in = trivial_model_input();
  const auto m = model_moments(build_model(in), 6);
  for (int n = 1; n <= 6; ++n) {
    const Complex v = m.at(Word(std::vector<int>(static_cast<std::size_t>(n), 1)));
    CHECK(std::abs(v - Complex(n % 2 == 0 ? 1 : 0)) < 1e-15);
  }
  const auto report = verify_phi_model(in, 6, 1e-12);
  CHECK(report.passed());
  CHECK(report.max_delta < 1e-12);
}

TEST_CASE("input moments of a diagonal law") {
  const auto m = input_moments(diagonal_input(), 3);
  CHECK(std::abs(m.at(Word{1}) - Complex(1)) < 1e-15);
  CHECK(std::abs(m.at(Word{2})) < 1e-15);
  CHECK(std::abs(m.at(Word{2, 2}) - Complex(1)) < 1e-15);
  CHECK(m.size() == 2 + 4 + 8);
}

TEST_CASE("rationalize keeps shortest decimals") {
  std::map<Word, Complex> m{{Word{1}, Complex(0.1, -0.25)}, {Word{1, 1}, Complex(0, 0)}};
  const auto s = rationalize(m, 1, 2);
  CHECK(s.coefficient(Word{1}) == ComplexRational(Rational(1, 10), Rational(-1, 4)));
  CHECK(s.terms().size() == 1);
}

TEST_CASE("random inputs match the exact pipeline") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    for (auto [dim, k] : {std::pair{1, 1}, std::pair{2, 2}, std::pair{3, 2}, std::pair{4, 3}}) {
      const auto in = random_model_input(seed, dim, k);
      CHECK_NOTHROW(validate(in));
      const auto report = verify_phi_model(in, k == 3 ? 4 : 6, 1e-9, 4);
      CAPTURE(seed);
      CAPTURE(dim);
      CHECK(report.structure.passed());
      CHECK(report.moments.passed());
      CHECK(report.lemma.passed());
      CHECK(report.vanishing.passed());
      CHECK(report.moments.checked > 0);
      CHECK(!report.moments.details.empty());
    }
  }
  CHECK(random_model_input(9, 3, 2).matrices[0].isApprox(random_model_input(9, 3, 2).matrices[0]));
  CHECK_THROWS_AS(verify_phi_model(trivial_model_input(), 2), PreconditionError);
  CHECK_THROWS_AS(verify_phi_model(trivial_model_input(), 4, 0.0), DomainError);
}
