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

#include "ncprob/operator_model.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "ncprob/distribution.hpp"

namespace ncprob {

namespace {

Eigen::Index block_start(int j, int dim) { return 1 + static_cast<Eigen::Index>(j) * dim; }

std::string format_complex(Complex z) {
  std::ostringstream out;
  out.precision(17);
  out << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return out.str();
}

bool within(double delta, double scale, double tolerance) { return delta <= std::max(tolerance, tolerance * scale); }

// All products op_{w_1} ... op_{w_n} v for words up to `degree`, built by
// prepending letters to shorter words.
std::map<Word, Eigen::VectorXcd> word_vectors(const std::vector<Eigen::MatrixXcd>& ops, const Eigen::VectorXcd& v,
                                              int degree) {
  std::map<Word, Eigen::VectorXcd> out;
  std::vector<std::pair<Word, Eigen::VectorXcd>> level{{Word{}, v}};
  for (int n = 1; n <= degree; ++n) {
    std::vector<std::pair<Word, Eigen::VectorXcd>> next;
    for (const auto& [u, vec] : level) {
      for (std::size_t i = 0; i < ops.size(); ++i) {
        std::vector<int> letters{static_cast<int>(i) + 1};
        letters.insert(letters.end(), u.letters().begin(), u.letters().end());
        Word w(std::move(letters));
        Eigen::VectorXcd image = ops[i] * vec;
        out.emplace(w, image);
        next.emplace_back(std::move(w), std::move(image));
      }
    }
    level = std::move(next);
  }
  return out;
}

std::map<Word, Complex> vector_state_moments(const std::vector<Eigen::MatrixXcd>& ops, const Eigen::VectorXcd& v,
                                             int degree) {
  std::map<Word, Complex> out;
  for (const auto& [w, image] : word_vectors(ops, v, degree)) out.emplace(w, v.dot(image));
  return out;
}

}  // namespace

void validate(const ModelInput& input) {
  if (input.dim < 1) throw PreconditionError("model input dim must be >= 1");
  if (input.k < 1) throw PreconditionError("model input k must be >= 1");
  if (static_cast<int>(input.matrices.size()) != input.k) {
    throw PreconditionError("model input has " + std::to_string(input.matrices.size()) + " matrices, expected k = " +
                            std::to_string(input.k));
  }
  for (int j = 0; j < input.k; ++j) {
    const auto& a = input.matrices[static_cast<std::size_t>(j)];
    if (a.rows() != input.dim || a.cols() != input.dim) {
      throw PreconditionError("matrix " + std::to_string(j + 1) + " is not " + std::to_string(input.dim) + "x" +
                              std::to_string(input.dim));
    }
    const double dev = (a - a.adjoint()).cwiseAbs().maxCoeff();
    if (dev > kModelInputTolerance) {
      throw PreconditionError("matrix " + std::to_string(j + 1) + " is not Hermitian (deviation " +
                              std::to_string(dev) + ")");
    }
  }
  if (input.state.size() != input.dim) throw PreconditionError("state vector length does not match dim");
  const double norm = input.state.norm();
  if (std::abs(norm - 1.0) > kModelInputTolerance) {
    throw PreconditionError("state vector is not a unit vector (norm " + std::to_string(norm) + ")");
  }
}

ModelOutput build_model(const ModelInput& input) {
  validate(input);
  const int d = input.dim;
  const int k = input.k;
  ModelOutput out;
  out.dim = 1 + k * d;
  out.k = k;
  for (int j = 0; j < k; ++j) {
    Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(out.dim, out.dim);
    w.block(block_start(j, d), 0, d, 1) = input.state;
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(out.dim, out.dim);
    for (int i = 0; i < k; ++i) x.block(block_start(i, d), block_start(i, d), d, d) = input.matrices[j];
    Eigen::MatrixXcd y = w + x + w.adjoint();
    out.w.push_back(std::move(w));
    out.x.push_back(std::move(x));
    out.y.push_back(std::move(y));
  }
  return out;
}

std::map<Word, Complex> input_moments(const ModelInput& input, int degree) {
  validate(input);
  return vector_state_moments(input.matrices, input.state, degree);
}

std::map<Word, Complex> model_moments(const ModelOutput& output, int degree) {
  Eigen::VectorXcd omega = Eigen::VectorXcd::Zero(output.dim);
  omega(0) = 1;
  return vector_state_moments(output.y, omega, degree);
}

BasicSeries<ComplexRational> rationalize(const std::map<Word, Complex>& moments, int k, int degree) {
  BasicSeries<ComplexRational> out(k, degree);
  for (const auto& [w, z] : moments) {
    if (static_cast<int>(w.size()) <= degree) out.set(w, ComplexRational::from_complex(z));
  }
  return out;
}

ModelInput random_model_input(std::uint64_t seed, int dim, int k) {
  if (dim < 1 || k < 1) throw PreconditionError("random model input needs dim >= 1 and k >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  ModelInput input;
  input.dim = dim;
  input.k = k;
  for (int j = 0; j < k; ++j) {
    Eigen::MatrixXcd a(dim, dim);
    for (int r = 0; r < dim; ++r) {
      a(r, r) = Complex(uniform(rng), 0.0);
      for (int c = r + 1; c < dim; ++c) {
        const double re = uniform(rng);
        const double im = uniform(rng);
        a(r, c) = Complex(re, im);
        a(c, r) = Complex(re, -im);
      }
    }
    input.matrices.push_back(std::move(a));
  }
  Eigen::VectorXcd state(dim);
  for (int r = 0; r < dim; ++r) {
    const double re = uniform(rng);
    const double im = uniform(rng);
    state(r) = Complex(re, im);
  }
  input.state = state / state.norm();
  return input;
}

ModelInput trivial_model_input() {
  ModelInput input;
  input.dim = 1;
  input.k = 1;
  input.matrices.push_back(Eigen::MatrixXcd::Zero(1, 1));
  input.state = Eigen::VectorXcd::Ones(1);
  return input;
}

namespace {

enum class Piece { W, X, WStar };

// Splits a u-word into segments w^* x...x w; returns false if it does not split.
bool segment_recipe(const std::vector<Piece>& pieces, std::vector<std::pair<int, int>>& segments) {
  segments.clear();
  std::size_t c = 0;
  while (c < pieces.size()) {
    if (pieces[c] != Piece::WStar) return false;
    std::size_t e = c + 1;
    while (e < pieces.size() && pieces[e] == Piece::X) ++e;
    if (e == pieces.size() || pieces[e] != Piece::W) return false;
    segments.emplace_back(static_cast<int>(c), static_cast<int>(e));
    c = e + 1;
  }
  return !pieces.empty();
}

void check_structure(const ModelInput& input, const ModelOutput& model, IdentityReport& report) {
  const int d = input.dim;
  const double tol = kModelInputTolerance;
  Eigen::MatrixXcd p0 = Eigen::MatrixXcd::Zero(model.dim, model.dim);
  p0(0, 0) = 1;
  auto expect_small = [&](const std::string& what, double value) {
    ++report.checked;
    if (value > tol) report.fail(what, std::to_string(value), "0", value);
  };
  for (int j = 0; j < model.k; ++j) {
    const std::string tag = "j=" + std::to_string(j + 1) + " ";
    const auto& w = model.w[static_cast<std::size_t>(j)];
    const auto& x = model.x[static_cast<std::size_t>(j)];
    const auto& y = model.y[static_cast<std::size_t>(j)];
    expect_small(tag + "y Hermitian", (y - y.adjoint()).cwiseAbs().maxCoeff());
    expect_small(tag + "w*w = projection onto Omega_0", (w.adjoint() * w - p0).cwiseAbs().maxCoeff());
    Eigen::VectorXcd omega_j = w.col(0);
    expect_small(tag + "ww* = projection onto Omega_j", (w * w.adjoint() - omega_j * omega_j.adjoint()).cwiseAbs().maxCoeff());
    // w_j: C Omega_0 -> v_j(H); every v_i(H) -> 0.
    Eigen::MatrixXcd w_off = w;
    w_off.block(block_start(j, d), 0, d, 1).setZero();
    expect_small(tag + "w block rule", w_off.cwiseAbs().maxCoeff());
    // x_j: C Omega_0 -> 0; each v_i(H) into itself.
    Eigen::MatrixXcd x_off = x;
    for (int i = 0; i < model.k; ++i) x_off.block(block_start(i, d), block_start(i, d), d, d).setZero();
    expect_small(tag + "x block rule", x_off.cwiseAbs().maxCoeff());
    expect_small(tag + "x block content",
                 (x.block(block_start(j, d), block_start(j, d), d, d) - input.matrices[static_cast<std::size_t>(j)])
                     .cwiseAbs()
                     .maxCoeff());
  }
}

}  // namespace

OperatorModelReport verify_phi_model(const ModelInput& input, int degree, double tolerance, int word_degree) {
  if (degree < 3) throw PreconditionError("operator model verification needs degree >= 3");
  if (!(tolerance > 0)) throw DomainError("tolerance must be > 0");
  const ModelOutput model = build_model(input);
  const int k = input.k;

  OperatorModelReport report;
  report.structure.name = "operator model structure";
  report.moments.name = "model moments = Phi(nu)";
  report.lemma.name = "w*_{i'} x_{j_1}...x_{j_m} w_{i''} Omega_0 = lambda Omega_0";
  report.vanishing.name = "u-words vanish off the segment recipe and factor on it";

  check_structure(input, model, report.structure);

  const auto nu = rationalize(input_moments(input, degree - 2), k, degree - 2);
  const auto eta = phi_eta(nu);
  const auto phi_moments = invert_eta_to_moments(eta);
  auto eta_value = [&](const Word& w) -> Complex {
    const ComplexRational* c = eta.find(w);
    return c ? c->to_complex() : Complex{};
  };

  for (const auto& [w, value] : model_moments(model, degree)) {
    const ComplexRational* exact = phi_moments.find(w);
    const Complex expected = exact ? exact->to_complex() : Complex{};
    const double delta = std::abs(value - expected);
    report.max_delta = std::max(report.max_delta, delta);
    ++report.moments.checked;
    report.moments.details.push_back({w.to_string(), format_complex(value), format_complex(expected), delta});
    if (!within(delta, std::abs(expected), tolerance)) {
      report.moments.fail(w.to_string(), format_complex(value), format_complex(expected), delta);
    }
  }

  const int limit = std::min(degree, word_degree);
  Eigen::VectorXcd omega = Eigen::VectorXcd::Zero(model.dim);
  omega(0) = 1;

  // x-words sandwiched between w_{i''} and w^*_{i'}.
  const auto x_images = [&] {
    std::vector<std::map<Word, Eigen::VectorXcd>> per_inner;
    for (int i = 0; i < k; ++i) {
      Eigen::VectorXcd start = model.w[static_cast<std::size_t>(i)] * omega;
      auto images = word_vectors(model.x, start, std::max(0, limit - 2));
      images.emplace(Word{}, start);
      per_inner.push_back(std::move(images));
    }
    return per_inner;
  }();
  for (int i_outer = 1; i_outer <= k; ++i_outer) {
    for (int i_inner = 1; i_inner <= k; ++i_inner) {
      for (const auto& [inner, vec] : x_images[static_cast<std::size_t>(i_inner - 1)]) {
        const Eigen::VectorXcd v = model.w[static_cast<std::size_t>(i_outer - 1)].adjoint() * vec;
        std::vector<int> letters{i_outer};
        letters.insert(letters.end(), inner.letters().begin(), inner.letters().end());
        letters.push_back(i_inner);
        const Word full(std::move(letters));
        const Complex lambda = eta_value(full);
        const double delta = (v - lambda * omega).cwiseAbs().maxCoeff();
        report.max_delta = std::max(report.max_delta, delta);
        ++report.lemma.checked;
        if (!within(delta, std::abs(lambda), tolerance)) {
          report.lemma.fail(full.to_string(), format_complex(v(0)), format_complex(lambda), delta);
        }
      }
    }
  }

  // Every choice u_c in {w, x, w^*} for every word of length <= limit.
  std::vector<std::pair<int, int>> segments;
  for (int n = 1; n <= limit; ++n) {
    std::size_t choices = 1;
    for (int c = 0; c < n; ++c) choices *= 3;
    for (const auto& w : all_words(k, n)) {
      for (std::size_t code = 0; code < choices; ++code) {
        std::vector<Piece> pieces(static_cast<std::size_t>(n));
        std::size_t rest = code;
        for (auto& piece : pieces) {
          piece = static_cast<Piece>(rest % 3);
          rest /= 3;
        }
        Eigen::VectorXcd v = omega;
        for (int c = n - 1; c >= 0; --c) {
          const auto letter = static_cast<std::size_t>(w[static_cast<std::size_t>(c)] - 1);
          switch (pieces[static_cast<std::size_t>(c)]) {
            case Piece::W:
              v = model.w[letter] * v;
              break;
            case Piece::X:
              v = model.x[letter] * v;
              break;
            case Piece::WStar:
              v = model.w[letter].adjoint() * v;
              break;
          }
        }
        const Complex value = omega.dot(v);
        Complex expected{};
        if (segment_recipe(pieces, segments)) {
          expected = 1;
          for (auto [a, b] : segments) expected *= eta_value(w.subword(static_cast<std::size_t>(a),
                                                                       static_cast<std::size_t>(b - a + 1)));
        }
        const double delta = std::abs(value - expected);
        report.max_delta = std::max(report.max_delta, delta);
        ++report.vanishing.checked;
        if (!within(delta, std::abs(expected), tolerance)) {
          std::string label = w.to_string() + " [";
          for (auto piece : pieces) label += piece == Piece::W ? 'w' : piece == Piece::X ? 'x' : '*';
          label += ']';
          report.vanishing.fail(std::move(label), format_complex(value), format_complex(expected), delta);
        }
      }
    }
  }
  return report;
}

}  // namespace ncprob
