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

#include "ncprob/json_io.hpp"

namespace ncprob {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + name + "\"");
  return *it;
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) throw ParseError(std::string("field \"") + name + "\" must be an integer");
  return v.get<int>();
}

Rational rational_value(const Json& v, const std::string& where) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw ParseError("coefficient of " + where + " must be a \"p/q\" string or an integer");
}

double double_value(const Json& v) {
  if (!v.is_number()) throw ParseError("expected a number");
  return v.get<double>();
}

Complex complex_value(const Json& v) {
  if (!v.is_array() || v.size() != 2) throw ParseError("complex entries are [re, im] pairs");
  return {double_value(v[0]), double_value(v[1])};
}

}  // namespace

View parse_view(const std::string& name) {
  if (name == "moments" || name == "M") return View::Moments;
  if (name == "R" || name == "r") return View::R;
  if (name == "eta" || name == "η") return View::Eta;
  throw ParseError("unknown view \"" + name + "\" (expected moments, R or eta)");
}

std::string view_name(View view) {
  switch (view) {
    case View::Moments:
      return "moments";
    case View::R:
      return "R";
    case View::Eta:
      return "eta";
  }
  return "moments";
}

Json series_to_json(const TruncatedSeries& f) {
  Json coeffs = Json::object();
  for (const auto& [w, c] : f.terms()) coeffs[w.to_string()] = format_rational(c);
  Json out;
  out["k"] = f.alphabet_size();
  out["degree"] = f.degree();
  out["coeffs"] = std::move(coeffs);
  return out;
}

TruncatedSeries series_from_json(const Json& j) {
  const int k = int_field(j, "k");
  const int degree = int_field(j, "degree");
  if (k < 1) throw ParseError("\"k\" must be >= 1");
  if (degree < 1) throw ParseError("\"degree\" must be >= 1");
  TruncatedSeries out(k, degree);
  auto it = j.find("coeffs");
  if (it == j.end()) return out;
  if (!it->is_object()) throw ParseError("\"coeffs\" must be an object");
  for (const auto& [key, value] : it->items()) {
    const Word w = Word::parse(key);
    for (int letter : w.letters()) {
      if (letter > k) throw ParseError("word \"" + key + "\" uses a letter outside 1.." + std::to_string(k));
    }
    if (static_cast<int>(w.size()) > degree) {
      throw ParseError("word \"" + key + "\" is longer than degree " + std::to_string(degree));
    }
    out.accumulate(w, rational_value(value, "\"" + key + "\""));
  }
  return out;
}

Json distribution_to_json(const Distribution& d, View view) {
  Json out;
  switch (view) {
    case View::Moments:
      out = series_to_json(d.moments());
      break;
    case View::R:
      out = series_to_json(d.r_view());
      break;
    case View::Eta:
      out = series_to_json(d.eta_view());
      break;
  }
  out["role"] = view_name(view);
  return out;
}

Distribution distribution_from_json(const Json& j) {
  View view = View::Moments;
  if (j.is_object()) {
    for (const char* key : {"view", "role"}) {
      auto it = j.find(key);
      if (it == j.end()) continue;
      if (!it->is_string()) throw ParseError(std::string("\"") + key + "\" must be a string");
      view = parse_view(it->get<std::string>());
      break;
    }
  }
  TruncatedSeries s = series_from_json(j);
  switch (view) {
    case View::Moments:
      return Distribution::from_moments(std::move(s));
    case View::R:
      return Distribution::from_r(s);
    case View::Eta:
      return Distribution::from_eta(s);
  }
  return Distribution::from_moments(std::move(s));
}

ModelInput model_input_from_json(const Json& j) {
  ModelInput input;
  input.dim = int_field(j, "dim");
  input.k = int_field(j, "k");
  if (input.dim < 1 || input.k < 1) throw ParseError("\"dim\" and \"k\" must be >= 1");
  const Json& mats = field(j, "matrices");
  if (!mats.is_array()) throw ParseError("\"matrices\" must be an array");
  for (const auto& m : mats) {
    // Accept rows-of-pairs or a flat row-major list of pairs.
    Eigen::MatrixXcd a(input.dim, input.dim);
    if (!m.is_array()) throw ParseError("each matrix must be an array");
    const auto d = static_cast<std::size_t>(input.dim);
    if (m.size() == d && m[0].is_array() && !m[0].empty() && m[0][0].is_array()) {
      for (std::size_t r = 0; r < d; ++r) {
        if (!m[r].is_array() || m[r].size() != d) throw ParseError("matrix rows must have dim entries");
        for (std::size_t c = 0; c < d; ++c) a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = complex_value(m[r][c]);
      }
    } else if (m.size() == d * d) {
      for (std::size_t e = 0; e < d * d; ++e) {
        a(static_cast<Eigen::Index>(e / d), static_cast<Eigen::Index>(e % d)) = complex_value(m[e]);
      }
    } else {
      throw ParseError("matrix must be dim x dim");
    }
    input.matrices.push_back(std::move(a));
  }
  const Json& state = field(j, "state");
  if (!state.is_array() || state.size() != static_cast<std::size_t>(input.dim)) {
    throw ParseError("\"state\" must have dim entries");
  }
  input.state.resize(input.dim);
  for (int r = 0; r < input.dim; ++r) input.state(r) = complex_value(state[static_cast<std::size_t>(r)]);
  return input;
}

Json model_input_to_json(const ModelInput& input) {
  Json mats = Json::array();
  for (const auto& a : input.matrices) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      Json row = Json::array();
      for (Eigen::Index c = 0; c < a.cols(); ++c) row.push_back({a(r, c).real(), a(r, c).imag()});
      rows.push_back(std::move(row));
    }
    mats.push_back(std::move(rows));
  }
  Json state = Json::array();
  for (Eigen::Index r = 0; r < input.state.size(); ++r) state.push_back({input.state(r).real(), input.state(r).imag()});
  Json out;
  out["dim"] = input.dim;
  out["k"] = input.k;
  out["matrices"] = std::move(mats);
  out["state"] = std::move(state);
  return out;
}

namespace {

Json assertion_to_json(const Assertion& a) {
  Json out;
  out["word"] = a.word;
  out["lhs"] = a.lhs;
  out["rhs"] = a.rhs;
  if (a.delta) out["delta"] = *a.delta;
  return out;
}

}  // namespace

Json report_to_json(const IdentityReport& report) {
  Json out;
  out["name"] = report.name;
  out["passed"] = report.passed();
  out["checked"] = report.checked;
  Json failures = Json::array();
  for (const auto& f : report.failures) failures.push_back(assertion_to_json(f));
  out["failures"] = std::move(failures);
  if (!report.details.empty()) {
    Json details = Json::array();
    for (const auto& d : report.details) details.push_back(assertion_to_json(d));
    out["words"] = std::move(details);
  }
  return out;
}

Json operator_report_to_json(const OperatorModelReport& report) {
  Json out;
  out["seed"] = report.seed;
  out["passed"] = report.passed();
  out["max_delta"] = report.max_delta;
  out["checks"] = Json::array({report_to_json(report.structure), report_to_json(report.moments),
                               report_to_json(report.lemma), report_to_json(report.vanishing)});
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace ncprob
