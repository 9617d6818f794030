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

#include "ncprob/ncprob.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>

#include "ncprob/brownian.hpp"
#include "ncprob/distribution.hpp"
#include "ncprob/json_io.hpp"
#include "ncprob/verify.hpp"

struct ncp_series {
  ncprob::TruncatedSeries value;
};

struct ncp_distribution {
  ncprob::Distribution value;
};

namespace {

thread_local std::string last_error;

ncp_status fail(ncp_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class F>
ncp_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return NCP_OK;
  } catch (const ncprob::ParseError& e) {
    return fail(NCP_ERR_PARSE, e.what());
  } catch (const ncprob::DomainError& e) {
    return fail(NCP_ERR_DOMAIN, e.what());
  } catch (const ncprob::DegreeExceeded& e) {
    return fail(NCP_ERR_DEGREE_EXCEEDED, e.what());
  } catch (const ncprob::MismatchError& e) {
    return fail(NCP_ERR_ALPHABET_MISMATCH, e.what());
  } catch (const ncprob::PreconditionError& e) {
    return fail(NCP_ERR_PRECONDITION, e.what());
  } catch (const std::bad_alloc&) {
    return fail(NCP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(NCP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(NCP_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define NCP_REQUIRE(ptr)                                                   \
  do {                                                                     \
    if (!(ptr)) return fail(NCP_ERR_INVALID_ARGUMENT, #ptr " is null");   \
  } while (0)

ncp_status emit(ncprob::Distribution d, ncp_distribution** out) {
  *out = new ncp_distribution{std::move(d)};
  return NCP_OK;
}

template <class F>
ncp_status unary(const ncp_distribution* d, const char* param, ncp_distribution** out, F&& op) {
  NCP_REQUIRE(d);
  NCP_REQUIRE(param);
  NCP_REQUIRE(out);
  return guarded([&] { emit(op(d->value, ncprob::parse_rational(param)), out); });
}

template <class F>
ncp_status binary(const ncp_distribution* a, const ncp_distribution* b, ncp_distribution** out, F&& op) {
  NCP_REQUIRE(a);
  NCP_REQUIRE(b);
  NCP_REQUIRE(out);
  return guarded([&] { emit(op(a->value, b->value), out); });
}

ncprob::SuiteOptions parse_options(const char* params_json) {
  ncprob::SuiteOptions o;
  if (!params_json || !*params_json) return o;
  const ncprob::Json j = ncprob::parse_json(params_json);
  if (!j.is_object()) throw ncprob::ParseError("verification parameters must be a JSON object");
  auto get_int = [&](const char* key, int& dst) {
    if (auto it = j.find(key); it != j.end()) {
      if (!it->is_number_integer()) throw ncprob::ParseError(std::string("\"") + key + "\" must be an integer");
      dst = it->get<int>();
    }
  };
  get_int("k", o.k);
  get_int("degree", o.degree);
  get_int("trials", o.trials);
  get_int("n", o.n);
  get_int("dim", o.dim);
  if (auto it = j.find("seed"); it != j.end()) {
    if (!it->is_number_unsigned()) throw ncprob::ParseError("\"seed\" must be a non-negative integer");
    o.seed = it->get<std::uint64_t>();
  }
  if (auto it = j.find("tolerance"); it != j.end()) {
    if (!it->is_number()) throw ncprob::ParseError("\"tolerance\" must be a number");
    o.tolerance = it->get<double>();
  }
  if (auto it = j.find("t"); it != j.end()) {
    if (!it->is_array()) throw ncprob::ParseError("\"t\" must be an array of rational strings");
    for (const auto& v : *it) {
      if (!v.is_string()) throw ncprob::ParseError("\"t\" entries must be rational strings");
      o.t.push_back(ncprob::parse_rational(v.get<std::string>()));
    }
  }
  return o;
}

ncprob::Json options_to_json(const ncprob::SuiteOptions& o) {
  ncprob::Json out;
  out["k"] = o.k;
  out["degree"] = o.degree;
  out["seed"] = o.seed;
  out["trials"] = o.trials;
  out["n"] = o.n;
  if (!o.t.empty()) {
    ncprob::Json ts = ncprob::Json::array();
    for (const auto& t : o.t) ts.push_back(ncprob::format_rational(t));
    out["t"] = std::move(ts);
  }
  out["dim"] = o.dim;
  out["tolerance"] = o.tolerance;
  return out;
}

}  // namespace

extern "C" {

const char* ncp_version(void) { return "1.0.0"; }

const char* ncp_last_error(void) { return last_error.c_str(); }

const char* ncp_status_string(ncp_status status) {
  switch (status) {
    case NCP_OK:
      return "ok";
    case NCP_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case NCP_ERR_PARSE:
      return "parse error";
    case NCP_ERR_DOMAIN:
      return "domain error";
    case NCP_ERR_DEGREE_EXCEEDED:
      return "degree exceeded";
    case NCP_ERR_ALPHABET_MISMATCH:
      return "alphabet mismatch";
    case NCP_ERR_PRECONDITION:
      return "precondition violated";
    case NCP_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void ncp_string_free(char* text) { std::free(text); }

ncp_status ncp_series_from_json(const char* json, ncp_series** out) {
  NCP_REQUIRE(json);
  NCP_REQUIRE(out);
  return guarded([&] { *out = new ncp_series{ncprob::series_from_json(ncprob::parse_json(json))}; });
}

ncp_status ncp_series_to_json(const ncp_series* series, char** out) {
  NCP_REQUIRE(series);
  NCP_REQUIRE(out);
  return guarded([&] { *out = copy_string(ncprob::series_to_json(series->value).dump()); });
}

ncp_status ncp_series_coefficient(const ncp_series* series, const char* word, char** out) {
  NCP_REQUIRE(series);
  NCP_REQUIRE(word);
  NCP_REQUIRE(out);
  return guarded([&] {
    *out = copy_string(ncprob::format_rational(series->value.coefficient(ncprob::Word::parse(word))));
  });
}

void ncp_series_free(ncp_series* series) { delete series; }

ncp_status ncp_reta(const ncp_series* f, ncp_series** out) {
  NCP_REQUIRE(f);
  NCP_REQUIRE(out);
  return guarded([&] { *out = new ncp_series{ncprob::reta(f->value)}; });
}

ncp_status ncp_reta_inverse(const ncp_series* g, ncp_series** out) {
  NCP_REQUIRE(g);
  NCP_REQUIRE(out);
  return guarded([&] { *out = new ncp_series{ncprob::reta_inverse(g->value)}; });
}

ncp_status ncp_distribution_from_json(const char* json, ncp_distribution** out) {
  NCP_REQUIRE(json);
  NCP_REQUIRE(out);
  return guarded([&] { emit(ncprob::distribution_from_json(ncprob::parse_json(json)), out); });
}

ncp_status ncp_distribution_to_json(const ncp_distribution* d, const char* view, char** out) {
  NCP_REQUIRE(d);
  NCP_REQUIRE(out);
  return guarded([&] {
    const auto v = view ? ncprob::parse_view(view) : ncprob::View::Moments;
    *out = copy_string(ncprob::distribution_to_json(d->value, v).dump());
  });
}

ncp_status ncp_distribution_shape(const ncp_distribution* d, int* k, int* degree) {
  NCP_REQUIRE(d);
  if (k) *k = d->value.alphabet_size();
  if (degree) *degree = d->value.degree();
  return NCP_OK;
}

void ncp_distribution_free(ncp_distribution* d) { delete d; }

ncp_status ncp_semicircular(const char* t, int k, int degree, ncp_distribution** out) {
  NCP_REQUIRE(t);
  NCP_REQUIRE(out);
  return guarded([&] { emit(ncprob::semicircular(ncprob::parse_rational(t), k, degree), out); });
}

ncp_status ncp_free_convolve(const ncp_distribution* a, const ncp_distribution* b, ncp_distribution** out) {
  return binary(a, b, out, ncprob::free_convolve);
}

ncp_status ncp_boolean_convolve(const ncp_distribution* a, const ncp_distribution* b, ncp_distribution** out) {
  return binary(a, b, out, ncprob::boolean_convolve);
}

ncp_status ncp_mult_convolve(const ncp_distribution* a, const ncp_distribution* b, ncp_distribution** out) {
  return binary(a, b, out, ncprob::mult_convolve);
}

ncp_status ncp_free_power(const ncp_distribution* d, const char* t, ncp_distribution** out) {
  return unary(d, t, out, ncprob::free_power);
}

ncp_status ncp_boolean_power(const ncp_distribution* d, const char* t, ncp_distribution** out) {
  return unary(d, t, out, ncprob::boolean_power);
}

ncp_status ncp_bbp_transform(const ncp_distribution* d, const char* t, ncp_distribution** out) {
  return unary(d, t, out, [](const ncprob::Distribution& x, const ncprob::Rational& s) {
    return ncprob::bbp_transform(x, s);
  });
}

ncp_status ncp_dilate(const ncp_distribution* d, const char* r, ncp_distribution** out) {
  return unary(d, r, out, ncprob::dilate_dist);
}

ncp_status ncp_phi(const ncp_distribution* nu, ncp_distribution** out) {
  NCP_REQUIRE(nu);
  NCP_REQUIRE(out);
  return guarded([&] { emit(ncprob::phi_map(nu->value), out); });
}

ncp_status ncp_brownian_moments(const ncp_distribution* nu, const char* t, ncp_distribution** out) {
  return unary(nu, t, out, ncprob::brownian_moments);
}

ncp_status ncp_enumerate(const char* kind, int n, uint64_t* count, char** listing) {
  NCP_REQUIRE(kind);
  NCP_REQUIRE(count);
  const std::string k = kind;
  if (k != "nc" && k != "nc2" && k != "interval") {
    return fail(NCP_ERR_INVALID_ARGUMENT, "unknown partition kind \"" + k + "\" (expected nc, nc2 or interval)");
  }
  return guarded([&] {
    if (n < 1) throw ncprob::PreconditionError("n must be >= 1");
    const auto parts = k == "nc" ? ncprob::enumerate_nc(n) : k == "nc2" ? ncprob::enumerate_nc_le2(n)
                                                                        : ncprob::enumerate_interval(n);
    *count = parts.size();
    if (listing) {
      std::string text;
      for (const auto& p : parts) text += p.to_string() + '\n';
      *listing = copy_string(text);
    }
  });
}

ncp_status ncp_verify(const char* suite, const char* params_json, int* passed, char** report_json) {
  NCP_REQUIRE(suite);
  NCP_REQUIRE(passed);
  const auto& names = ncprob::suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    return fail(NCP_ERR_INVALID_ARGUMENT, std::string("unknown verification suite \"") + suite + "\"");
  }
  return guarded([&] {
    const auto report = ncprob::run_suite(suite, parse_options(params_json));
    *passed = report.passed() ? 1 : 0;
    if (report_json) {
      ncprob::Json out;
      out["suite"] = report.suite;
      out["passed"] = report.passed();
      out["options"] = options_to_json(report.options);
      ncprob::Json checks = ncprob::Json::array();
      for (const auto& c : report.checks) checks.push_back(ncprob::report_to_json(c));
      out["checks"] = std::move(checks);
      *report_json = copy_string(out.dump(2));
    }
  });
}

ncp_status ncp_suite_names(char** out) {
  NCP_REQUIRE(out);
  return guarded([&] {
    std::string text;
    for (const auto& name : ncprob::suite_names()) text += name + '\n';
    *out = copy_string(text);
  });
}

ncp_status ncp_operator_model_verify(const char* input_json, int degree, double tolerance, int* passed,
                                     char** report_json) {
  NCP_REQUIRE(input_json);
  NCP_REQUIRE(passed);
  return guarded([&] {
    const auto input = ncprob::model_input_from_json(ncprob::parse_json(input_json));
    const auto report = ncprob::verify_phi_model(input, degree, tolerance);
    *passed = report.passed() ? 1 : 0;
    if (report_json) *report_json = copy_string(ncprob::operator_report_to_json(report).dump(2));
  });
}

}  // extern "C"
