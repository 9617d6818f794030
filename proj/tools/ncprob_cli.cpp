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

// Command-line front end over the C interface.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ncprob/ncprob.h"

namespace {

enum Exit { kPass = 0, kVerifyFailed = 1, kUsage = 2, kDomain = 3 };

// Thrown on any library failure; carries the exit code.
struct CliFailure {
  int code;
  std::string message;
};

int exit_code_for(ncp_status status) {
  switch (status) {
    case NCP_OK:
      return kPass;
    case NCP_ERR_INVALID_ARGUMENT:
    case NCP_ERR_PARSE:
      return kUsage;
    default:
      return kDomain;
  }
}

void check(ncp_status status) {
  if (status != NCP_OK) {
    throw CliFailure{exit_code_for(status), std::string(ncp_status_string(status)) + ": " + ncp_last_error()};
  }
}

struct DistFree {
  void operator()(ncp_distribution* d) const { ncp_distribution_free(d); }
};
struct SeriesFree {
  void operator()(ncp_series* s) const { ncp_series_free(s); }
};
struct StringFree {
  void operator()(char* s) const { ncp_string_free(s); }
};
using Dist = std::unique_ptr<ncp_distribution, DistFree>;
using Series = std::unique_ptr<ncp_series, SeriesFree>;
using Text = std::unique_ptr<char, StringFree>;

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw CliFailure{kUsage, "cannot read input file '" + path + "'"};
    buf << in.rdbuf();
  }
  return buf.str();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw CliFailure{kUsage, "cannot write output file '" + out_path + "'"};
  out << text << '\n';
}

Dist load_distribution(const std::string& path) {
  ncp_distribution* d = nullptr;
  check(ncp_distribution_from_json(read_input(path).c_str(), &d));
  return Dist(d);
}

std::string take(char* raw) {
  Text owned(raw);
  return owned ? std::string(owned.get()) : std::string();
}

std::string dist_json(const Dist& d, const std::string& view) {
  char* raw = nullptr;
  check(ncp_distribution_to_json(d.get(), view.c_str(), &raw));
  return take(raw);
}

struct TransformArgs {
  std::string op;
  std::vector<std::string> inputs;
  std::optional<std::string> t;
  std::optional<std::string> r;
  int k = 1;
  int degree = 6;
  std::string view = "moments";
  std::string out;
};

std::string need(const std::optional<std::string>& value, const char* flag, const std::string& op) {
  if (!value) throw CliFailure{kUsage, "--op " + op + " requires " + flag};
  return *value;
}

void need_inputs(const TransformArgs& a, std::size_t count) {
  if (a.inputs.size() != count) {
    throw CliFailure{kUsage, "--op " + a.op + " takes " + std::to_string(count) + " input file(s), got " +
                                 std::to_string(a.inputs.size())};
  }
}

int run_transform(const TransformArgs& a) {
  ncp_distribution* raw = nullptr;
  const std::string& op = a.op;
  if (op == "reta" || op == "reta-inv") {
    need_inputs(a, 1);
    ncp_series* in = nullptr;
    check(ncp_series_from_json(read_input(a.inputs[0]).c_str(), &in));
    Series f(in);
    ncp_series* result = nullptr;
    check(op == "reta" ? ncp_reta(f.get(), &result) : ncp_reta_inverse(f.get(), &result));
    Series g(result);
    char* text = nullptr;
    check(ncp_series_to_json(g.get(), &text));
    write_output(take(text), a.out);
    return kPass;
  }
  if (op == "semicircular") {
    if (!a.inputs.empty()) throw CliFailure{kUsage, "--op semicircular takes no input file"};
    check(ncp_semicircular(need(a.t, "--t", op).c_str(), a.k, a.degree, &raw));
  } else if (op == "free-conv" || op == "boolean-conv" || op == "mult-conv") {
    need_inputs(a, 2);
    Dist x = load_distribution(a.inputs[0]);
    Dist y = load_distribution(a.inputs[1]);
    auto fn = op == "free-conv" ? ncp_free_convolve : op == "boolean-conv" ? ncp_boolean_convolve : ncp_mult_convolve;
    check(fn(x.get(), y.get(), &raw));
  } else {
    need_inputs(a, 1);
    Dist d = load_distribution(a.inputs[0]);
    if (op == "bt") {
      check(ncp_bbp_transform(d.get(), need(a.t, "--t", op).c_str(), &raw));
    } else if (op == "phi") {
      check(ncp_phi(d.get(), &raw));
    } else if (op == "free-power") {
      check(ncp_free_power(d.get(), need(a.t, "--t", op).c_str(), &raw));
    } else if (op == "boolean-power") {
      check(ncp_boolean_power(d.get(), need(a.t, "--t", op).c_str(), &raw));
    } else if (op == "dilate") {
      check(ncp_dilate(d.get(), need(a.r ? a.r : a.t, "--r", op).c_str(), &raw));
    } else if (op == "brownian") {
      check(ncp_brownian_moments(d.get(), need(a.t, "--t", op).c_str(), &raw));
    } else {
      throw CliFailure{kUsage, "unknown --op '" + op + "'"};
    }
  }
  Dist result(raw);
  write_output(dist_json(result, a.view), a.out);
  return kPass;
}

struct VerifyArgs {
  std::string suite;
  int k = 2;
  int degree = 6;
  std::uint64_t seed = 7;
  int trials = 5;
  int n = 7;
  int dim = 3;
  double tolerance = 1e-9;
  std::string t;
  std::string input;
  std::string out;
};

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

int run_verify(const VerifyArgs& a) {
  int passed = 0;
  char* report = nullptr;
  if (!a.input.empty()) {
    if (a.suite != "operator-model") throw CliFailure{kUsage, "--input is only accepted by the operator-model suite"};
    check(ncp_operator_model_verify(read_input(a.input).c_str(), a.degree, a.tolerance, &passed, &report));
  } else {
    std::ostringstream params;
    params.precision(17);
    params << "{\"k\":" << a.k << ",\"degree\":" << a.degree << ",\"seed\":" << a.seed << ",\"trials\":" << a.trials
           << ",\"n\":" << a.n << ",\"dim\":" << a.dim << ",\"tolerance\":" << a.tolerance;
    if (!a.t.empty()) {
      params << ",\"t\":[";
      std::stringstream list(a.t);
      std::string item;
      bool first = true;
      while (std::getline(list, item, ',')) {
        params << (first ? "" : ",") << json_string(item);
        first = false;
      }
      params << "]";
    }
    params << "}";
    check(ncp_verify(a.suite.c_str(), params.str().c_str(), &passed, &report));
  }
  write_output(take(report), a.out);
  std::cerr << a.suite << ": " << (passed ? "PASS" : "FAIL") << '\n';
  return passed ? kPass : kVerifyFailed;
}

int run_enumerate(const std::string& kind, int n, bool list, const std::string& out) {
  std::uint64_t count = 0;
  char* listing = nullptr;
  check(ncp_enumerate(kind.c_str(), n, &count, list ? &listing : nullptr));
  std::string text = std::to_string(count);
  if (list) {
    std::string body = take(listing);
    if (!body.empty() && body.back() == '\n') body.pop_back();
    text += '\n' + body;
  }
  write_output(text, out);
  return kPass;
}

std::vector<std::string> suite_list() {
  char* raw = nullptr;
  check(ncp_suite_names(&raw));
  std::vector<std::string> names;
  std::stringstream in(take(raw));
  for (std::string line; std::getline(in, line);) names.push_back(line);
  return names;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact multi-variable free probability: transforms, verification suites, partition enumeration"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ncp_version()));

  TransformArgs ta;
  auto* transform = app.add_subcommand("transform", "Apply a transform to serialized distributions");
  transform
      ->add_option("--op", ta.op,
                   "bt, phi, reta, reta-inv, free-power, boolean-power, free-conv, boolean-conv, mult-conv, dilate, "
                   "semicircular, brownian")
      ->required();
  transform->add_option("inputs", ta.inputs, "Input JSON files ('-' for stdin)");
  transform->add_option("--t", ta.t, "Time or exponent parameter (p/q)");
  transform->add_option("--r", ta.r, "Dilation factor (p/q)");
  transform->add_option("--k", ta.k, "Alphabet size (semicircular)")->check(CLI::PositiveNumber);
  transform->add_option("--degree", ta.degree, "Truncation degree (semicircular)")->check(CLI::PositiveNumber);
  transform->add_option("--view", ta.view, "Output view: moments, R or eta")
      ->check(CLI::IsMember({"moments", "R", "eta"}));
  transform->add_option("--out", ta.out, "Write output here instead of stdout");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a named verification suite");
  verify->add_option("suite", va.suite, "Suite name")->required();
  verify->add_option("--k", va.k, "Alphabet size")->check(CLI::PositiveNumber);
  verify->add_option("--degree", va.degree, "Truncation degree")->check(CLI::PositiveNumber);
  verify->add_option("--seed", va.seed, "Random seed");
  verify->add_option("--trials", va.trials, "Random instances")->check(CLI::NonNegativeNumber);
  verify->add_option("--n", va.n, "Partition size for combinatorial suites")->check(CLI::PositiveNumber);
  verify->add_option("--dim", va.dim, "Hilbert dimension (operator-model)")->check(CLI::PositiveNumber);
  verify->add_option("--t", va.t, "Comma-separated parameter list, e.g. 1/2,1,3");
  verify->add_option("--tolerance", va.tolerance, "Floating tolerance (operator-model)");
  verify->add_option("--input", va.input, "ModelInput JSON (operator-model)");
  verify->add_option("--out", va.out, "Write the report here instead of stdout");

  std::string kind;
  int n = 0;
  bool list = false;
  std::string enum_out;
  auto* enumerate = app.add_subcommand("enumerate", "Count (and list) partitions");
  enumerate->add_option("kind", kind, "nc, nc2 or interval")->required()->check(CLI::IsMember({"nc", "nc2", "interval"}));
  enumerate->add_option("n", n, "Ground set size")->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--list", list, "Print every partition");
  enumerate->add_option("--out", enum_out, "Write output here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*transform) return run_transform(ta);
    if (*verify) {
      const auto names = suite_list();
      if (std::find(names.begin(), names.end(), va.suite) == names.end()) {
        std::string all;
        for (const auto& s : names) all += (all.empty() ? "" : ", ") + s;
        throw CliFailure{kUsage, "unknown suite '" + va.suite + "' (available: " + all + ")"};
      }
      return run_verify(va);
    }
    if (*enumerate) return run_enumerate(kind, n, list, enum_out);
  } catch (const CliFailure& f) {
    std::cerr << "ncprob: " << f.message << '\n';
    return f.code;
  }
  return kUsage;
}
