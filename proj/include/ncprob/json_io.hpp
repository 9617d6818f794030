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

#include <json.hpp>

#include <string>

#include "ncprob/distribution.hpp"
#include "ncprob/operator_model.hpp"

namespace ncprob {

using Json = nlohmann::ordered_json;

enum class View { Moments, R, Eta };

View parse_view(const std::string& name);
std::string view_name(View view);

/// {"k", "degree", "coeffs": {"1,2": "p/q"}}, words in canonical order, zeros omitted.
Json series_to_json(const TruncatedSeries& f);
TruncatedSeries series_from_json(const Json& j);

/// Series JSON of the requested view plus a "role" marker ("moments", "R" or "eta").
Json distribution_to_json(const Distribution& d, View view = View::Moments);
/// Reads a series JSON whose "view" (or "role") field names moments, R or eta;
/// moments when absent.
Distribution distribution_from_json(const Json& j);

ModelInput model_input_from_json(const Json& j);
Json model_input_to_json(const ModelInput& input);

Json report_to_json(const IdentityReport& report);
Json operator_report_to_json(const OperatorModelReport& report);

/// Parses text, mapping syntax errors to ParseError.
Json parse_json(const std::string& text);

}  // namespace ncprob
