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

#include "ncprob/error.hpp"

#include <atomic>
#include <iostream>

#include "ncprob/series.hpp"

namespace ncprob {

void warn(const std::string& message) { std::cerr << "ncprob: warning: " << message << '\n'; }

namespace detail {

void warn_degree_cap(int degree) {
  static std::atomic<bool> warned{false};
  if (!warned.exchange(true)) {
    warn("truncation degree " + std::to_string(degree) + " exceeds the advisory cap of " +
         std::to_string(kAdvisoryDegreeCap) + "; partition sums grow like Catalan numbers");
  }
}

}  // namespace detail
}  // namespace ncprob
