// Copyright 2026 The imkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "imkit/errors.hpp"

#include <cstdio>

namespace imkit {

const char *to_string(ErrorCategory c) noexcept {
    switch (c) {
    case ErrorCategory::dimension: return "dimension";
    case ErrorCategory::invariant: return "invariant";
    case ErrorCategory::domain: return "domain";
    case ErrorCategory::convergence: return "convergence";
    case ErrorCategory::parse: return "parse";
    case ErrorCategory::solver: return "solver";
    }
    return "unknown";
}

std::string format_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

} // namespace imkit
