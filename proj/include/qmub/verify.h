// Copyright 2026 The qmub Authors
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

#ifndef QMUB_VERIFY_H
#define QMUB_VERIFY_H

#include <cstdint>
#include <string>
#include <vector>

namespace qmub {

inline constexpr std::uint64_t kDefaultSeed = 20260101;

struct VerifyOptions {
    int d_max = 8;
    std::uint64_t seed = kDefaultSeed;
};

/// One invariant checked over a parameter grid.
///
/// Exact checks use tolerance 0 and report residual 0 (all cases hold) or 1.
struct InvariantResult {
    std::string suite;
    std::string name;
    std::int64_t cases = 0;
    double max_residual = 0;
    double tolerance = 0;
    bool pass() const {
        return max_residual <= tolerance;
    }
};

const std::vector<std::string> &suite_names();
bool is_suite_name(const std::string &name);

/// Runs one suite, or every suite for "all". Throws std::invalid_argument for
/// unknown names or d_max < 2.
std::vector<InvariantResult> run_verify(const std::string &suite, const VerifyOptions &opts);

}  // namespace qmub

#endif
