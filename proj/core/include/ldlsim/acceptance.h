// Copyright 2025 The ldlsim Authors
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

#ifndef LDLSIM_ACCEPTANCE_H
#define LDLSIM_ACCEPTANCE_H

#include <cstdint>
#include <string>
#include <vector>

#include "ldlsim/sim.h"

namespace ldlsim {

struct AcceptanceOptions {
    /// Smaller instance counts and sizes for desk runs.
    bool quick = false;
    /// Rules used by every simulator call in the suite.
    SimOptions sim;
    uint64_t seed = 0;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

constexpr int NUM_CRITERIA = 11;

/// Short name of criterion `id` in [1, NUM_CRITERIA].
std::string criterion_name(int id);

/// Runs one criterion. Exceptions thrown by the code under test are reported as failures.
CriterionResult run_criterion(int id, const AcceptanceOptions &options);

/// Runs the listed criteria, or all of them when `ids` is empty.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions &options, const std::vector<int> &ids = {});

/// "PASS [id] name: detail (t s)" or the same with FAIL.
std::string format_result(const CriterionResult &r);

}  // namespace ldlsim

#endif
