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

#ifndef LDLSIM_TOOLS_COMMANDS_H
#define LDLSIM_TOOLS_COMMANDS_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ldlsim::cli {

struct RunConfig {
    std::string subcommand;
    std::vector<std::string> inputs;
    uint64_t seed = 0;
    size_t count = 0;
    /// direct, explicit or auto.
    std::string strategy = "auto";
    /// exact or float.
    std::string render = "exact";
    size_t t_cap = 20;
    size_t min_qubits = 0;
};

/// Parses `args` (without the program name), runs the subcommand and returns the exit status.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace ldlsim::cli

#endif
