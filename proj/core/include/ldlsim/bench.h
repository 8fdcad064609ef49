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

#ifndef LDLSIM_BENCH_H
#define LDLSIM_BENCH_H

#include <cstdint>
#include <string>
#include <vector>

#include "ldlsim/circuit.h"
#include "ldlsim/zx.h"

namespace ldlsim {

struct BenchRow {
    /// reduce, prepare, strong, sample or tableau.
    std::string op;
    size_t n = 0;
    size_t m = 0;
    size_t k = 0;
    int width = 0;
    /// Median over repetitions.
    double seconds = 0;
};

struct BenchConfig {
    std::vector<size_t> qubits{8, 16, 32};
    std::vector<size_t> gates{1000, 2000, 4000};
    std::vector<size_t> samples{10000, 20000};
    int reps = 3;
    uint64_t seed = 0;
    size_t tableau_limit = 256;
};

/// Layered circuit on n qubits: each layer is a random one-qubit gate per qubit followed by CZ
/// on alternating nearest-neighbour pairs, truncated to m gates.
CliffordCircuit brickwork_circuit(size_t n, size_t m, uint64_t seed);

double time_reduce(const CliffordCircuit &c, int reps);
double time_prepare(const PgsInstance &inst, int reps);
double time_strong(const CliffordCircuit &c, size_t k, uint64_t seed, int reps);
double time_sample(const CircuitSampler &s, size_t k, uint64_t seed, int reps);
double time_tableau(const CliffordCircuit &c, int reps);

std::vector<BenchRow> run_bench(const BenchConfig &config);
/// Tab-separated, with a header line.
std::string format_bench(const std::vector<BenchRow> &rows);

struct ScalingReport {
    /// prepare(2m) / prepare(m).
    double prepare_ratio = 0;
    /// Marginal explicit-basis time per sample at 2m over the same at m.
    double sample_ratio = 0;
    std::vector<BenchRow> rows;
};

/// Fixed n (hence fixed slice width), m and 2m gates, k and 2k explicit-basis samples.
ScalingReport measure_scaling(size_t n, size_t m, size_t k, uint64_t seed, int reps);

}  // namespace ldlsim

#endif
