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

#include "ldlsim/bench.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

#include "ldlsim/generators.h"
#include "ldlsim/oracle.h"
#include "ldlsim/rng.h"
#include "ldlsim/sim.h"
#include "ldlsim/treedec.h"

namespace ldlsim {

namespace {

template <typename F>
double median_seconds(int reps, F &&body) {
    std::vector<double> t;
    for (int r = 0; r < std::max(reps, 1); r++) {
        auto start = std::chrono::steady_clock::now();
        body();
        t.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }
    std::sort(t.begin(), t.end());
    return t[t.size() / 2];
}

// Keeps results observable so the timed work is not elided.
volatile size_t sink;

}  // namespace

CliffordCircuit brickwork_circuit(size_t n, size_t m, uint64_t seed) {
    static const GateKind one[] = {GateKind::H, GateKind::S, GateKind::SDG, GateKind::Z, GateKind::X};
    std::mt19937_64 rng(seed);
    CliffordCircuit c;
    c.num_qubits = n;
    for (size_t layer = 0; c.gates.size() < m; layer++) {
        for (uint32_t q = 0; q < n && c.gates.size() < m; q++) {
            c.gates.push_back({rng() % 3 ? GateKind::H : one[rng() % 5], q});
        }
        for (uint32_t q = layer % 2; q + 1 < n && c.gates.size() < m; q += 2) {
            c.gates.push_back({GateKind::CZ, q, q + 1});
        }
    }
    return c;
}

double time_reduce(const CliffordCircuit &c, int reps) {
    return median_seconds(reps, [&] { sink = reduce_to_pgs(c).a.size(); });
}

double time_prepare(const PgsInstance &inst, int reps) {
    return median_seconds(reps, [&] { sink = prepare(inst.a, inst.td).k; });
}

double time_strong(const CliffordCircuit &c, size_t k, uint64_t seed, int reps) {
    std::mt19937_64 rng(seed);
    std::vector<BitVector> xs;
    for (size_t i = 0; i < k; i++) {
        xs.push_back(random_vector(rng, c.num_qubits));
    }
    PgsInstance inst = reduce_to_pgs(c);
    SimContext ctx = prepare(inst.a, inst.td);
    std::vector<BitVector> qs;
    for (const auto &x : xs) {
        qs.push_back(inst.query(x));
    }
    return median_seconds(reps, [&] { sink = strong_eval_fixed(ctx, inst.fixed, inst.y, qs).size(); });
}

double time_sample(const CircuitSampler &s, size_t k, uint64_t seed, int reps) {
    return median_seconds(reps, [&] { sink = s.sample(k, seed).size(); });
}

double time_tableau(const CliffordCircuit &c, int reps) {
    return median_seconds(reps, [&] { sink = tableau_run(c).n; });
}

std::vector<BenchRow> run_bench(const BenchConfig &config) {
    std::vector<BenchRow> rows;
    for (size_t n : config.qubits) {
        for (size_t m : config.gates) {
            const uint64_t seed = rng_key(config.seed, n, m);
            CliffordCircuit c = brickwork_circuit(n, m, seed);
            PgsInstance inst = reduce_to_pgs(c);
            const int width = inst.td ? inst.td->width() : static_cast<int>(inst.a.size()) - 1;
            rows.push_back({"reduce", n, m, 0, width, time_reduce(c, config.reps)});
            rows.push_back({"prepare", n, m, 0, width, time_prepare(inst, config.reps)});
            if (n <= config.tableau_limit) {
                rows.push_back({"tableau", n, m, 0, width, time_tableau(c, config.reps)});
            }
            CircuitSampler sampler(c, SampleStrategy::Explicit);
            for (size_t k : config.samples) {
                rows.push_back({"strong", n, m, k, width, time_strong(c, k, seed, config.reps)});
                rows.push_back({"sample", n, m, k, width, time_sample(sampler, k, seed, config.reps)});
            }
        }
    }
    return rows;
}

std::string format_bench(const std::vector<BenchRow> &rows) {
    std::ostringstream out;
    out << "op\tn\tm\tk\twidth\tseconds\n";
    for (const auto &r : rows) {
        char t[32];
        std::snprintf(t, sizeof(t), "%.6e", r.seconds);
        out << r.op << "\t" << r.n << "\t" << r.m << "\t" << r.k << "\t" << r.width << "\t" << t << "\n";
    }
    return out.str();
}

ScalingReport measure_scaling(size_t n, size_t m, size_t k, uint64_t seed, int reps) {
    ScalingReport rep;
    double prep[2], marginal[2];
    for (int i = 0; i < 2; i++) {
        const size_t mm = m << i;
        CliffordCircuit c = brickwork_circuit(n, mm, rng_key(seed, n, m));
        PgsInstance inst = reduce_to_pgs(c);
        const int width = inst.td ? inst.td->width() : static_cast<int>(inst.a.size()) - 1;
        prep[i] = time_prepare(inst, reps);
        CircuitSampler sampler(c, SampleStrategy::Explicit);
        double t1 = time_sample(sampler, k, seed, reps);
        double t2 = time_sample(sampler, 2 * k, seed, reps);
        marginal[i] = std::max(t2 - t1, 1e-12) / static_cast<double>(k);
        rep.rows.push_back({"prepare", n, mm, 0, width, prep[i]});
        rep.rows.push_back({"sample", n, mm, k, width, t1});
        rep.rows.push_back({"sample", n, mm, 2 * k, width, t2});
    }
    rep.prepare_ratio = prep[1] / prep[0];
    rep.sample_ratio = marginal[1] / marginal[0];
    return rep;
}

}  // namespace ldlsim
