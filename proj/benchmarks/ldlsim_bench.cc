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

#include <benchmark/benchmark.h>

#include <random>

#include "ldlsim/bench.h"
#include "ldlsim/generators.h"
#include "ldlsim/ldl.h"
#include "ldlsim/oracle.h"
#include "ldlsim/sim.h"
#include "ldlsim/zx.h"

using namespace ldlsim;

static void BM_gf2_mul(benchmark::State &state) {
    std::mt19937_64 rng(1);
    const size_t n = state.range(0);
    BitMatrix a = random_matrix(rng, n, n), b = random_matrix(rng, n, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mul(a, b));
    }
}
BENCHMARK(BM_gf2_mul)->Arg(256)->Arg(512)->Arg(1024);

static void BM_ldl_dense(benchmark::State &state) {
    std::mt19937_64 rng(2);
    BitMatrix a = random_symmetric(rng, state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ldl_dense(a));
    }
}
BENCHMARK(BM_ldl_dense)->Arg(128)->Arg(256)->Arg(512);

static void BM_ldl_tree(benchmark::State &state) {
    std::mt19937_64 rng(3);
    auto [g, td] = planted_width_graph(rng, state.range(0), 8);
    PhasedAdjacency a = PhasedAdjacency::from_graph(g);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ldl_tree(a, td));
    }
}
BENCHMARK(BM_ldl_tree)->Arg(500)->Arg(1000)->Arg(2000)->Arg(4000);

static void BM_prepare_circuit(benchmark::State &state) {
    CliffordCircuit c = brickwork_circuit(16, state.range(0), 4);
    PgsInstance inst = reduce_to_pgs(c);
    for (auto _ : state) {
        benchmark::DoNotOptimize(prepare(inst.a, inst.td));
    }
}
BENCHMARK(BM_prepare_circuit)->Arg(1000)->Arg(2000)->Arg(4000)->Arg(8000);

static void BM_reduce_circuit(benchmark::State &state) {
    CliffordCircuit c = brickwork_circuit(16, state.range(0), 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(reduce_to_pgs(c));
    }
}
BENCHMARK(BM_reduce_circuit)->Arg(1000)->Arg(2000)->Arg(4000);

static void BM_strong_eval(benchmark::State &state) {
    std::mt19937_64 rng(6);
    CliffordCircuit c = brickwork_circuit(16, 2000, 6);
    PgsInstance inst = reduce_to_pgs(c);
    SimContext ctx = prepare(inst.a, inst.td);
    std::vector<BitVector> qs;
    for (int i = 0; i < state.range(0); i++) {
        qs.push_back(inst.query(random_vector(rng, 16)));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(strong_eval_fixed(ctx, inst.fixed, inst.y, qs));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_strong_eval)->Arg(64)->Arg(1024);

static void BM_sample_explicit(benchmark::State &state) {
    CircuitSampler s(brickwork_circuit(16, state.range(0), 7), SampleStrategy::Explicit);
    uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(s.sample(1024, seed++));
    }
    state.SetItemsProcessed(state.iterations() * 1024);
}
BENCHMARK(BM_sample_explicit)->Arg(1000)->Arg(2000)->Arg(4000);

static void BM_sample_direct(benchmark::State &state) {
    CircuitSampler s(brickwork_circuit(16, state.range(0), 8), SampleStrategy::Direct);
    uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(s.sample(1024, seed++));
    }
    state.SetItemsProcessed(state.iterations() * 1024);
}
BENCHMARK(BM_sample_direct)->Arg(1000)->Arg(2000);

static void BM_tableau(benchmark::State &state) {
    CliffordCircuit c = brickwork_circuit(state.range(0), 4000, 9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(tableau_run(c));
    }
}
BENCHMARK(BM_tableau)->Arg(16)->Arg(64)->Arg(256);

BENCHMARK_MAIN();
