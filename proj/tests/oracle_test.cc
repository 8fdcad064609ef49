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

#include "ldlsim/oracle.h"

#include <gtest/gtest.h>

#include <cmath>

#include "test_util.h"

using namespace ldlsim;
using ldlsim::testing::random_circuit;
using ldlsim::testing::random_phased;

TEST(oracle, statevector_examples) {
    double r = 1 / std::sqrt(2.0);
    DenseState s = statevector(parse_circuit("H 0"));
    EXPECT_NEAR(std::abs(s.amps[0] - r), 0, 1e-12);
    EXPECT_NEAR(std::abs(s.amps[1] - r), 0, 1e-12);

    s = statevector(parse_circuit("X 0\nH 1\nCZ 0 1\nH 1"));
    EXPECT_NEAR(std::abs(s.amps[3] + 0.0 - 1.0), 0, 1e-12);

    s = statevector(parse_circuit("H 0\nCNOT 0 1"));
    EXPECT_NEAR(std::abs(s.amps[0] - r), 0, 1e-12);
    EXPECT_NEAR(std::abs(s.amps[3] - r), 0, 1e-12);
    EXPECT_NEAR(std::abs(s.amps[1]), 0, 1e-12);

    CliffordCircuit big;
    big.num_qubits = 15;
    EXPECT_THROW(statevector(big), std::invalid_argument);
}

TEST(oracle, brute_amplitude_examples) {
    EXPECT_EQ(pgs_brute_amplitude(PhasedAdjacency(3), BitVector(3)), ExactAmplitude::from_int(1));
    PhasedAdjacency a(1);
    a.set_diag(0, 1);
    // (1 - i) / 2
    EXPECT_EQ(pgs_brute_amplitude(a, BitVector(1)), ExactAmplitude({1, 0, -1, 0}, 1));
}

TEST(oracle, brute_all_matches_single_and_normalizes) {
    std::mt19937_64 rng(21);
    for (int rep = 0; rep < 20; rep++) {
        size_t n = 1 + rng() % 8;
        PhasedAdjacency a = random_phased(rng, n);
        auto all = pgs_brute_all(a);
        ExactAmplitude total;
        for (uint64_t x = 0; x < all.size(); x++) {
            EXPECT_EQ(all[x], pgs_brute_amplitude(a, BitVector::from_index(n, x)));
            total += all[x].norm2();
        }
        EXPECT_EQ(total, ExactAmplitude::from_int(1));
    }
}

TEST(oracle, tableau_examples) {
    Tableau t = tableau_run(parse_circuit("H 0"));
    EXPECT_FALSE(t.z.get(0, 0));
    EXPECT_TRUE(t.x.get(0, 0));
    EXPECT_FALSE(t.r.get(0));

    // S X S^dag = Y, sign +.
    t = tableau_run(parse_circuit("H 0\nS 0"));
    EXPECT_TRUE(t.z.get(0, 0));
    EXPECT_TRUE(t.x.get(0, 0));
    EXPECT_FALSE(t.r.get(0));

    EXPECT_THROW(tableau_run(parse_circuit("T 0")), UnsupportedGate);
}

TEST(oracle, tableau_stabilizes_dense_state) {
    std::mt19937_64 rng(22);
    for (int rep = 0; rep < 100; rep++) {
        size_t n = 1 + rng() % 8;
        CliffordCircuit c = random_circuit(rng, n, rng() % 60);
        Tableau t = tableau_run(c);
        EXPECT_TRUE(t.is_valid());
        EXPECT_LT(stabilizer_residual(t, statevector(c)), 1e-9);
    }
}

TEST(oracle, stabilizers_to_graph_examples) {
    Tableau t;
    t.n = 2;
    t.z = BitMatrix::from_rows({"01", "10"});
    t.x = BitMatrix::from_rows({"10", "01"});
    t.r = BitVector(2);
    GraphForm f = stabilizers_to_graph(t);
    EXPECT_TRUE(f.g.has_edge(0, 1));
    EXPECT_FALSE(f.a.any());
    EXPECT_FALSE(f.c.any());
    EXPECT_EQ(f.b, (std::vector<uint8_t>{0, 0}));

    f = stabilizers_to_graph(Tableau::zero_state(1));
    EXPECT_EQ(f.g.edge_count(), 0u);
    EXPECT_TRUE(f.a.get(0));

    Tableau bad = Tableau::zero_state(2);
    bad.z.set(1, 0, true);
    bad.z.set(1, 1, false);
    EXPECT_THROW(stabilizers_to_graph(bad), ContractViolation);
}

TEST(oracle, stabilizers_to_graph_round_trip) {
    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 150; rep++) {
        size_t n = 1 + rng() % 8;
        CliffordCircuit c = random_circuit(rng, n, rng() % 60);
        GraphForm f = stabilizers_to_graph(tableau_run(c));
        EXPECT_LT(statevector(c).distance_up_to_phase(graph_form_state(f)), 1e-9) << c.str();
    }
}

TEST(oracle, nonnegative_mod_residue_breaks_round_trip) {
    std::mt19937_64 rng(24);
    int failures = 0;
    for (int rep = 0; rep < 100; rep++) {
        size_t n = 2 + rng() % 6;
        CliffordCircuit c = random_circuit(rng, n, 40);
        GraphForm f = stabilizers_to_graph(tableau_run(c), ModResidue::NonNegative);
        failures += statevector(c).distance_up_to_phase(graph_form_state(f)) > 1e-9;
    }
    EXPECT_GT(failures, 0);
}

TEST(oracle, one_qubit_clifford_table) {
    const auto &t = OneQubitClifford::table();
    ASSERT_EQ(t.size(), 24u);
    for (uint8_t i = 0; i < 24; i++) {
        for (uint8_t j = 0; j < 24; j++) {
            OneQubitClifford u{i}, v{j};
            OneQubitClifford w = u * v;
            auto abc = euler_decompose(w);
            Mat2 m = {1, 0, 0, 1};
            for (int k = 0; k < abc[0]; k++) {
                m = mat_mul(m, z_check());
            }
            for (int k = 0; k < abc[1]; k++) {
                m = mat_mul(m, x_check());
            }
            for (int k = 0; k < abc[2]; k++) {
                m = mat_mul(m, z_check());
            }
            EXPECT_TRUE(equal_up_to_phase(m, mat_mul(u.matrix(), v.matrix())));
        }
    }
}

TEST(oracle, euler_examples) {
    EXPECT_EQ(euler_decompose(OneQubitClifford::from_matrix({1, 0, 0, 1})), (std::array<int, 3>{0, 0, 0}));
    EXPECT_EQ(euler_decompose(OneQubitClifford::from_matrix(z_check())), (std::array<int, 3>{1, 0, 0}));
    auto h = euler_decompose(OneQubitClifford::from_matrix(gate_matrix(GateKind::H)));
    EXPECT_EQ(h[1] % 2, 1);
    // Exhaustive: the least (c, b, a) triple with b odd representing H.
    std::array<int, 3> best{-1, -1, -1};
    for (int c = 0; c < 4 && best[0] < 0; c++) {
        for (int b = 1; b < 4 && best[0] < 0; b += 2) {
            for (int a = 0; a < 4 && best[0] < 0; a++) {
                Mat2 m = {1, 0, 0, 1};
                for (int k = 0; k < a; k++) {
                    m = mat_mul(m, z_check());
                }
                for (int k = 0; k < b; k++) {
                    m = mat_mul(m, x_check());
                }
                for (int k = 0; k < c; k++) {
                    m = mat_mul(m, z_check());
                }
                if (equal_up_to_phase(m, gate_matrix(GateKind::H))) {
                    best = {a, b, c};
                }
            }
        }
    }
    EXPECT_EQ(h, best);
}
