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

#ifndef LDLSIM_ANALYSIS_H
#define LDLSIM_ANALYSIS_H

#include <cstdint>
#include <optional>
#include <vector>

#include "ldlsim/circuit.h"
#include "ldlsim/gf2.h"
#include "ldlsim/graph.h"

namespace ldlsim {

/// Certificate for A + D(u) = w1(Gamma_k(B + D(v))) with A and B reordered so that position i
/// holds vertex pi_a[i] (resp. pi_b[i]). pi_a = pi_b certifies labeled LC-equivalence; distinct
/// orderings certify it up to relabeling.
struct LcWitness {
    std::vector<uint32_t> pi_a;
    std::vector<uint32_t> pi_b;
    BitVector u;
    BitVector v;
    size_t k = 0;
};

/// False when the identity fails or Gamma_k cannot run on the given order.
bool lc_verify_witness(const Graph &a, const Graph &b, const LcWitness &w);

constexpr size_t MAX_ORBIT_VERTICES = 8;
constexpr size_t MAX_DIAMETER_VERTICES = 7;

/// Closure of g under local complementation, labeled, in BFS order from g.
struct LcOrbit {
    std::vector<Graph> members;
    bool contains(const Graph &g) const;
};

/// Refuses more than MAX_ORBIT_VERTICES vertices.
LcOrbit lc_orbit(const Graph &g);

/// Isomorphism-invariant key: the least relabeled adjacency packing. At most 8 vertices.
uint64_t canonical_key(const Graph &g);

struct LcDecision {
    bool equivalent = false;
    std::optional<LcWitness> witness;
};

/// Labeled decision by orbit membership; a positive answer carries a verified witness.
LcDecision lc_equivalent(const Graph &g1, const Graph &g2);

/// Largest shortest local-complementation distance between isomorphism classes in g's orbit.
/// Refuses more than MAX_DIAMETER_VERTICES vertices.
size_t orbit_diameter(const Graph &g);

/// CNOT and X layer mapping H^n|G> to |phi> on `kept` and |0> elsewhere.
struct Disentangler {
    size_t num_qubits = 0;
    std::vector<uint32_t> kept;
    /// (control, target) pairs.
    std::vector<std::pair<uint32_t, uint32_t>> cnots;
    std::vector<uint32_t> flips;

    /// The layer alone, with CNOT written as H CZ H.
    CliffordCircuit circuit() const;
};

struct LearnResult {
    size_t rank = 0;
    Disentangler disentangler;
    size_t measurements = 0;
    bool success = false;
};

/// Samples H^n|G> in the computational basis, takes differences with the first outcome and
/// stops once ceil(log2(1/delta)) consecutive differences leave the rank unchanged.
LearnResult learn_graph_state(const Graph &target, double delta, uint64_t seed);

}  // namespace ldlsim

#endif
