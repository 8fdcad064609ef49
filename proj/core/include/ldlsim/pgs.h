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

#ifndef LDLSIM_PGS_H
#define LDLSIM_PGS_H

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ldlsim/gf2.h"
#include "ldlsim/graph.h"
#include "ldlsim/ldl.h"
#include "ldlsim/phased.h"
#include "ldlsim/ring.h"

namespace ldlsim {

/// 2^(-n/2) (-i)^(x^T A x).
ExactAmplitude amplitude_direct(const PhasedAdjacency &a, const BitVector &x);

/// Single-qubit gates appearing in the complementation identities.
/// ZHat = diag(1, i), ZCheck = diag(1, -i), XCheck = H ZCheck H.
enum class LocalGate : uint8_t { XCheck, ZHat, H, Z };

struct LocalGateRecord {
    /// (vertex, gate) in application order: the state before the move equals the listed gates
    /// applied to the state after it.
    std::vector<std::pair<uint32_t, LocalGate>> gates;
};

std::pair<Graph, LocalGateRecord> vertex_complement(const Graph &g, uint32_t i);
std::pair<Graph, LocalGateRecord> edge_complement(const Graph &g, uint32_t i, uint32_t j);

struct EliminationFailure : std::runtime_error {
    EliminationFailure(size_t step, const std::string &msg)
        : std::runtime_error("elimination step " + std::to_string(step) + ": " + msg), step(step) {
    }
    size_t step;
};

struct GaussJordanResult {
    /// Gamma_k(A) over the permuted index order.
    PhasedAdjacency B;
    BitVector v;
    /// B index i corresponds to input index perm[i].
    std::vector<uint32_t> perm;
    /// Elimination steps over permuted positions.
    std::vector<LdlEvent> pivots;
    /// d(D) of the leading k x k block: 1 for 1x1 pivots, 0 inside 2x2 pivots.
    BitVector delta;
    size_t one_by_one = 0;
};

/// Runs the Gauss-Jordan process on the leading k x k block. With `coerce`, the input is first
/// permuted by the dense LDL pivot order of w1(a) (pivots first); otherwise the identity order
/// must admit unpivoted elimination.
GaussJordanResult gauss_jordan_wn(const PhasedAdjacency &a, size_t k, bool coerce = true);

/// <x| H^n |A> through the Gauss-Jordan output: dense O(n^3) reference path.
ExactAmplitude amplitude_gauss_jordan(const PhasedAdjacency &a, const BitVector &x);

struct TrimResult {
    /// Phased adjacency on the kept vertices, in increasing original order.
    PhasedAdjacency a;
    std::vector<uint32_t> kept;
    ExactAmplitude phase;
    ExactAmplitude scale;
};

/// Projects each assigned vertex onto <bit| in the Z basis. `phase` is -1 to the number of edges
/// joining vertices assigned 1; `scale` is 2^(-m/2) for m assigned vertices.
TrimResult trim_z_vertices(const Graph &g, const std::map<uint32_t, bool> &z_assignment);

}  // namespace ldlsim

#endif
