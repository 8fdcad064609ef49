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

#ifndef LDLSIM_LDL_H
#define LDLSIM_LDL_H

#include <cstdint>
#include <optional>
#include <vector>

#include "ldlsim/gf2.h"
#include "ldlsim/phased.h"
#include "ldlsim/treedec.h"

namespace ldlsim {

enum class BlockKind : uint8_t { Zero, One, AntiDiag2 };

struct DBlock {
    BlockKind kind;
    /// First position covered by the block in the permuted order.
    uint32_t pos;
    bool operator==(const DBlock &o) const = default;
};

/// One elimination step, in original vertex ids.
struct LdlEvent {
    enum class Kind : uint8_t { Pivot1, Pivot2, Peel };
    Kind kind;
    uint32_t a;
    uint32_t b = 0;
    bool operator==(const LdlEvent &o) const = default;
};

/// Explicit factorization. Positions [0, rank) hold pivots, [rank, n) hold peeled rows.
/// perm[pos] is the original index, so input(perm[i], perm[j]) = w1(L D L^T)(i, j).
struct LdlFactorization {
    size_t n = 0;
    size_t rank = 0;
    bool reduced = false;
    std::vector<uint32_t> perm;
    /// n x n unit lower triangular, or n x rank when reduced.
    BitMatrix L;
    std::vector<DBlock> blocks;
    /// v: second diagonal bit at elimination (rank entries). w: v followed by the peeled rows' second bits.
    BitVector v;
    BitVector w;
    /// d(D) restricted to pivots.
    BitVector delta;
    /// w2 of the diagonal of L1^-T D L1^-1 (rank entries).
    BitVector secondbit_diag;
    std::vector<LdlEvent> events;

    BitMatrix D() const;
    /// w1(P L D L^T P^T) in original coordinates.
    BitMatrix reconstruct() const;
    BitMatrix reduced_L() const;
};

/// Factorization with L held as sparse columns grouped by the front (bag) that produced them.
struct ImplicitLdl {
    struct Front {
        int32_t bag = -1;
        int32_t parent = -1;
        std::vector<uint32_t> pivots;
        std::vector<uint32_t> peeled;
        std::vector<uint32_t> remaining;
    };

    size_t n = 0;
    size_t rank = 0;
    size_t one_by_one = 0;
    std::vector<uint32_t> perm;
    std::vector<uint32_t> pos;
    std::vector<DBlock> blocks;
    /// partner[p] is the other position of p's 2x2 block, or -1.
    std::vector<int32_t> partner;
    /// cols[c] lists positions r > c with L(r, c) = 1, sorted.
    std::vector<std::vector<uint32_t>> cols;
    std::vector<Front> fronts;
    std::vector<LdlEvent> events;
    BitVector v;
    BitVector w;
    BitVector delta;
    BitVector secondbit_diag;
    /// Rooted binary decomposition the fronts follow (single bag for the dense path).
    TreeDecomposition tree;

    size_t nnz() const;
    LdlFactorization expand() const;
};

LdlFactorization ldl_dense(const BitMatrix &a);
LdlFactorization ldl_dense(const PhasedAdjacency &a);
LdlFactorization ldl_reduced(const BitMatrix &a);
/// Replays a prescribed event sequence; throws ContractViolation when a step is inadmissible.
LdlFactorization ldl_dense_forced(const PhasedAdjacency &a, const std::vector<LdlEvent> &events);

ImplicitLdl factor_dense(const PhasedAdjacency &a);
ImplicitLdl ldl_tree(const BitMatrix &a, const TreeDecomposition &td);
ImplicitLdl ldl_tree(const PhasedAdjacency &a, const TreeDecomposition &td);

enum class LdlOp { L, LT, LInv, LInvT, L2L1Inv };
/// Applies the named operator of L~ = [[L1, 0], [L2, I]] to the columns of x.
/// x has n rows, or rank rows for L2L1Inv (which returns n - rank rows).
BitMatrix implicit_apply(const ImplicitLdl &f, LdlOp which, const BitMatrix &x);

/// Blocks of G = [[A11^#, A11^# A12], [A21 A11^#, 0]] (in pivot/peeled order, mapped back to
/// original indices) restricted to each bag of the factorization's tree.
struct PartialInverseBlocks {
    struct Block {
        std::vector<uint32_t> vertices;
        BitMatrix g;
        /// Z4 diagonal of L1^-T D L1^-1 for pivot vertices, 0 for peeled vertices.
        std::vector<uint8_t> diag4;
    };
    std::vector<Block> bags;
    BitVector secondbit_diag;
};

PartialInverseBlocks partial_inverse_blocks(const ImplicitLdl &f, const TreeDecomposition &td);
PartialInverseBlocks partial_inverse_blocks(const ImplicitLdl &f);

}  // namespace ldlsim

#endif
