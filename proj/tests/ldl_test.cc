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

#include "ldlsim/ldl.h"

#include <gtest/gtest.h>

#include "test_util.h"

using namespace ldlsim;
using ldlsim::testing::planted_width_graph;
using ldlsim::testing::random_matrix;
using ldlsim::testing::random_phased;
using ldlsim::testing::random_symmetric;

namespace {

BitMatrix unit_lower_inverse(const BitMatrix &l) {
    const size_t n = l.rows();
    BitMatrix inv(n, n);
    for (size_t c = 0; c < n; c++) {
        BitVector e(n);
        e.set(c, true);
        inv.set_col(c, solve_lower_unit(l, e));
    }
    return inv;
}

BitMatrix leading(const BitMatrix &m, size_t r, size_t c) {
    BitMatrix out(r, c);
    for (size_t i = 0; i < r; i++) {
        for (size_t j = 0; j < c; j++) {
            out.set(i, j, m.get(i, j));
        }
    }
    return out;
}

/// Z4 diagonal of M^T D M where M = L1^-1 lifted to {0,1}.
std::vector<int> c_diag4(const LdlFactorization &f) {
    BitMatrix m = unit_lower_inverse(leading(f.L, f.rank, f.rank));
    std::vector<int> out(f.rank, 0);
    for (size_t c = 0; c < f.rank; c++) {
        int e = 0;
        for (const auto &b : f.blocks) {
            if (b.kind == BlockKind::One) {
                e += m.get(b.pos, c);
            } else if (b.kind == BlockKind::AntiDiag2) {
                e += 2 * (m.get(b.pos, c) & m.get(b.pos + 1, c));
            }
        }
        out[c] = e & 3;
    }
    return out;
}

/// v recomputed as w2 of the Z4 diagonal of L D L^T, xor w2 of the permuted input diagonal.
BitVector v_from_gjl4(const LdlFactorization &f, const PhasedAdjacency &a) {
    BitVector v(f.rank);
    for (size_t j = 0; j < f.rank; j++) {
        int e = 0;
        for (const auto &b : f.blocks) {
            if (b.kind == BlockKind::One) {
                e += f.L.get(j, b.pos);
            } else if (b.kind == BlockKind::AntiDiag2) {
                e += 2 * (f.L.get(j, b.pos) & f.L.get(j, b.pos + 1));
            }
        }
        v.set(j, ((e >> 1) & 1) ^ (a.diag(f.perm[j]) >> 1));
    }
    return v;
}

void expect_valid(const LdlFactorization &f, const BitMatrix &a) {
    ASSERT_EQ(f.reconstruct(), a);
    EXPECT_EQ(f.rank, rank(a));
    for (const auto &b : f.blocks) {
        if (b.kind == BlockKind::AntiDiag2) {
            EXPECT_FALSE(f.L.get(b.pos + 1, b.pos));
        }
    }
    for (size_t i = 0; i < f.n; i++) {
        EXPECT_TRUE(f.L.get(i, i));
        for (size_t j = i + 1; j < f.n; j++) {
            EXPECT_FALSE(f.L.get(i, j));
        }
    }
}

}  // namespace

TEST(ldl, small_examples) {
    auto f = ldl_dense(BitMatrix::from_rows({"11", "10"}));
    EXPECT_EQ(f.perm, (std::vector<uint32_t>{0, 1}));
    EXPECT_EQ(f.L, BitMatrix::from_rows({"10", "11"}));
    EXPECT_EQ(f.D(), BitMatrix::identity(2));

    f = ldl_dense(BitMatrix::from_rows({"01", "10"}));
    EXPECT_EQ(f.L, BitMatrix::identity(2));
    ASSERT_EQ(f.blocks.size(), 1u);
    EXPECT_EQ(f.blocks[0].kind, BlockKind::AntiDiag2);
}

TEST(ldl, reduced_examples) {
    auto f = ldl_reduced(BitMatrix(4, 4));
    EXPECT_EQ(f.rank, 0u);
    EXPECT_EQ(f.L.cols(), 0u);

    f = ldl_reduced(BitMatrix::from_rows({"111", "111", "111"}));
    EXPECT_EQ(f.rank, 1u);
    EXPECT_EQ(f.L, BitMatrix::from_rows({"1", "1", "1"}));
    ASSERT_EQ(f.blocks.size(), 1u);
    EXPECT_EQ(f.blocks[0].kind, BlockKind::One);
}

TEST(ldl, random_dense_reconstruction) {
    std::mt19937_64 rng(7);
    for (size_t n : {1, 2, 3, 5, 17, 64, 65, 130, 256}) {
        for (int rep = 0; rep < 3; rep++) {
            BitMatrix a = random_symmetric(rng, n, 0.5, rep == 0 ? 0.0 : 0.5);
            expect_valid(ldl_dense(a), a);
        }
    }
}

TEST(ldl, singular_inputs) {
    std::mt19937_64 rng(8);
    for (int rep = 0; rep < 30; rep++) {
        size_t n = 2 + rng() % 40;
        size_t r = rng() % n;
        BitMatrix b = random_matrix(rng, n, r);
        BitMatrix a = mul(b, b.transpose());
        auto f = ldl_reduced(a);
        ASSERT_EQ(f.reconstruct(), a);
        EXPECT_EQ(f.rank, rank(a));
        EXPECT_EQ(f.L.cols(), f.rank);
        // span(L) = span(a) in original coordinates.
        BitMatrix pl(n, f.rank);
        for (size_t i = 0; i < n; i++) {
            for (size_t c = 0; c < f.rank; c++) {
                pl.set(f.perm[i], c, f.L.get(i, c));
            }
        }
        for (size_t c = 0; c < n; c++) {
            EXPECT_TRUE(in_span(pl, a.col_vector(c)).has_value());
        }
    }
}

TEST(ldl, asymmetric_rejected) {
    EXPECT_THROW(ldl_dense(BitMatrix::from_rows({"01", "00"})), ContractViolation);
}

TEST(ldl, side_outputs_match_gjl4_and_secondbit) {
    std::mt19937_64 rng(9);
    for (int rep = 0; rep < 200; rep++) {
        size_t n = 1 + rng() % 14;
        PhasedAdjacency a = random_phased(rng, n);
        LdlFactorization f = ldl_dense(a);
        ASSERT_EQ(f.reconstruct(), a.omega1());
        EXPECT_EQ(f.v, v_from_gjl4(f, a));
        std::vector<int> d4 = c_diag4(f);
        for (size_t c = 0; c < f.rank; c++) {
            EXPECT_EQ(f.secondbit_diag.get(c), (d4[c] >> 1) & 1);
        }
    }
}

TEST(ldl, diagonal_matrix_tree) {
    PhasedAdjacency a(5);
    for (int i = 0; i < 5; i++) {
        a.set_diag(i, i % 2);
    }
    TreeDecomposition td;
    for (uint32_t i = 0; i < 5; i++) {
        td.bags.push_back({i});
        if (i) {
            td.edges.push_back({i - 1, i});
        }
    }
    ImplicitLdl f = ldl_tree(a, td);
    EXPECT_EQ(f.rank, 2u);
    EXPECT_EQ(f.nnz(), 0u);
    EXPECT_FALSE(f.v.any());
}

TEST(ldl, tree_matches_forced_dense) {
    std::mt19937_64 rng(10);
    for (int rep = 0; rep < 40; rep++) {
        size_t n = 1 + rng() % 120;
        size_t k = 1 + rng() % 8;
        auto [g, td] = planted_width_graph(rng, n, k);
        PhasedAdjacency a = PhasedAdjacency::from_graph(g);
        for (size_t i = 0; i < n; i++) {
            a.set_diag(i, static_cast<int>(rng() % 4));
        }
        ImplicitLdl t = ldl_tree(a, td);
        LdlFactorization e = t.expand();
        ASSERT_EQ(e.reconstruct(), a.omega1());
        LdlFactorization d = ldl_dense_forced(a, t.events);
        EXPECT_EQ(d.perm, e.perm);
        EXPECT_EQ(d.L, e.L);
        EXPECT_EQ(d.blocks, e.blocks);
        EXPECT_EQ(d.v, e.v);
        EXPECT_EQ(d.w, e.w);
        EXPECT_EQ(d.secondbit_diag, e.secondbit_diag);
        EXPECT_EQ(e.v, v_from_gjl4(e, a));
    }
}

TEST(ldl, implicit_apply_matches_explicit) {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 20; rep++) {
        size_t n = 2 + rng() % 150;
        auto [g, td] = planted_width_graph(rng, n, 1 + rng() % 6);
        PhasedAdjacency a = PhasedAdjacency::from_graph(g);
        for (size_t i = 0; i < n; i++) {
            a.set_diag(i, static_cast<int>(rng() % 4));
        }
        ImplicitLdl f = ldl_tree(a, td);
        LdlFactorization e = f.expand();
        BitMatrix x = random_matrix(rng, n, 1 + rng() % 70);
        BitMatrix linv = unit_lower_inverse(e.L);
        EXPECT_EQ(implicit_apply(f, LdlOp::L, x), mul(e.L, x));
        EXPECT_EQ(implicit_apply(f, LdlOp::LT, x), mul(e.L.transpose(), x));
        EXPECT_EQ(implicit_apply(f, LdlOp::LInv, x), mul(linv, x));
        EXPECT_EQ(implicit_apply(f, LdlOp::LInvT, x), mul(linv.transpose(), x));
        EXPECT_EQ(implicit_apply(f, LdlOp::L, implicit_apply(f, LdlOp::LInv, x)), x);
        BitMatrix xr = random_matrix(rng, f.rank, 5);
        BitMatrix l1inv = unit_lower_inverse(leading(e.L, f.rank, f.rank));
        BitMatrix l2(n - f.rank, f.rank);
        for (size_t i = f.rank; i < n; i++) {
            for (size_t j = 0; j < f.rank; j++) {
                l2.set(i - f.rank, j, e.L.get(i, j));
            }
        }
        EXPECT_EQ(implicit_apply(f, LdlOp::L2L1Inv, xr), mul(mul(l2, l1inv), xr));
    }
}

TEST(ldl, implicit_apply_shape_error) {
    ImplicitLdl f = factor_dense(PhasedAdjacency(3));
    EXPECT_THROW(implicit_apply(f, LdlOp::L, BitMatrix(2, 1)), ShapeError);
}

TEST(ldl, invalid_td_rejected) {
    PhasedAdjacency a(3);
    a.set_edge(0, 2, true);
    TreeDecomposition td;
    td.bags = {{0, 1}, {1, 2}};
    td.edges = {{0, 1}};
    EXPECT_THROW(ldl_tree(a, td), TreeDecompositionError);
}

namespace {

/// G = [[C, W^T], [W, 0]] in original coordinates, from the explicit factorization.
BitMatrix generalized_inverse(const LdlFactorization &f) {
    const size_t n = f.n, r = f.rank;
    BitMatrix l1inv = unit_lower_inverse(leading(f.L, r, r));
    BitMatrix d(r, r);
    for (const auto &b : f.blocks) {
        if (b.kind == BlockKind::One) {
            d.set(b.pos, b.pos, true);
        } else if (b.kind == BlockKind::AntiDiag2) {
            d.set(b.pos, b.pos + 1, true);
            d.set(b.pos + 1, b.pos, true);
        }
    }
    BitMatrix c = mul(mul(l1inv.transpose(), d), l1inv);
    BitMatrix l2(n - r, r);
    for (size_t i = r; i < n; i++) {
        for (size_t j = 0; j < r; j++) {
            l2.set(i - r, j, f.L.get(i, j));
        }
    }
    BitMatrix w = mul(l2, l1inv);
    BitMatrix g(n, n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            bool b = false;
            if (i < r && j < r) {
                b = c.get(i, j);
            } else if (i >= r && j < r) {
                b = w.get(i - r, j);
            } else if (i < r && j >= r) {
                b = w.get(j - r, i);
            }
            g.set(f.perm[i], f.perm[j], b);
        }
    }
    return g;
}

}  // namespace

TEST(ldl, partial_inverse_blocks_match_dense) {
    std::mt19937_64 rng(12);
    for (int rep = 0; rep < 40; rep++) {
        size_t n = 1 + rng() % 60;
        auto [g, td] = planted_width_graph(rng, n, 1 + rng() % 5);
        PhasedAdjacency a = PhasedAdjacency::from_graph(g);
        for (size_t i = 0; i < n; i++) {
            a.set_diag(i, static_cast<int>(rng() % 4));
        }
        ImplicitLdl f = ldl_tree(a, td);
        LdlFactorization e = f.expand();
        BitMatrix ginv = generalized_inverse(e);
        std::vector<int> d4 = c_diag4(e);
        PartialInverseBlocks pib = partial_inverse_blocks(f, td);
        for (const auto &blk : pib.bags) {
            for (size_t x = 0; x < blk.vertices.size(); x++) {
                uint32_t vx = blk.vertices[x];
                if (f.pos[vx] < f.rank) {
                    EXPECT_EQ(blk.diag4[x], d4[f.pos[vx]]);
                }
                for (size_t y = 0; y < blk.vertices.size(); y++) {
                    EXPECT_EQ(blk.g.get(x, y), ginv.get(vx, blk.vertices[y])) << "rep " << rep;
                }
            }
        }
    }
}

TEST(ldl, partial_inverse_full_rank_is_inverse) {
    const size_t n = 12;
    BitMatrix a(n, n);
    for (size_t i = 0; i < n; i++) {
        a.set(i, i, true);
        if (i + 1 < n) {
            a.set(i, i + 1, true);
            a.set(i + 1, i, true);
        }
    }
    ASSERT_EQ(rank(a), n);
    TreeDecomposition td;
    for (uint32_t i = 0; i + 1 < n; i++) {
        td.bags.push_back({i, i + 1});
        if (i) {
            td.edges.push_back({i - 1, i});
        }
    }
    ImplicitLdl f = ldl_tree(a, td);
    BitMatrix ginv = generalized_inverse(f.expand());
    EXPECT_EQ(mul(ginv, a), BitMatrix::identity(n));
    PartialInverseBlocks pib = partial_inverse_blocks(f, td);
    for (const auto &blk : pib.bags) {
        for (size_t x = 0; x < blk.vertices.size(); x++) {
            for (size_t y = 0; y < blk.vertices.size(); y++) {
                EXPECT_EQ(blk.g.get(x, y), ginv.get(blk.vertices[x], blk.vertices[y]));
            }
        }
    }
    ImplicitLdl id = ldl_tree(BitMatrix::identity(n), td);
    for (const auto &blk : partial_inverse_blocks(id, td).bags) {
        EXPECT_EQ(blk.g, BitMatrix::identity(blk.vertices.size()));
    }
}

TEST(ldl, forced_rejects_inadmissible) {
    PhasedAdjacency a(2);
    a.set_edge(0, 1, true);
    EXPECT_THROW(ldl_dense_forced(a, {{LdlEvent::Kind::Pivot1, 0}}), ContractViolation);
    EXPECT_THROW(ldl_dense_forced(a, {{LdlEvent::Kind::Peel, 0}}), ContractViolation);
}
