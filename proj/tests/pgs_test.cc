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

#include "ldlsim/pgs.h"

#include <gtest/gtest.h>

#include <cmath>

#include "ldlsim/oracle.h"
#include "test_util.h"

using namespace ldlsim;
using ldlsim::testing::random_graph;
using ldlsim::testing::random_phased;

namespace {

DenseState phased_state(const PhasedAdjacency &a) {
    DenseState s = DenseState::zero(a.size());
    for (uint64_t x = 0; x < s.amps.size(); x++) {
        s.amps[x] = amplitude_direct(a, BitVector::from_index(a.size(), x)).to_complex();
    }
    return s;
}

void apply_record(DenseState &s, const LocalGateRecord &rec) {
    const Mat2 zhat{1, 0, 0, cplx(0, 1)};
    for (auto [q, g] : rec.gates) {
        switch (g) {
            case LocalGate::XCheck:
                s.apply(x_check(), q);
                break;
            case LocalGate::ZHat:
                s.apply(zhat, q);
                break;
            case LocalGate::H:
                s.apply(gate_matrix(GateKind::H), q);
                break;
            case LocalGate::Z:
                s.apply(gate_matrix(GateKind::Z), q);
                break;
        }
    }
}

}  // namespace

TEST(pgs, amplitude_direct_examples) {
    EXPECT_EQ(amplitude_direct(PhasedAdjacency(2), BitVector::from_string("11")), ExactAmplitude({1, 0, 0, 0}, 1));
    PhasedAdjacency k3(3);
    k3.set_edge(0, 1, true);
    k3.set_edge(0, 2, true);
    k3.set_edge(1, 2, true);
    EXPECT_EQ(amplitude_direct(k3, BitVector::from_string("111")), ExactAmplitude::clifford(-3, 4));
    PhasedAdjacency z(1);
    z.set_diag(0, 2);
    EXPECT_EQ(amplitude_direct(z, BitVector::from_string("1")), ExactAmplitude::clifford(-1, 4));
    EXPECT_THROW(amplitude_direct(z, BitVector(2)), ShapeError);
}

TEST(pgs, vertex_complement_examples) {
    Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    auto [g, rec] = vertex_complement(p3, 1);
    EXPECT_TRUE(g.has_edge(0, 2));
    EXPECT_EQ(g.edge_count(), 3u);
    Graph iso(3);
    EXPECT_EQ(vertex_complement(iso, 0).first, iso);
    EXPECT_THROW(vertex_complement(iso, 3), ContractViolation);
}

TEST(pgs, vertex_complement_state_identity) {
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 100; rep++) {
        size_t n = 1 + rng() % 8;
        Graph g = random_graph(rng, n);
        uint32_t i = rng() % n;
        auto [h, rec] = vertex_complement(g, i);
        DenseState s = DenseState::graph_state(h);
        apply_record(s, rec);
        EXPECT_LT(s.distance(DenseState::graph_state(g)), 1e-9);
    }
}

TEST(pgs, edge_complement_examples) {
    Graph e = Graph::from_edges(2, {{0, 1}});
    EXPECT_EQ(edge_complement(e, 0, 1).first, e);
    Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    Graph three = vertex_complement(vertex_complement(vertex_complement(p3, 0).first, 1).first, 0).first;
    EXPECT_EQ(edge_complement(p3, 0, 1).first, three);
    EXPECT_THROW(edge_complement(p3, 0, 2), ContractViolation);
}

TEST(pgs, edge_complement_state_identity_and_abc_sets) {
    std::mt19937_64 rng(32);
    int done = 0;
    while (done < 100) {
        size_t n = 2 + rng() % 7;
        Graph g = random_graph(rng, n);
        auto edges = g.edges();
        if (edges.empty()) {
            continue;
        }
        auto [i, j] = edges[rng() % edges.size()];
        auto [h, rec] = edge_complement(g, i, j);
        DenseState s = DenseState::graph_state(h);
        apply_record(s, rec);
        EXPECT_LT(s.distance(DenseState::graph_state(g)), 1e-9);
        // Neighbourhood description: toggle edges between the three classes of
        // N(i) only, N(j) only, and N(i) and N(j); then swap the labels i and j.
        Graph expect = g;
        auto cls = [&](uint32_t v) {
            bool a = v != i && v != j && g.has_edge(v, i);
            bool b = v != i && v != j && g.has_edge(v, j);
            return a && b ? 3 : a ? 1 : b ? 2 : 0;
        };
        for (uint32_t u = 0; u < n; u++) {
            for (uint32_t v = u + 1; v < n; v++) {
                int cu = cls(u), cv = cls(v);
                if (u == i || u == j || v == i || v == j || !cu || !cv || cu == cv) {
                    continue;
                }
                expect.toggle_edge(u, v);
            }
        }
        std::vector<uint32_t> perm(n);
        for (uint32_t v = 0; v < n; v++) {
            perm[v] = v == i ? j : v == j ? i : v;
        }
        EXPECT_EQ(h, expect.permuted(perm));
        done++;
    }
}

TEST(pgs, gauss_jordan_examples) {
    PhasedAdjacency one(1);
    one.set_diag(0, 1);
    auto r = gauss_jordan_wn(one, 1);
    EXPECT_EQ(r.B, one);
    EXPECT_FALSE(r.v.any());

    PhasedAdjacency x(2);
    x.set_edge(0, 1, true);
    r = gauss_jordan_wn(x, 2);
    EXPECT_EQ(r.B, x);
    EXPECT_FALSE(r.v.any());
    ASSERT_EQ(r.pivots.size(), 1u);
    EXPECT_EQ(r.pivots[0].kind, LdlEvent::Kind::Pivot2);

    EXPECT_THROW(gauss_jordan_wn(x, 1, false), EliminationFailure);
    EXPECT_THROW(gauss_jordan_wn(PhasedAdjacency(2), 1), EliminationFailure);
}

TEST(pgs, gauss_jordan_inverts_leading_block) {
    std::mt19937_64 rng(33);
    for (int rep = 0; rep < 200; rep++) {
        size_t n = 1 + rng() % 12;
        PhasedAdjacency a = random_phased(rng, n);
        size_t k = rank(a.omega1());
        GaussJordanResult r = gauss_jordan_wn(a, k);
        PhasedAdjacency ap = a.permuted(r.perm);
        BitMatrix w = ap.omega1(), b = r.B.omega1();
        BitMatrix a11(k, k), b11(k, k), a21(n - k, k), b21(n - k, k);
        for (size_t i = 0; i < n; i++) {
            for (size_t j = 0; j < k; j++) {
                if (i < k) {
                    a11.set(i, j, w.get(i, j));
                    b11.set(i, j, b.get(i, j));
                } else {
                    a21.set(i - k, j, w.get(i, j));
                    b21.set(i - k, j, b.get(i, j));
                }
            }
        }
        EXPECT_EQ(mul(b11, a11), BitMatrix::identity(k));
        EXPECT_EQ(b21, mul(a21, b11));
        // v through the LDL of w1(A11): d(w2(L D L^T) xor w2(A11)).
        LdlFactorization f = ldl_dense(ap.principal([&] {
            std::vector<uint32_t> id(k);
            for (uint32_t i = 0; i < k; i++) {
                id[i] = i;
            }
            return id;
        }()));
        ASSERT_EQ(f.perm.size(), k);
        for (size_t i = 0; i < k; i++) {
            ASSERT_EQ(f.perm[i], i);
        }
        EXPECT_EQ(f.v, r.v);
        // Trailing block is rank zero mod 2 and its diagonal carries w2(d(B22)) only.
        for (size_t i = k; i < n; i++) {
            for (size_t j = k; j < n; j++) {
                EXPECT_FALSE(b.get(i, j));
            }
        }
    }
}

TEST(pgs, gauss_jordan_state_identity) {
    std::mt19937_64 rng(34);
    for (int rep = 0; rep < 150; rep++) {
        size_t n = 1 + rng() % 7;
        PhasedAdjacency a = random_phased(rng, n);
        size_t k = rank(a.omega1());
        GaussJordanResult r = gauss_jordan_wn(a, k);
        DenseState lhs = phased_state(a.permuted(r.perm));
        for (uint32_t q = 0; q < k; q++) {
            lhs.apply(gate_matrix(GateKind::H), q);
        }
        DenseState rhs = phased_state(r.B);
        for (uint32_t q = 0; q < k; q++) {
            if (r.delta.get(q)) {
                rhs.apply(gate_matrix(GateKind::Z), q);
            }
            if (r.v.get(q)) {
                rhs.apply(gate_matrix(GateKind::X), q);
            }
        }
        cplx alpha = ExactAmplitude::omega_pow(-static_cast<int>(r.one_by_one)).to_complex();
        for (auto &x : rhs.amps) {
            x *= alpha;
        }
        EXPECT_LT(lhs.distance(rhs), 1e-9) << format_pgs(a);
    }
}

TEST(pgs, gauss_jordan_amplitude_matches_brute) {
    std::mt19937_64 rng(35);
    for (int rep = 0; rep < 100; rep++) {
        size_t n = 1 + rng() % 8;
        PhasedAdjacency a = random_phased(rng, n);
        auto all = pgs_brute_all(a);
        for (uint64_t x = 0; x < all.size(); x++) {
            ASSERT_EQ(amplitude_gauss_jordan(a, BitVector::from_index(n, x)), all[x]) << format_pgs(a);
        }
    }
}

TEST(pgs, trim_examples) {
    auto t = trim_z_vertices(Graph(1), {{0, false}});
    EXPECT_EQ(t.a.size(), 0u);
    EXPECT_EQ(t.scale, ExactAmplitude::sqrt2_pow(-1));

    t = trim_z_vertices(Graph::from_edges(2, {{0, 1}}), {{0, true}});
    ASSERT_EQ(t.a.size(), 1u);
    EXPECT_EQ(t.a.diag(0), 2);
    EXPECT_EQ(t.kept, (std::vector<uint32_t>{1}));
    EXPECT_EQ(t.scale, ExactAmplitude::sqrt2_pow(-1));
}

TEST(pgs, trim_matches_dense_projection) {
    std::mt19937_64 rng(36);
    for (int rep = 0; rep < 100; rep++) {
        size_t n = 1 + rng() % 8;
        Graph g = random_graph(rng, n);
        std::map<uint32_t, bool> z;
        for (uint32_t v = 0; v < n; v++) {
            if (rng() % 3 == 0) {
                z[v] = rng() & 1;
            }
        }
        auto t = trim_z_vertices(g, z);
        DenseState full = DenseState::graph_state(g);
        DenseState part = phased_state(t.a);
        cplx k = (t.phase * t.scale).to_complex();
        for (uint64_t xi = 0; xi < part.amps.size(); xi++) {
            size_t idx = 0;
            for (size_t i = 0; i < t.kept.size(); i++) {
                idx |= ((xi >> i) & 1) << t.kept[i];
            }
            for (auto [v, b] : z) {
                idx |= size_t{b} << v;
            }
            EXPECT_LT(std::abs(full.amps[idx] - k * part.amps[xi]), 1e-9) << format_edge_list(g) << " z=" << z.size() << " " << t.scale.str() << " " << xi << " " << full.amps[idx] << part.amps[xi];
        }
        // Trimming order does not matter.
        std::map<uint32_t, bool> first, second;
        for (auto [v, b] : z) {
            (v % 2 ? first : second)[v] = b;
        }
        auto t1 = trim_z_vertices(g, first);
        Graph rest(t1.kept.size());
        for (auto [u, v] : g.edges()) {
            auto iu = std::find(t1.kept.begin(), t1.kept.end(), u) - t1.kept.begin();
            auto iv = std::find(t1.kept.begin(), t1.kept.end(), v) - t1.kept.begin();
            if (iu < static_cast<long>(t1.kept.size()) && iv < static_cast<long>(t1.kept.size())) {
                rest.add_edge(iu, iv);
            }
        }
        std::map<uint32_t, bool> second_local;
        for (auto [v, b] : second) {
            second_local[std::find(t1.kept.begin(), t1.kept.end(), v) - t1.kept.begin()] = b;
        }
        auto t2 = trim_z_vertices(rest, second_local);
        PhasedAdjacency combined = t2.a;
        for (size_t i = 0; i < t2.kept.size(); i++) {
            combined.add_diag(i, t1.a.diag(t2.kept[i]));
        }
        EXPECT_EQ(combined, t.a);
    }
}
