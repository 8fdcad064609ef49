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

#include <algorithm>
#include <bit>

namespace ldlsim {

ExactAmplitude amplitude_direct(const PhasedAdjacency &a, const BitVector &x) {
    if (x.size() != a.size()) {
        throw ShapeError("amplitude_direct: length mismatch");
    }
    int q = a.quadratic_form(x);
    return ExactAmplitude::clifford(-static_cast<int>(a.size()), 6 * q);
}

std::pair<Graph, LocalGateRecord> vertex_complement(const Graph &g, uint32_t i) {
    if (i >= g.size()) {
        throw ContractViolation("vertex_complement: vertex out of range");
    }
    Graph out = g;
    const auto &nb = g.neighbors(i);
    for (size_t x = 0; x < nb.size(); x++) {
        for (size_t y = x + 1; y < nb.size(); y++) {
            out.toggle_edge(nb[x], nb[y]);
        }
    }
    LocalGateRecord rec;
    rec.gates.push_back({i, LocalGate::XCheck});
    for (uint32_t j : nb) {
        rec.gates.push_back({j, LocalGate::ZHat});
    }
    return {out, rec};
}

std::pair<Graph, LocalGateRecord> edge_complement(const Graph &g, uint32_t i, uint32_t j) {
    if (i >= g.size() || j >= g.size() || !g.has_edge(i, j)) {
        throw ContractViolation("edge_complement: {" + std::to_string(i) + "," + std::to_string(j) +
                                "} is not an edge");
    }
    Graph out = vertex_complement(vertex_complement(vertex_complement(g, i).first, j).first, i).first;
    LocalGateRecord rec;
    rec.gates.push_back({i, LocalGate::H});
    rec.gates.push_back({j, LocalGate::H});
    const auto &ni = g.neighbors(i);
    const auto &nj = g.neighbors(j);
    std::vector<uint32_t> common;
    std::set_intersection(ni.begin(), ni.end(), nj.begin(), nj.end(), std::back_inserter(common));
    for (uint32_t k : common) {
        rec.gates.push_back({k, LocalGate::Z});
    }
    return {out, rec};
}

namespace {

/// Dense Z4 working copy: off-diagonal bits plus a diagonal vector.
struct Work {
    BitMatrix off;
    std::vector<uint8_t> d;

    void clear_pair(std::vector<word_t> &w, size_t p, size_t q) const {
        w[p / WORD_BITS] &= ~(word_t{1} << (p % WORD_BITS));
        w[q / WORD_BITS] &= ~(word_t{1} << (q % WORD_BITS));
    }

    static std::vector<size_t> bits(const std::vector<word_t> &w) {
        std::vector<size_t> out;
        for (size_t k = 0; k < w.size(); k++) {
            for (word_t x = w[k]; x; x &= x - 1) {
                out.push_back(k * WORD_BITS + std::countr_zero(x));
            }
        }
        return out;
    }

    void xor_into(size_t r, const std::vector<word_t> &w) {
        word_t *p = off.row(r);
        for (size_t k = 0; k < w.size(); k++) {
            p[k] ^= w[k];
        }
        off.set(r, r, false);
    }

    void pivot1(size_t p) {
        std::vector<word_t> col(off.row(p), off.row(p) + off.stride());
        for (size_t a : bits(col)) {
            xor_into(a, col);
            d[a] = (d[a] + 3) & 3;
        }
    }

    void pivot2(size_t p, size_t q) {
        std::vector<word_t> cp(off.row(p), off.row(p) + off.stride());
        std::vector<word_t> cq(off.row(q), off.row(q) + off.stride());
        clear_pair(cp, p, q);
        clear_pair(cq, p, q);
        auto bp = bits(cp);
        auto bq = bits(cq);
        for (size_t a : bp) {
            xor_into(a, cq);
        }
        for (size_t a : bq) {
            xor_into(a, cp);
        }
        std::vector<word_t> both(cp.size());
        for (size_t k = 0; k < cp.size(); k++) {
            both[k] = cp[k] & cq[k];
        }
        for (size_t a : bits(both)) {
            d[a] = (d[a] + 2) & 3;
        }
        for (size_t a : bp) {
            off.set(a, q, true);
            off.set(q, a, true);
            if (!std::binary_search(bq.begin(), bq.end(), a)) {
                off.set(a, p, false);
                off.set(p, a, false);
            }
        }
        for (size_t a : bq) {
            off.set(a, p, true);
            off.set(p, a, true);
            if (!std::binary_search(bp.begin(), bp.end(), a)) {
                off.set(a, q, false);
                off.set(q, a, false);
            }
        }
    }
};

}  // namespace

GaussJordanResult gauss_jordan_wn(const PhasedAdjacency &a, size_t k, bool coerce) {
    const size_t n = a.size();
    if (k > n) {
        throw EliminationFailure(0, "k exceeds the matrix size");
    }
    GaussJordanResult res;
    res.perm.resize(n);
    for (uint32_t i = 0; i < n; i++) {
        res.perm[i] = i;
    }
    if (coerce) {
        LdlFactorization f = ldl_dense(a);
        if (k > f.rank) {
            throw EliminationFailure(f.rank, "k exceeds rank of w1(A)");
        }
        for (const auto &b : f.blocks) {
            if (b.kind == BlockKind::AntiDiag2 && b.pos + 1 == k) {
                throw EliminationFailure(b.pos, "k splits a 2x2 pivot block");
            }
        }
        res.perm = f.perm;
    }
    PhasedAdjacency p = a.permuted(res.perm);
    Work w{p.offdiag(), std::vector<uint8_t>(n)};
    for (size_t i = 0; i < n; i++) {
        w.d[i] = p.diag(i);
    }
    res.v = BitVector(k);
    res.delta = BitVector(k);
    size_t i = 0;
    while (i < k) {
        if (w.d[i] & 1) {
            w.pivot1(i);
            res.pivots.push_back({LdlEvent::Kind::Pivot1, static_cast<uint32_t>(i)});
            res.v.set(i, w.d[i] >> 1);
            res.delta.set(i, true);
            w.d[i] &= 1;
            res.one_by_one++;
            i += 1;
            continue;
        }
        if (i + 1 >= k) {
            throw EliminationFailure(i, "even diagonal at the last leading position");
        }
        if (!w.off.get(i, i + 1) || (w.d[i + 1] & 1)) {
            throw EliminationFailure(i, "leading block is not [[0,1],[1,0]]");
        }
        w.pivot2(i, i + 1);
        res.pivots.push_back({LdlEvent::Kind::Pivot2, static_cast<uint32_t>(i), static_cast<uint32_t>(i + 1)});
        res.v.set(i, w.d[i] >> 1);
        res.v.set(i + 1, w.d[i + 1] >> 1);
        w.d[i] &= 1;
        w.d[i + 1] &= 1;
        i += 2;
    }
    res.B = PhasedAdjacency::from_matrix(w.off);
    for (size_t j = 0; j < n; j++) {
        res.B.set_diag(j, w.d[j]);
    }
    return res;
}

ExactAmplitude amplitude_gauss_jordan(const PhasedAdjacency &a, const BitVector &x) {
    const size_t n = a.size();
    if (x.size() != n) {
        throw ShapeError("amplitude_gauss_jordan: length mismatch");
    }
    size_t k = rank(a.omega1());
    GaussJordanResult gj = gauss_jordan_wn(a, k, true);
    BitVector y(n);
    for (size_t i = 0; i < k; i++) {
        y.set(i, x.get(gj.perm[i]) ^ gj.v.get(i));
    }
    for (size_t j = k; j < n; j++) {
        bool x2 = gj.B.diag(j) >> 1;
        for (size_t i = 0; i < k; i++) {
            x2 ^= gj.B.edge(j, i) & y.get(i);
        }
        if (x2 != x.get(gj.perm[j])) {
            return ExactAmplitude();
        }
    }
    int q = gj.B.quadratic_form(y);
    for (size_t i = 0; i < k; i++) {
        q += 2 * (y.get(i) & gj.delta.get(i));
    }
    return ExactAmplitude::clifford(-static_cast<int>(k), -static_cast<int>(gj.one_by_one) - 2 * q);
}

TrimResult trim_z_vertices(const Graph &g, const std::map<uint32_t, bool> &z_assignment) {
    const size_t n = g.size();
    std::vector<int32_t> index(n, -1);
    TrimResult res;
    for (uint32_t v = 0; v < n; v++) {
        if (!z_assignment.count(v)) {
            index[v] = static_cast<int32_t>(res.kept.size());
            res.kept.push_back(v);
        }
    }
    for (const auto &[v, b] : z_assignment) {
        if (v >= n) {
            throw ContractViolation("trim_z_vertices: vertex out of range");
        }
    }
    res.a = PhasedAdjacency(res.kept.size());
    for (size_t i = 0; i < res.kept.size(); i++) {
        uint32_t v = res.kept[i];
        int d = 0;
        for (uint32_t u : g.neighbors(v)) {
            if (index[u] >= 0) {
                if (static_cast<size_t>(index[u]) > i) {
                    res.a.set_edge(i, index[u], true);
                }
            } else if (z_assignment.at(u)) {
                d += 2;
            }
        }
        res.a.set_diag(i, d);
    }
    size_t sign = 0;
    for (const auto &[v, b] : z_assignment) {
        if (!b) {
            continue;
        }
        for (uint32_t u : g.neighbors(v)) {
            auto it = z_assignment.find(u);
            sign += u > v && it != z_assignment.end() && it->second;
        }
    }
    res.phase = ExactAmplitude::from_int(sign % 2 ? -1 : 1);
    res.scale = ExactAmplitude::sqrt2_pow(-static_cast<int>(z_assignment.size()));
    return res;
}

}  // namespace ldlsim
