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

#include "ldlsim/analysis.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "ldlsim/ldl.h"
#include "ldlsim/pgs.h"
#include "ldlsim/phased.h"
#include "ldlsim/sim.h"

namespace ldlsim {

namespace {

bool is_permutation_of(const std::vector<uint32_t> &p, size_t n) {
    if (p.size() != n) {
        return false;
    }
    std::vector<bool> seen(n, false);
    for (uint32_t x : p) {
        if (x >= n || seen[x]) {
            return false;
        }
        seen[x] = true;
    }
    return true;
}

}  // namespace

bool lc_verify_witness(const Graph &a, const Graph &b, const LcWitness &w) {
    const size_t n = a.size();
    if (b.size() != n) {
        throw ShapeError("lc_verify_witness: graphs differ in size");
    }
    if (!is_permutation_of(w.pi_a, n) || !is_permutation_of(w.pi_b, n) || w.u.size() != n || w.v.size() != n ||
        w.k > n) {
        return false;
    }
    PhasedAdjacency ap = PhasedAdjacency::from_graph(a).permuted(w.pi_a);
    PhasedAdjacency bp = PhasedAdjacency::from_graph(b).permuted(w.pi_b);
    for (size_t i = 0; i < n; i++) {
        bp.set_diag(i, w.v.get(i));
    }
    GaussJordanResult gj;
    try {
        gj = gauss_jordan_wn(bp, w.k, false);
    } catch (const EliminationFailure &) {
        return false;
    }
    for (size_t i = 0; i < n; i++) {
        if ((gj.B.diag(i) & 1) != w.u.get(i)) {
            return false;
        }
        for (size_t j = i + 1; j < n; j++) {
            if (gj.B.edge(i, j) != ap.edge(i, j)) {
                return false;
            }
        }
    }
    return true;
}

namespace {

/// Rows as bitmasks, packed 8 bits per vertex.
using Rows = std::array<uint8_t, 8>;

Rows to_rows(const Graph &g) {
    Rows r{};
    for (uint32_t v = 0; v < g.size(); v++) {
        for (uint32_t u : g.neighbors(v)) {
            r[v] |= static_cast<uint8_t>(1u << u);
        }
    }
    return r;
}

uint64_t pack(const Rows &r) {
    uint64_t k = 0;
    for (int i = 0; i < 8; i++) {
        k |= uint64_t{r[i]} << (8 * i);
    }
    return k;
}

Rows unpack(uint64_t k) {
    Rows r{};
    for (int i = 0; i < 8; i++) {
        r[i] = static_cast<uint8_t>(k >> (8 * i));
    }
    return r;
}

Graph from_rows(const Rows &r, size_t n) {
    Graph g(n);
    for (uint32_t i = 0; i < n; i++) {
        for (uint32_t j = i + 1; j < n; j++) {
            if ((r[i] >> j) & 1) {
                g.add_edge(i, j);
            }
        }
    }
    return g;
}

Rows complement_at(Rows r, size_t i) {
    const uint8_t nb = r[i];
    for (size_t a = 0; a < 8; a++) {
        if ((nb >> a) & 1) {
            r[a] ^= static_cast<uint8_t>(nb & ~(1u << a));
        }
    }
    return r;
}

uint64_t canonical_rows(const Rows &r, size_t n) {
    std::vector<uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = UINT64_MAX;
    do {
        Rows p{};
        for (size_t i = 0; i < n; i++) {
            const uint8_t row = r[perm[i]];
            uint8_t out = 0;
            for (size_t j = 0; j < n; j++) {
                out |= static_cast<uint8_t>(((row >> perm[j]) & 1) << j);
            }
            p[i] = out;
        }
        best = std::min(best, pack(p));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

void check_orbit_size(const Graph &g, size_t limit, const char *what) {
    if (g.size() > limit) {
        throw std::invalid_argument(std::string(what) + ": at most " + std::to_string(limit) + " vertices");
    }
}

}  // namespace

bool LcOrbit::contains(const Graph &g) const {
    return std::find(members.begin(), members.end(), g) != members.end();
}

LcOrbit lc_orbit(const Graph &g) {
    check_orbit_size(g, MAX_ORBIT_VERTICES, "lc_orbit");
    const size_t n = g.size();
    LcOrbit orbit;
    std::unordered_set<uint64_t> seen;
    std::deque<Rows> queue;
    Rows start = to_rows(g);
    seen.insert(pack(start));
    queue.push_back(start);
    while (!queue.empty()) {
        Rows cur = queue.front();
        queue.pop_front();
        orbit.members.push_back(from_rows(cur, n));
        for (size_t i = 0; i < n; i++) {
            Rows next = complement_at(cur, i);
            if (seen.insert(pack(next)).second) {
                queue.push_back(next);
            }
        }
    }
    return orbit;
}

uint64_t canonical_key(const Graph &g) {
    check_orbit_size(g, MAX_ORBIT_VERTICES, "canonical_key");
    return canonical_rows(to_rows(g), g.size());
}

namespace {

/// Witness search: pivot set S' (ordered by its own dense pivot order), then the rest.
std::optional<LcWitness> find_witness(const Graph &a, const Graph &b) {
    const size_t n = a.size();
    for (uint64_t v = 0; v < (uint64_t{1} << n); v++) {
        PhasedAdjacency bv = PhasedAdjacency::from_graph(b);
        for (size_t i = 0; i < n; i++) {
            bv.set_diag(i, (v >> i) & 1);
        }
        for (uint64_t s = 0; s < (uint64_t{1} << n); s++) {
            std::vector<uint32_t> in, out;
            for (uint32_t i = 0; i < n; i++) {
                (((s >> i) & 1) ? in : out).push_back(i);
            }
            PhasedAdjacency sub = bv.principal(in);
            LdlFactorization f = ldl_dense(sub);
            if (f.rank != in.size()) {
                continue;
            }
            LcWitness w;
            for (uint32_t p : f.perm) {
                w.pi_a.push_back(in[p]);
            }
            w.pi_a.insert(w.pi_a.end(), out.begin(), out.end());
            w.pi_b = w.pi_a;
            w.k = in.size();
            w.v = BitVector(n);
            for (size_t i = 0; i < n; i++) {
                w.v.set(i, (v >> w.pi_b[i]) & 1);
            }
            PhasedAdjacency bp = PhasedAdjacency::from_graph(b).permuted(w.pi_b);
            for (size_t i = 0; i < n; i++) {
                bp.set_diag(i, w.v.get(i));
            }
            GaussJordanResult gj;
            try {
                gj = gauss_jordan_wn(bp, w.k, false);
            } catch (const EliminationFailure &) {
                continue;
            }
            w.u = BitVector(n);
            for (size_t i = 0; i < n; i++) {
                w.u.set(i, gj.B.diag(i) & 1);
            }
            if (lc_verify_witness(a, b, w)) {
                return w;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

LcDecision lc_equivalent(const Graph &g1, const Graph &g2) {
    if (g1.size() != g2.size()) {
        throw ShapeError("lc_equivalent: graphs differ in size");
    }
    LcOrbit orbit = lc_orbit(g1);
    LcDecision d;
    if (!orbit.contains(g2)) {
        return d;
    }
    d.equivalent = true;
    d.witness = find_witness(g1, g2);
    if (!d.witness) {
        throw ContractViolation("lc_equivalent: orbit member without a Gauss-Jordan witness");
    }
    return d;
}

size_t orbit_diameter(const Graph &g) {
    check_orbit_size(g, MAX_DIAMETER_VERTICES, "orbit_diameter");
    const size_t n = g.size();
    // Isomorphism classes of the orbit, each with a representative, joined by single complementations.
    std::map<uint64_t, size_t> index;
    std::vector<Rows> reps;
    std::vector<std::vector<size_t>> adj;
    std::deque<size_t> queue;
    auto intern = [&](const Rows &r) {
        uint64_t key = canonical_rows(r, n);
        auto [it, fresh] = index.emplace(key, reps.size());
        if (fresh) {
            reps.push_back(unpack(key));
            adj.emplace_back();
            queue.push_back(it->second);
        }
        return it->second;
    };
    intern(to_rows(g));
    while (!queue.empty()) {
        size_t c = queue.front();
        queue.pop_front();
        for (size_t i = 0; i < n; i++) {
            size_t d = intern(complement_at(reps[c], i));
            if (d != c) {
                adj[c].push_back(d);
            }
        }
    }
    size_t diameter = 0;
    for (size_t s = 0; s < reps.size(); s++) {
        std::vector<size_t> dist(reps.size(), SIZE_MAX);
        dist[s] = 0;
        std::deque<size_t> q{s};
        while (!q.empty()) {
            size_t c = q.front();
            q.pop_front();
            for (size_t d : adj[c]) {
                if (dist[d] == SIZE_MAX) {
                    dist[d] = dist[c] + 1;
                    diameter = std::max(diameter, dist[d]);
                    q.push_back(d);
                }
            }
        }
    }
    return diameter;
}

CliffordCircuit Disentangler::circuit() const {
    CliffordCircuit c;
    c.num_qubits = num_qubits;
    for (auto [ctl, tgt] : cnots) {
        c.gates.push_back({GateKind::H, tgt});
        c.gates.push_back({GateKind::CZ, ctl, tgt});
        c.gates.push_back({GateKind::H, tgt});
    }
    for (uint32_t q : flips) {
        c.gates.push_back({GateKind::X, q});
    }
    return c;
}

LearnResult learn_graph_state(const Graph &target, double delta, uint64_t seed) {
    if (!(delta > 0 && delta < 1)) {
        throw std::invalid_argument("learn_graph_state: delta must lie in (0, 1)");
    }
    const size_t n = target.size();
    const size_t s = static_cast<size_t>(std::ceil(std::log2(1 / delta)));
    PhasedAdjacency a = PhasedAdjacency::from_graph(target);
    SimContext ctx = prepare(a);
    SampleSpec spec;
    spec.seed = seed;
    spec.count = 1 + (n + 1) * (s + 1);
    std::vector<BitVector> outcomes = *weak_sample(ctx, spec);

    LearnResult res;
    res.disentangler.num_qubits = n;
    // Reduced basis: rows[i] has its pivot at pivots[i] and no other row has that bit set.
    std::vector<BitVector> rows;
    std::vector<size_t> pivots;
    const BitVector &m0 = outcomes[0];
    size_t used = 1, streak = 0;
    while (streak < s && used < outcomes.size()) {
        BitVector d = outcomes[used++] ^ m0;
        for (size_t i = 0; i < rows.size(); i++) {
            if (d.get(pivots[i])) {
                d ^= rows[i];
            }
        }
        if (d.popcount() == 0) {
            streak++;
            continue;
        }
        streak = 0;
        size_t p = 0;
        while (!d.get(p)) {
            p++;
        }
        for (auto &r : rows) {
            if (r.get(p)) {
                r ^= d;
            }
        }
        rows.push_back(d);
        pivots.push_back(p);
    }
    res.measurements = used;
    res.rank = rows.size();
    res.success = res.rank == rank(target.adjacency());

    Disentangler &u = res.disentangler;
    std::vector<bool> is_pivot(n, false);
    for (size_t p : pivots) {
        is_pivot[p] = true;
        u.kept.push_back(static_cast<uint32_t>(p));
    }
    std::sort(u.kept.begin(), u.kept.end());
    // Off-pivot bits of any outcome m are sum_p m_p rows_p[j] plus a constant fixed by m0.
    for (uint32_t j = 0; j < n; j++) {
        if (is_pivot[j]) {
            continue;
        }
        bool constant = m0.get(j);
        for (size_t i = 0; i < rows.size(); i++) {
            if (rows[i].get(j)) {
                u.cnots.emplace_back(static_cast<uint32_t>(pivots[i]), j);
                constant ^= m0.get(pivots[i]);
            }
        }
        if (constant) {
            u.flips.push_back(j);
        }
    }
    return res;
}

}  // namespace ldlsim
