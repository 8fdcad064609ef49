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

#ifndef LDLSIM_GENERATORS_H
#define LDLSIM_GENERATORS_H

#include <algorithm>
#include <random>

#include "ldlsim/circuit.h"
#include "ldlsim/gf2.h"
#include "ldlsim/graph.h"
#include "ldlsim/phased.h"
#include "ldlsim/treedec.h"

// Seeded random instances shared by the tests, the acceptance suite and the benchmarks.

namespace ldlsim {

inline BitVector random_vector(std::mt19937_64 &rng, size_t n) {
    BitVector v(n);
    for (size_t i = 0; i < n; i++) {
        v.set(i, rng() & 1);
    }
    return v;
}

inline BitMatrix random_matrix(std::mt19937_64 &rng, size_t r, size_t c, double p = 0.5) {
    std::bernoulli_distribution bit(p);
    BitMatrix m(r, c);
    for (size_t i = 0; i < r; i++) {
        for (size_t j = 0; j < c; j++) {
            m.set(i, j, bit(rng));
        }
    }
    return m;
}

inline BitMatrix random_symmetric(std::mt19937_64 &rng, size_t n, double p = 0.5, double pdiag = 0.5) {
    std::bernoulli_distribution bit(p);
    std::bernoulli_distribution dbit(pdiag);
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i, dbit(rng));
        for (size_t j = i + 1; j < n; j++) {
            bool b = bit(rng);
            m.set(i, j, b);
            m.set(j, i, b);
        }
    }
    return m;
}

inline PhasedAdjacency random_phased(std::mt19937_64 &rng, size_t n, double p = 0.5) {
    PhasedAdjacency a(n);
    std::bernoulli_distribution bit(p);
    for (size_t i = 0; i < n; i++) {
        a.set_diag(i, static_cast<int>(rng() & 3));
        for (size_t j = i + 1; j < n; j++) {
            if (bit(rng)) {
                a.set_edge(i, j, true);
            }
        }
    }
    return a;
}

inline Graph random_graph(std::mt19937_64 &rng, size_t n, double p = 0.5) {
    Graph g(n);
    std::bernoulli_distribution bit(p);
    for (uint32_t i = 0; i < n; i++) {
        for (uint32_t j = i + 1; j < n; j++) {
            if (bit(rng)) {
                g.add_edge(i, j);
            }
        }
    }
    return g;
}

/// Random graph built inside a path of width-k windows, returned with that decomposition.
inline std::pair<Graph, TreeDecomposition> planted_width_graph(std::mt19937_64 &rng, size_t n, size_t k, double p = 0.5) {
    Graph g(n);
    std::bernoulli_distribution bit(p);
    for (uint32_t i = 0; i < n; i++) {
        for (uint32_t j = i + 1; j <= i + k && j < n; j++) {
            if (bit(rng)) {
                g.add_edge(i, j);
            }
        }
    }
    TreeDecomposition td;
    if (n <= k + 1) {
        std::vector<uint32_t> bag(n);
        for (uint32_t i = 0; i < n; i++) {
            bag[i] = i;
        }
        td.bags.push_back(bag);
        return {g, td};
    }
    for (uint32_t s = 0; s + k < n; s++) {
        std::vector<uint32_t> bag;
        for (uint32_t i = s; i <= s + k; i++) {
            bag.push_back(i);
        }
        td.bags.push_back(bag);
        if (s > 0) {
            td.edges.push_back({s - 1, s});
        }
    }
    return {g, td};
}

inline CliffordCircuit random_circuit(std::mt19937_64 &rng, size_t n, size_t m, size_t t_count = 0) {
    static const GateKind one[] = {GateKind::H, GateKind::S, GateKind::SDG, GateKind::Z, GateKind::X};
    CliffordCircuit c;
    c.num_qubits = n;
    std::vector<size_t> t_at;
    for (size_t i = 0; i < t_count; i++) {
        t_at.push_back(rng() % (m + 1));
    }
    std::sort(t_at.begin(), t_at.end());
    size_t ti = 0;
    for (size_t g = 0; g <= m; g++) {
        while (ti < t_at.size() && t_at[ti] == g) {
            c.gates.push_back({rng() & 1 ? GateKind::T : GateKind::TDG, static_cast<uint32_t>(rng() % n)});
            ti++;
        }
        if (g == m) {
            break;
        }
        uint32_t a = rng() % n;
        if (n >= 2 && rng() % 3 == 0) {
            uint32_t b = rng() % (n - 1);
            b += b >= a;
            if (rng() & 1) {
                c.gates.push_back({GateKind::CZ, a, b});
            } else {
                c.gates.push_back({GateKind::H, b});
                c.gates.push_back({GateKind::CZ, a, b});
                c.gates.push_back({GateKind::H, b});
            }
        } else {
            c.gates.push_back({one[rng() % 5], a});
        }
    }
    return c;
}

}  // namespace ldlsim

#endif
