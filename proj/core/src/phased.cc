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

#include "ldlsim/phased.h"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace ldlsim {

PhasedAdjacency PhasedAdjacency::from_graph(const Graph &g) {
    PhasedAdjacency a(g.size());
    for (auto [u, v] : g.edges()) {
        a.set_edge(u, v, true);
    }
    return a;
}

PhasedAdjacency PhasedAdjacency::from_matrix(const BitMatrix &m) {
    if (!m.is_symmetric()) {
        throw ContractViolation("PhasedAdjacency::from_matrix: input is not symmetric");
    }
    PhasedAdjacency a(m.rows());
    a.off_ = m;
    for (size_t i = 0; i < m.rows(); i++) {
        a.lo_.set(i, m.get(i, i));
        a.off_.set(i, i, false);
    }
    return a;
}

void PhasedAdjacency::set_edge(size_t i, size_t j, bool b) {
    if (i == j) {
        throw ContractViolation("PhasedAdjacency::set_edge on the diagonal");
    }
    off_.set(i, j, b);
    off_.set(j, i, b);
}

void PhasedAdjacency::toggle_edge(size_t i, size_t j) {
    set_edge(i, j, !edge(i, j));
}

BitMatrix PhasedAdjacency::omega1() const {
    BitMatrix m = off_;
    for (size_t i = 0; i < size(); i++) {
        m.set(i, i, lo_.get(i));
    }
    return m;
}

Graph PhasedAdjacency::graph() const {
    return Graph::from_adjacency(off_);
}

PhasedAdjacency PhasedAdjacency::permuted(const std::vector<uint32_t> &perm) const {
    PhasedAdjacency r(perm.size());
    for (size_t i = 0; i < perm.size(); i++) {
        r.set_diag(i, diag(perm[i]));
        for (size_t j = i + 1; j < perm.size(); j++) {
            if (edge(perm[i], perm[j])) {
                r.set_edge(i, j, true);
            }
        }
    }
    return r;
}

int PhasedAdjacency::quadratic_form(const BitVector &x) const {
    if (x.size() != size()) {
        throw ShapeError("quadratic_form: length mismatch");
    }
    int acc = 0;
    size_t pairs = 0;
    for (size_t i = 0; i < size(); i++) {
        if (!x.get(i)) {
            continue;
        }
        acc += diag(i);
        const word_t *r = off_.row(i);
        for (size_t k = 0; k < off_.stride(); k++) {
            pairs += std::popcount(r[k] & x.words()[k]);
        }
    }
    // Each unordered pair was counted twice, contributing 2 per pair.
    return static_cast<int>((acc + pairs) & 3);
}

std::string PhasedAdjacency::str() const {
    return format_pgs(*this);
}

PhasedAdjacency parse_pgs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    PhasedAdjacency a;
    bool header = false;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        if (auto p = line.find('#'); p != std::string::npos) {
            line.resize(p);
        }
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) {
            continue;
        }
        auto fail = [&](const std::string &m) {
            return std::invalid_argument("pgs line " + std::to_string(lineno) + ": " + m);
        };
        if (tok == "pgs") {
            size_t n;
            if (!(ls >> n)) {
                throw fail("bad header");
            }
            a = PhasedAdjacency(n);
            header = true;
        } else if (!header) {
            throw fail("missing pgs header");
        } else if (tok == "d") {
            size_t v;
            int val;
            if (!(ls >> v >> val) || v >= a.size() || val < 0 || val > 3) {
                throw fail("bad diagonal entry");
            }
            a.set_diag(v, val);
        } else if (tok == "e") {
            size_t u, v;
            if (!(ls >> u >> v) || u >= a.size() || v >= a.size() || u == v) {
                throw fail("bad edge");
            }
            a.set_edge(u, v, true);
        } else {
            throw fail("unknown record '" + tok + "'");
        }
    }
    if (!header) {
        throw std::invalid_argument("pgs: missing header");
    }
    return a;
}

std::string format_pgs(const PhasedAdjacency &a) {
    std::ostringstream out;
    out << "pgs " << a.size() << "\n";
    for (size_t i = 0; i < a.size(); i++) {
        if (a.diag(i)) {
            out << "d " << i << " " << int(a.diag(i)) << "\n";
        }
    }
    for (auto [u, v] : a.graph().edges()) {
        out << "e " << u << " " << v << "\n";
    }
    return out.str();
}

}  // namespace ldlsim
