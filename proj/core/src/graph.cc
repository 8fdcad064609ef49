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

#include "ldlsim/graph.h"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace ldlsim {

Graph Graph::from_edges(size_t n, const std::vector<std::pair<uint32_t, uint32_t>> &edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        g.add_edge(u, v);
    }
    return g;
}

Graph Graph::from_adjacency(const BitMatrix &a) {
    Graph g(a.rows());
    for (uint32_t i = 0; i < a.rows(); i++) {
        const word_t *row = a.row(i);
        for (size_t w = (i + 1) / WORD_BITS; w < a.stride(); w++) {
            word_t bits = row[w];
            if (w == (i + 1) / WORD_BITS) {
                bits &= ~word_t{0} << ((i + 1) % WORD_BITS);
            }
            for (; bits; bits &= bits - 1) {
                const uint32_t j = static_cast<uint32_t>(w * WORD_BITS + std::countr_zero(bits));
                g.adj_[i].push_back(j);
                g.adj_[j].push_back(i);
            }
        }
    }
    return g;
}

size_t Graph::edge_count() const {
    size_t c = 0;
    for (const auto &a : adj_) {
        c += a.size();
    }
    return c / 2;
}

void Graph::check(uint32_t u, uint32_t v) const {
    if (u >= adj_.size() || v >= adj_.size()) {
        throw std::out_of_range("graph vertex out of range");
    }
    if (u == v) {
        throw std::invalid_argument("self-loop in simple graph");
    }
}

bool Graph::has_edge(uint32_t u, uint32_t v) const {
    check(u, v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

static void insert_sorted(std::vector<uint32_t> &a, uint32_t v) {
    auto it = std::lower_bound(a.begin(), a.end(), v);
    if (it == a.end() || *it != v) {
        a.insert(it, v);
    }
}

static void erase_sorted(std::vector<uint32_t> &a, uint32_t v) {
    auto it = std::lower_bound(a.begin(), a.end(), v);
    if (it != a.end() && *it == v) {
        a.erase(it);
    }
}

void Graph::add_edge(uint32_t u, uint32_t v) {
    check(u, v);
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
}

void Graph::remove_edge(uint32_t u, uint32_t v) {
    check(u, v);
    erase_sorted(adj_[u], v);
    erase_sorted(adj_[v], u);
}

void Graph::toggle_edge(uint32_t u, uint32_t v) {
    if (has_edge(u, v)) {
        remove_edge(u, v);
    } else {
        add_edge(u, v);
    }
}

std::vector<std::pair<uint32_t, uint32_t>> Graph::edges() const {
    std::vector<std::pair<uint32_t, uint32_t>> out;
    for (uint32_t u = 0; u < adj_.size(); u++) {
        for (uint32_t v : adj_[u]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

BitMatrix Graph::adjacency() const {
    BitMatrix a(size(), size());
    for (uint32_t u = 0; u < adj_.size(); u++) {
        for (uint32_t v : adj_[u]) {
            a.set(u, v, true);
        }
    }
    return a;
}

Graph Graph::permuted(const std::vector<uint32_t> &perm) const {
    Graph g(size());
    for (auto [u, v] : edges()) {
        g.add_edge(perm[u], perm[v]);
    }
    return g;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    Graph g;
    bool have_header = false;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok == "c" || tok[0] == '#') {
            continue;
        }
        if (tok == "p") {
            std::string a;
            ls >> a;
            if (a == "tw" || a == "edge") {
                ls >> a;
            }
            g = Graph(std::stoul(a));
            have_header = true;
            continue;
        }
        if (!have_header) {
            throw std::invalid_argument("edge list line " + std::to_string(lineno) + ": missing p header");
        }
        uint64_t u, v;
        if (tok == "e") {
            ls >> u >> v;
        } else {
            u = std::stoul(tok);
            ls >> v;
        }
        if (!ls || u == 0 || v == 0 || u > g.size() || v > g.size()) {
            throw std::invalid_argument("edge list line " + std::to_string(lineno) + ": bad edge");
        }
        if (u != v) {
            g.add_edge(u - 1, v - 1);
        }
    }
    if (!have_header) {
        throw std::invalid_argument("edge list: missing p header");
    }
    return g;
}

std::string format_edge_list(const Graph &g) {
    std::ostringstream out;
    out << "p " << g.size() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) {
        out << "e " << u + 1 << " " << v + 1 << "\n";
    }
    return out.str();
}

}  // namespace ldlsim
