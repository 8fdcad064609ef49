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

#include "ldlsim/treedec.h"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace ldlsim {

using Kind = TreeDecompositionError::Kind;

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto &b : bags) {
        w = std::max(w, static_cast<int>(b.size()) - 1);
    }
    return w;
}

static std::vector<std::vector<uint32_t>> tree_adjacency(const TreeDecomposition &td) {
    const size_t nb = td.bags.size();
    std::vector<std::vector<uint32_t>> adj(nb);
    if (nb == 0) {
        if (!td.edges.empty()) {
            throw TreeDecompositionError(Kind::NotATree, "tree edges without bags");
        }
        return adj;
    }
    if (td.edges.size() != nb - 1) {
        throw TreeDecompositionError(Kind::NotATree, "bag tree must have exactly #bags-1 edges");
    }
    for (auto [a, b] : td.edges) {
        if (a >= nb || b >= nb || a == b) {
            throw TreeDecompositionError(Kind::NotATree, "bad tree edge");
        }
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<bool> seen(nb, false);
    std::vector<uint32_t> stack{0};
    seen[0] = true;
    size_t count = 1;
    while (!stack.empty()) {
        uint32_t x = stack.back();
        stack.pop_back();
        for (uint32_t y : adj[x]) {
            if (!seen[y]) {
                seen[y] = true;
                count++;
                stack.push_back(y);
            }
        }
    }
    if (count != nb) {
        throw TreeDecompositionError(Kind::NotATree, "bag tree is disconnected");
    }
    return adj;
}

int validate(const TreeDecomposition &td, const Graph &g) {
    const size_t n = g.size();
    tree_adjacency(td);
    std::vector<std::vector<uint32_t>> where(n);
    for (uint32_t b = 0; b < td.bags.size(); b++) {
        const auto &bag = td.bags[b];
        for (size_t k = 0; k < bag.size(); k++) {
            if (bag[k] >= n) {
                throw TreeDecompositionError(Kind::BadVertex, "bag " + std::to_string(b) + " names vertex out of range");
            }
            if (k > 0 && bag[k - 1] >= bag[k]) {
                throw TreeDecompositionError(Kind::BadVertex, "bag " + std::to_string(b) + " is not sorted/unique");
            }
            where[bag[k]].push_back(b);
        }
    }
    for (uint32_t v = 0; v < n; v++) {
        if (where[v].empty()) {
            throw TreeDecompositionError(Kind::UncoveredVertex, "vertex " + std::to_string(v) + " is in no bag");
        }
    }
    for (auto [u, v] : g.edges()) {
        const auto &a = where[u];
        const auto &b = where[v];
        std::vector<uint32_t> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        if (common.empty()) {
            throw TreeDecompositionError(
                Kind::UncoveredEdge, "edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag");
        }
    }
    std::vector<size_t> inner(n, 0);
    for (auto [a, b] : td.edges) {
        const auto &x = td.bags[a];
        const auto &y = td.bags[b];
        std::vector<uint32_t> common;
        std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
        for (uint32_t v : common) {
            inner[v]++;
        }
    }
    for (uint32_t v = 0; v < n; v++) {
        if (inner[v] + 1 != where[v].size()) {
            throw TreeDecompositionError(
                Kind::DisconnectedVertex, "bags holding vertex " + std::to_string(v) + " are not connected");
        }
    }
    return td.width();
}

static size_t fill_in(const std::vector<std::set<uint32_t>> &adj, uint32_t v) {
    size_t missing = 0;
    for (auto it = adj[v].begin(); it != adj[v].end(); ++it) {
        auto jt = it;
        for (++jt; jt != adj[v].end(); ++jt) {
            if (!adj[*it].count(*jt)) {
                missing++;
            }
        }
    }
    return missing;
}

TreeDecomposition heuristic_decompose(const Graph &g, Heuristic strategy) {
    const uint32_t n = g.size();
    std::vector<std::set<uint32_t>> adj(n);
    for (uint32_t v = 0; v < n; v++) {
        adj[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
    }
    auto score = [&](uint32_t v) -> size_t {
        return strategy == Heuristic::MinDegree ? adj[v].size() : fill_in(adj, v);
    };
    std::vector<size_t> cur(n);
    std::set<std::pair<size_t, uint32_t>> queue;
    for (uint32_t v = 0; v < n; v++) {
        cur[v] = score(v);
        queue.insert({cur[v], v});
    }
    std::vector<uint32_t> pos(n);
    std::vector<std::vector<uint32_t>> later(n);
    for (uint32_t step = 0; step < n; step++) {
        uint32_t v = queue.begin()->second;
        queue.erase(queue.begin());
        pos[v] = step;
        std::vector<uint32_t> nb(adj[v].begin(), adj[v].end());
        later[v] = nb;
        for (uint32_t a : nb) {
            adj[a].erase(v);
        }
        for (size_t i = 0; i < nb.size(); i++) {
            for (size_t j = i + 1; j < nb.size(); j++) {
                adj[nb[i]].insert(nb[j]);
                adj[nb[j]].insert(nb[i]);
            }
        }
        adj[v].clear();
        std::set<uint32_t> touched(nb.begin(), nb.end());
        if (strategy == Heuristic::MinFill) {
            for (uint32_t a : nb) {
                touched.insert(adj[a].begin(), adj[a].end());
            }
        }
        for (uint32_t a : touched) {
            size_t s = score(a);
            if (s != cur[a]) {
                queue.erase({cur[a], a});
                cur[a] = s;
                queue.insert({s, a});
            }
        }
    }
    TreeDecomposition td;
    td.bags.resize(n);
    std::vector<uint32_t> roots;
    for (uint32_t v = 0; v < n; v++) {
        auto &bag = td.bags[v];
        bag = later[v];
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        if (later[v].empty()) {
            roots.push_back(v);
            continue;
        }
        uint32_t p = *std::min_element(later[v].begin(), later[v].end(), [&](uint32_t a, uint32_t b) {
            return pos[a] < pos[b];
        });
        td.edges.emplace_back(p, v);
    }
    if (roots.size() > 1) {
        uint32_t hub = td.bags.size();
        td.bags.emplace_back();
        for (uint32_t r : roots) {
            td.edges.emplace_back(hub, r);
        }
    }
    return td;
}

RootedView rooted_view(const TreeDecomposition &td) {
    auto adj = tree_adjacency(td);
    RootedView rv;
    const size_t nb = td.bags.size();
    if (nb == 0) {
        return rv;
    }
    if (td.root) {
        rv.root = *td.root;
    } else {
        uint32_t best = UINT32_MAX;
        for (uint32_t b = 0; b < nb; b++) {
            if (!td.bags[b].empty() && td.bags[b][0] < best) {
                best = td.bags[b][0];
                rv.root = b;
            }
        }
    }
    rv.parent.assign(nb, -1);
    rv.children.assign(nb, {});
    std::vector<uint32_t> order{rv.root};
    std::vector<bool> seen(nb, false);
    seen[rv.root] = true;
    for (size_t i = 0; i < order.size(); i++) {
        uint32_t x = order[i];
        std::vector<uint32_t> nbrs = adj[x];
        std::sort(nbrs.begin(), nbrs.end());
        for (uint32_t y : nbrs) {
            if (!seen[y]) {
                seen[y] = true;
                rv.parent[y] = static_cast<int32_t>(x);
                rv.children[x].push_back(y);
                order.push_back(y);
            }
        }
    }
    std::vector<std::pair<uint32_t, size_t>> stack{{rv.root, 0}};
    while (!stack.empty()) {
        auto &[x, i] = stack.back();
        if (i < rv.children[x].size()) {
            uint32_t c = rv.children[x][i++];
            stack.push_back({c, 0});
        } else {
            rv.post_order.push_back(x);
            stack.pop_back();
        }
    }
    return rv;
}

TreeDecomposition binarize_and_root(const TreeDecomposition &td, int tau) {
    (void)tau;
    if (td.bags.empty()) {
        return td;
    }
    TreeDecomposition in = td;
    in.root.reset();
    RootedView rv = rooted_view(in);
    const size_t cap = static_cast<size_t>(std::max(td.width(), 0)) + 1;
    std::vector<std::vector<uint32_t>> bags = td.bags;
    std::vector<std::vector<uint32_t>> kids(bags.size());
    std::vector<uint32_t> bfs{rv.root};
    for (size_t i = 0; i < bfs.size(); i++) {
        uint32_t b = bfs[i];
        std::deque<uint32_t> work(rv.children[b].begin(), rv.children[b].end());
        while (!work.empty()) {
            uint32_t c = work.front();
            work.pop_front();
            std::vector<uint32_t> u;
            std::set_union(bags[b].begin(), bags[b].end(), bags[c].begin(), bags[c].end(), std::back_inserter(u));
            if (u.size() <= cap) {
                bags[b] = std::move(u);
                for (uint32_t gc : rv.children[c]) {
                    work.push_back(gc);
                }
            } else {
                kids[b].push_back(c);
                bfs.push_back(c);
            }
        }
    }
    TreeDecomposition out;
    std::vector<std::pair<uint32_t, int64_t>> stack{{rv.root, -1}};
    while (!stack.empty()) {
        auto [b, parent] = stack.back();
        stack.pop_back();
        uint32_t id = out.bags.size();
        out.bags.push_back(bags[b]);
        if (parent >= 0) {
            out.edges.emplace_back(static_cast<uint32_t>(parent), id);
        }
        const auto &ch = kids[b];
        uint32_t holder = id;
        size_t i = 0;
        while (ch.size() - i > 2) {
            stack.push_back({ch[i], holder});
            uint32_t copy = out.bags.size();
            out.bags.push_back(bags[b]);
            out.edges.emplace_back(holder, copy);
            holder = copy;
            i++;
        }
        for (; i < ch.size(); i++) {
            stack.push_back({ch[i], holder});
        }
    }
    out.root = 0;
    return out;
}

TreeDecomposition circuit_slices(const CliffordCircuit &c) {
    CircuitNetwork net = circuit_network(c);
    const size_t m = std::max<size_t>(c.gates.size(), 1);
    const size_t w = std::max<size_t>(c.num_qubits, 1);
    const size_t windows = (m + w - 1) / w;
    auto window_of = [&](uint32_t t) -> size_t {
        size_t tc = std::clamp<size_t>(t, 1, m);
        return (tc - 1) / w;
    };
    TreeDecomposition td;
    td.bags.resize(windows);
    for (uint32_t v = 0; v < net.nodes.size(); v++) {
        size_t a = window_of(net.nodes[v].begin);
        size_t b = window_of(net.nodes[v].end);
        for (size_t k = a; k <= b; k++) {
            td.bags[k].push_back(v);
        }
    }
    for (uint32_t k = 0; k + 1 < windows; k++) {
        td.edges.emplace_back(k, k + 1);
    }
    td.root = 0;
    return td;
}

TreeDecomposition parse_td(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    TreeDecomposition td;
    bool header = false;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok == "c") {
            continue;
        }
        auto fail = [&](const std::string &msg) {
            return std::invalid_argument(".td line " + std::to_string(lineno) + ": " + msg);
        };
        if (tok == "s") {
            std::string kind;
            size_t nb, wp1, nv;
            if (!(ls >> kind >> nb >> wp1 >> nv) || kind != "td") {
                throw fail("bad header");
            }
            td.bags.assign(nb, {});
            header = true;
        } else if (!header) {
            throw fail("missing s td header");
        } else if (tok == "b") {
            size_t id;
            if (!(ls >> id) || id == 0 || id > td.bags.size()) {
                throw fail("bad bag id");
            }
            std::vector<uint32_t> bag;
            uint64_t v;
            while (ls >> v) {
                if (v == 0) {
                    throw fail("vertices are 1-indexed");
                }
                bag.push_back(v - 1);
            }
            std::sort(bag.begin(), bag.end());
            bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
            td.bags[id - 1] = bag;
        } else {
            size_t a = std::stoul(tok), b;
            if (!(ls >> b) || a == 0 || b == 0) {
                throw fail("bad tree edge");
            }
            td.edges.emplace_back(a - 1, b - 1);
        }
    }
    if (!header) {
        throw std::invalid_argument(".td: missing s td header");
    }
    return td;
}

std::string format_td(const TreeDecomposition &td, size_t num_vertices) {
    std::ostringstream out;
    out << "s td " << td.bags.size() << " " << td.width() + 1 << " " << num_vertices << "\n";
    for (size_t b = 0; b < td.bags.size(); b++) {
        out << "b " << b + 1;
        for (uint32_t v : td.bags[b]) {
            out << " " << v + 1;
        }
        out << "\n";
    }
    for (auto [a, b] : td.edges) {
        out << a + 1 << " " << b + 1 << "\n";
    }
    return out.str();
}

}  // namespace ldlsim
