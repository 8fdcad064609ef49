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

#include <gtest/gtest.h>

#include "ldlsim/phased.h"
#include "test_util.h"

using namespace ldlsim;
using ldlsim::testing::planted_width_graph;
using ldlsim::testing::random_circuit;
using ldlsim::testing::random_graph;
using ldlsim::testing::random_phased;

namespace {

using Kind = TreeDecompositionError::Kind;

Kind error_kind(const TreeDecomposition &td, const Graph &g) {
    try {
        validate(td, g);
    } catch (const TreeDecompositionError &e) {
        return e.kind;
    }
    ADD_FAILURE() << "expected validate to throw";
    return Kind::BadVertex;
}

Graph path_graph(size_t n) {
    Graph g(n);
    for (uint32_t i = 0; i + 1 < n; i++) {
        g.add_edge(i, i + 1);
    }
    return g;
}

Graph cycle_graph(size_t n) {
    Graph g = path_graph(n);
    g.add_edge(0, static_cast<uint32_t>(n - 1));
    return g;
}

Graph grid_graph(size_t r, size_t c) {
    Graph g(r * c);
    for (uint32_t i = 0; i < r; i++) {
        for (uint32_t j = 0; j < c; j++) {
            uint32_t v = i * c + j;
            if (j + 1 < c) {
                g.add_edge(v, v + 1);
            }
            if (i + 1 < r) {
                g.add_edge(v, v + c);
            }
        }
    }
    return g;
}

Graph random_tree(std::mt19937_64 &rng, size_t n) {
    Graph g(n);
    for (uint32_t v = 1; v < n; v++) {
        g.add_edge(v, static_cast<uint32_t>(rng() % v));
    }
    return g;
}

size_t max_children(const TreeDecomposition &td) {
    RootedView view = rooted_view(td);
    size_t m = 0;
    for (const auto &c : view.children) {
        m = std::max(m, c.size());
    }
    return m;
}

}  // namespace

TEST(treedec, validate_examples) {
    Graph p4 = path_graph(4);
    TreeDecomposition td;
    td.bags = {{0, 1}, {1, 2}, {2, 3}};
    td.edges = {{0, 1}, {1, 2}};
    EXPECT_EQ(validate(td, p4), 1);
    EXPECT_EQ(td.width(), 1);

    std::mt19937_64 rng(1);
    Graph g = random_graph(rng, 9);
    TreeDecomposition whole;
    whole.bags = {{0, 1, 2, 3, 4, 5, 6, 7, 8}};
    EXPECT_EQ(validate(whole, g), 8);

    TreeDecomposition missing_edge;
    missing_edge.bags = {{0, 1}, {2, 3}};
    missing_edge.edges = {{0, 1}};
    EXPECT_EQ(error_kind(missing_edge, p4), Kind::UncoveredEdge);

    TreeDecomposition missing_vertex;
    missing_vertex.bags = {{0, 1}, {1, 2}};
    missing_vertex.edges = {{0, 1}};
    EXPECT_EQ(error_kind(missing_vertex, p4), Kind::UncoveredVertex);

    TreeDecomposition disconnected;
    disconnected.bags = {{0, 1}, {2, 3}, {1, 2}};
    disconnected.edges = {{0, 1}, {1, 2}};
    EXPECT_EQ(error_kind(disconnected, p4), Kind::DisconnectedVertex);

    TreeDecomposition cyclic = td;
    cyclic.edges.push_back({0, 2});
    EXPECT_EQ(error_kind(cyclic, p4), Kind::NotATree);

    TreeDecomposition bad = td;
    bad.bags[0].push_back(7);
    EXPECT_EQ(error_kind(bad, p4), Kind::BadVertex);
}

TEST(treedec, heuristic_examples) {
    std::mt19937_64 rng(2);
    for (Heuristic h : {Heuristic::MinDegree, Heuristic::MinFill}) {
        Graph tree = random_tree(rng, 40);
        EXPECT_EQ(validate(heuristic_decompose(tree, h), tree), 1);
        for (size_t n : {3, 4, 10, 33}) {
            Graph c = cycle_graph(n);
            EXPECT_EQ(validate(heuristic_decompose(c, h), c), 2);
        }
        Graph grid = grid_graph(5, 5);
        EXPECT_LE(validate(heuristic_decompose(grid, h), grid), 5);
        Graph empty(6);
        TreeDecomposition e = heuristic_decompose(empty, h);
        EXPECT_EQ(validate(e, empty), 0);
    }
}

TEST(treedec, heuristic_is_always_valid) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; trial++) {
        size_t n = 1 + rng() % 30;
        Graph g = random_graph(rng, n, 0.05 + 0.4 * (rng() % 100) / 100.0);
        for (Heuristic h : {Heuristic::MinDegree, Heuristic::MinFill}) {
            TreeDecomposition a = heuristic_decompose(g, h);
            ASSERT_NO_THROW(validate(a, g));
            EXPECT_EQ(heuristic_decompose(g, h).bags, a.bags);
        }
    }
}

TEST(treedec, planted_width_band) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 50; trial++) {
        size_t k = 1 + rng() % 4;
        auto [g, planted] = planted_width_graph(rng, 20 + rng() % 60, k);
        ASSERT_LE(validate(planted, g), static_cast<int>(k));
        for (Heuristic h : {Heuristic::MinDegree, Heuristic::MinFill}) {
            EXPECT_LE(validate(heuristic_decompose(g, h), g), static_cast<int>(2 * k));
        }
    }
}

TEST(treedec, binarize_star) {
    Graph g(7);
    TreeDecomposition star;
    star.bags = {{0}};
    for (uint32_t i = 1; i < 7; i++) {
        g.add_edge(0, i);
        star.bags.push_back({0, i});
        star.edges.push_back({0, i});
    }
    TreeDecomposition b = binarize_and_root(star, 1);
    EXPECT_TRUE(b.root.has_value());
    EXPECT_EQ(validate(b, g), 1);
    EXPECT_LE(max_children(b), 2u);
}

TEST(treedec, binarize_binary_path_fixed_point) {
    Graph p = path_graph(6);
    TreeDecomposition td;
    td.bags = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}};
    td.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}};
    td.root = 0;
    TreeDecomposition b = binarize_and_root(td, 1);
    EXPECT_EQ(b.bags.size(), td.bags.size());
    EXPECT_EQ(validate(b, p), 1);
    std::vector<std::vector<uint32_t>> sa = td.bags, sb = b.bags;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    EXPECT_EQ(sa, sb);
}

TEST(treedec, binarize_properties) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; trial++) {
        size_t n = 1 + rng() % 50;
        Graph g = random_graph(rng, n, 0.02 + 0.2 * (rng() % 100) / 100.0);
        TreeDecomposition td = heuristic_decompose(g, trial % 2 ? Heuristic::MinFill : Heuristic::MinDegree);
        int w = validate(td, g);
        int tau = 1 + static_cast<int>(rng() % 5);
        TreeDecomposition b = binarize_and_root(td, tau);
        ASSERT_EQ(validate(b, g), w);
        EXPECT_TRUE(b.root.has_value());
        EXPECT_LE(max_children(b), 2u);
        EXPECT_LE(b.bags.size(), 4 * n / static_cast<size_t>(tau) + td.bags.size());
        RootedView view = rooted_view(b);
        EXPECT_EQ(view.post_order.size(), b.bags.size());
        EXPECT_EQ(view.post_order.back(), view.root);
    }
}

TEST(treedec, circuit_slices_examples) {
    CliffordCircuit one = parse_circuit("H 0\n");
    TreeDecomposition t1 = circuit_slices(one);
    EXPECT_EQ(t1.bags.size(), 1u);
    EXPECT_NO_THROW(validate(t1, circuit_network(one).graph()));

    CliffordCircuit small = parse_circuit("H 0\nCZ 0 1\nS 1\nH 1\n");
    EXPECT_LE(validate(circuit_slices(small), circuit_network(small).graph()), 8 * 2);

    std::string deep;
    for (int layer = 0; layer < 40; layer++) {
        for (int q = 0; q < 6; q++) {
            deep += "H " + std::to_string(q) + "\n";
        }
        for (int q = layer % 2; q + 1 < 6; q += 2) {
            deep += "CZ " + std::to_string(q) + " " + std::to_string(q + 1) + "\n";
        }
    }
    CliffordCircuit dc = parse_circuit(deep);
    EXPECT_LE(validate(circuit_slices(dc), circuit_network(dc).graph()), 8 * 6);
}

TEST(treedec, circuit_slices_random) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 1 + rng() % 8;
        CliffordCircuit c = random_circuit(rng, n, 1 + rng() % 120);
        EXPECT_LE(validate(circuit_slices(c), circuit_network(c).graph()), static_cast<int>(8 * n));
    }
}

TEST(formats, td_round_trip) {
    std::mt19937_64 rng(7);
    Graph g = random_graph(rng, 15, 0.2);
    TreeDecomposition td = heuristic_decompose(g, Heuristic::MinFill);
    std::string text = format_td(td, g.size());
    EXPECT_EQ(text.substr(0, 5), "s td ");
    TreeDecomposition back = parse_td(text);
    EXPECT_EQ(back.bags, td.bags);
    EXPECT_EQ(validate(back, g), td.width());
    EXPECT_THROW(parse_td("b 1 1\n"), std::exception);
}

TEST(formats, edge_list_round_trip) {
    std::mt19937_64 rng(8);
    Graph g = random_graph(rng, 12, 0.3);
    Graph back = parse_edge_list(format_edge_list(g));
    EXPECT_EQ(back.edges(), g.edges());
    Graph tri = parse_edge_list("c comment\np 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    EXPECT_EQ(tri.edge_count(), 3u);
    EXPECT_THROW(parse_edge_list("e 1 2\n"), std::invalid_argument);
    EXPECT_THROW(parse_edge_list("p 2 1\ne 1 5\n"), std::invalid_argument);
}

TEST(formats, pgs_round_trip) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; trial++) {
        PhasedAdjacency a = random_phased(rng, 1 + rng() % 20);
        EXPECT_EQ(parse_pgs(format_pgs(a)), a);
    }
}

TEST(formats, circuit_text) {
    CliffordCircuit c = parse_circuit("# bell\nH 0\nCNOT 0 1\n");
    EXPECT_EQ(c.num_qubits, 2u);
    EXPECT_EQ(c.gates.size(), 4u);
    EXPECT_EQ(parse_circuit(c.str()).gates, c.gates);
    EXPECT_THROW(parse_circuit("H 0\nFOO 1\n"), ParseError);
    try {
        parse_circuit("H 0\nCZ 0\n");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line, 2u);
    }
}

TEST(phased, basics) {
    std::mt19937_64 rng(10);
    PhasedAdjacency a = random_phased(rng, 10);
    BitVector x = ldlsim::testing::random_vector(rng, 10);
    int q = 0;
    for (size_t i = 0; i < 10; i++) {
        if (!x.get(i)) {
            continue;
        }
        q += a.diag(i);
        for (size_t j = i + 1; j < 10; j++) {
            q += 2 * (x.get(j) && a.edge(i, j));
        }
    }
    EXPECT_EQ(a.quadratic_form(x), q % 4);
    std::vector<uint32_t> perm = {3, 1, 4, 0, 5, 9, 2, 6, 8, 7};
    PhasedAdjacency p = a.permuted(perm);
    for (size_t i = 0; i < 10; i++) {
        EXPECT_EQ(p.diag(i), a.diag(perm[i]));
        for (size_t j = 0; j < 10; j++) {
            EXPECT_EQ(p.edge(i, j), a.edge(perm[i], perm[j]));
        }
    }
    EXPECT_TRUE(a.omega1().is_symmetric());
}
