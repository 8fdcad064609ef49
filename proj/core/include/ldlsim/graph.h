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

#ifndef LDLSIM_GRAPH_H
#define LDLSIM_GRAPH_H

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ldlsim/gf2.h"

namespace ldlsim {

/// Simple undirected graph with sorted adjacency lists.
class Graph {
   public:
    Graph() = default;
    explicit Graph(size_t n) : adj_(n) {
    }
    static Graph from_edges(size_t n, const std::vector<std::pair<uint32_t, uint32_t>> &edges);
    static Graph from_adjacency(const BitMatrix &a);

    size_t size() const {
        return adj_.size();
    }
    size_t edge_count() const;
    const std::vector<uint32_t> &neighbors(uint32_t v) const {
        return adj_[v];
    }
    bool has_edge(uint32_t u, uint32_t v) const;
    void add_edge(uint32_t u, uint32_t v);
    void remove_edge(uint32_t u, uint32_t v);
    void toggle_edge(uint32_t u, uint32_t v);
    std::vector<std::pair<uint32_t, uint32_t>> edges() const;
    BitMatrix adjacency() const;
    Graph permuted(const std::vector<uint32_t> &perm) const;
    bool operator==(const Graph &o) const = default;

   private:
    void check(uint32_t u, uint32_t v) const;
    std::vector<std::vector<uint32_t>> adj_;
};

/// DIMACS-like edge list: `p <n> <m>` (or `p tw <n> <m>`) then `e <u> <v>` or `<u> <v>` lines, 1-indexed.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph &g);

}  // namespace ldlsim

#endif
