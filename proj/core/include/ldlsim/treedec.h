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

#ifndef LDLSIM_TREEDEC_H
#define LDLSIM_TREEDEC_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ldlsim/circuit.h"
#include "ldlsim/graph.h"

namespace ldlsim {

struct TreeDecomposition {
    /// Each bag is sorted and duplicate free.
    std::vector<std::vector<uint32_t>> bags;
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    std::optional<uint32_t> root;

    int width() const;
};

struct TreeDecompositionError : std::runtime_error {
    enum class Kind { UncoveredVertex, UncoveredEdge, DisconnectedVertex, NotATree, BadVertex };
    TreeDecompositionError(Kind kind, const std::string &msg) : std::runtime_error(msg), kind(kind) {
    }
    Kind kind;
};

/// Parent/children view of a rooted decomposition, with a children-before-parent order.
struct RootedView {
    uint32_t root = 0;
    std::vector<int32_t> parent;
    std::vector<std::vector<uint32_t>> children;
    std::vector<uint32_t> post_order;
};

/// Returns the width, or throws TreeDecompositionError naming the violated condition.
int validate(const TreeDecomposition &td, const Graph &g);

enum class Heuristic { MinDegree, MinFill };
TreeDecomposition heuristic_decompose(const Graph &g, Heuristic strategy);

/// Roots at the bag holding the lowest vertex, merges child bags into parents when the union fits
/// within the existing width, and splits nodes with more than two children using duplicated bags.
TreeDecomposition binarize_and_root(const TreeDecomposition &td, int tau);

RootedView rooted_view(const TreeDecomposition &td);

/// Path decomposition of `circuit_network(c).graph()` over consecutive windows of max(1, n) gates.
TreeDecomposition circuit_slices(const CliffordCircuit &c);

TreeDecomposition parse_td(std::string_view text);
std::string format_td(const TreeDecomposition &td, size_t num_vertices);

}  // namespace ldlsim

#endif
