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

#ifndef LDLSIM_CIRCUIT_H
#define LDLSIM_CIRCUIT_H

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ldlsim/graph.h"

namespace ldlsim {

enum class GateKind : uint8_t { H, S, SDG, Z, X, CZ, T, TDG };

struct Gate {
    GateKind kind;
    uint32_t a;
    uint32_t b = 0;
    bool operator==(const Gate &o) const = default;
};

struct CliffordCircuit {
    size_t num_qubits = 0;
    std::vector<Gate> gates;

    size_t t_count() const;
    bool is_clifford() const {
        return t_count() == 0;
    }
    std::string str() const;
};

struct ParseError : std::runtime_error {
    ParseError(size_t line, const std::string &msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {
    }
    size_t line;
};

struct UnsupportedGate : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string_view gate_name(GateKind k);

/// Line-oriented circuit text. `#` starts a comment. CNOT a b becomes H b; CZ a b; H b.
CliffordCircuit parse_circuit(std::string_view text, size_t min_qubits = 0);

/// Tensor network of <x|U|0^n> built from per-gate spider templates.
/// Z/S/SDG/T/TDG are Z spiders, X is an X spider of phase pi, H is a Hadamard on the wire,
/// CZ is two Z spiders joined by a Hadamard link, each input is an X(0) spider and each
/// output is a Hadamard followed by a Z spider whose phase is x_q * pi.
struct CircuitNetwork {
    enum class Kind : uint8_t { Z, X };
    struct Node {
        Kind kind;
        uint8_t phase8;
        uint32_t qubit;
        uint32_t begin;
        uint32_t end;
        int32_t output;
    };
    struct Link {
        uint32_t u;
        uint32_t v;
        uint32_t hadamards;
    };
    std::vector<Node> nodes;
    std::vector<Link> links;
    size_t num_qubits = 0;
    size_t num_gates = 0;
    size_t cz_count = 0;

    Graph graph() const;
};

CircuitNetwork circuit_network(const CliffordCircuit &c);

}  // namespace ldlsim

#endif
