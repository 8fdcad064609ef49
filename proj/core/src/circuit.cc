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

#include "ldlsim/circuit.h"

#include <algorithm>
#include <sstream>

namespace ldlsim {

size_t CliffordCircuit::t_count() const {
    return std::count_if(gates.begin(), gates.end(), [](const Gate &g) {
        return g.kind == GateKind::T || g.kind == GateKind::TDG;
    });
}

std::string_view gate_name(GateKind k) {
    switch (k) {
        case GateKind::H:
            return "H";
        case GateKind::S:
            return "S";
        case GateKind::SDG:
            return "SDG";
        case GateKind::Z:
            return "Z";
        case GateKind::X:
            return "X";
        case GateKind::CZ:
            return "CZ";
        case GateKind::T:
            return "T";
        case GateKind::TDG:
            return "TDG";
    }
    return "?";
}

std::string CliffordCircuit::str() const {
    std::ostringstream out;
    for (const auto &g : gates) {
        out << gate_name(g.kind) << " " << g.a;
        if (g.kind == GateKind::CZ) {
            out << " " << g.b;
        }
        out << "\n";
    }
    return out.str();
}

CliffordCircuit parse_circuit(std::string_view text, size_t min_qubits) {
    CliffordCircuit c;
    c.num_qubits = min_qubits;
    std::istringstream in{std::string(text)};
    std::string line;
    size_t lineno = 0;
    auto read_index = [&](std::istringstream &ls) -> uint32_t {
        std::string tok;
        if (!(ls >> tok)) {
            throw ParseError(lineno, "missing qubit index");
        }
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit) || tok.size() > 9) {
            throw ParseError(lineno, "bad qubit index '" + tok + "'");
        }
        return static_cast<uint32_t>(std::stoul(tok));
    };
    while (std::getline(in, line)) {
        lineno++;
        if (auto p = line.find('#'); p != std::string::npos) {
            line.resize(p);
        }
        std::istringstream ls(line);
        std::string name;
        if (!(ls >> name)) {
            continue;
        }
        std::transform(name.begin(), name.end(), name.begin(), ::toupper);
        std::vector<Gate> add;
        if (name == "CZ" || name == "CNOT" || name == "CX") {
            uint32_t a = read_index(ls);
            uint32_t b = read_index(ls);
            if (a == b) {
                throw ParseError(lineno, "duplicate operands for " + name);
            }
            if (name == "CZ") {
                add.push_back({GateKind::CZ, a, b});
            } else {
                add.push_back({GateKind::H, b});
                add.push_back({GateKind::CZ, a, b});
                add.push_back({GateKind::H, b});
            }
        } else {
            GateKind k;
            if (name == "H") {
                k = GateKind::H;
            } else if (name == "S") {
                k = GateKind::S;
            } else if (name == "SDG" || name == "S_DAG") {
                k = GateKind::SDG;
            } else if (name == "Z") {
                k = GateKind::Z;
            } else if (name == "X") {
                k = GateKind::X;
            } else if (name == "T") {
                k = GateKind::T;
            } else if (name == "TDG" || name == "T_DAG") {
                k = GateKind::TDG;
            } else {
                throw ParseError(lineno, "unknown gate '" + name + "'");
            }
            add.push_back({k, read_index(ls)});
        }
        std::string extra;
        if (ls >> extra) {
            throw ParseError(lineno, "trailing token '" + extra + "'");
        }
        for (const Gate &g : add) {
            c.num_qubits = std::max<size_t>(c.num_qubits, std::max(g.a, g.b) + size_t{1});
            c.gates.push_back(g);
        }
    }
    return c;
}

Graph CircuitNetwork::graph() const {
    Graph g(nodes.size());
    for (const auto &l : links) {
        if (l.u != l.v) {
            g.add_edge(l.u, l.v);
        }
    }
    return g;
}

CircuitNetwork circuit_network(const CliffordCircuit &c) {
    CircuitNetwork net;
    const size_t n = c.num_qubits;
    net.num_qubits = n;
    net.num_gates = c.gates.size();
    std::vector<uint32_t> last(n);
    std::vector<uint32_t> pending_h(n, 0);
    auto add_node = [&](CircuitNetwork::Kind kind, uint8_t phase, uint32_t q, uint32_t t) {
        net.nodes.push_back({kind, phase, q, t, t, -1});
        return static_cast<uint32_t>(net.nodes.size() - 1);
    };
    auto attach = [&](uint32_t q, uint32_t node, uint32_t extra_h) {
        uint32_t prev = last[q];
        net.nodes[prev].end = net.nodes[node].begin;
        net.links.push_back({prev, node, pending_h[q] + extra_h});
        pending_h[q] = 0;
        last[q] = node;
    };
    for (uint32_t q = 0; q < n; q++) {
        last[q] = add_node(CircuitNetwork::Kind::X, 0, q, 0);
    }
    uint32_t t = 0;
    for (const Gate &g : c.gates) {
        t++;
        uint8_t phase = 0;
        switch (g.kind) {
            case GateKind::H:
                pending_h[g.a]++;
                continue;
            case GateKind::CZ: {
                uint32_t za = add_node(CircuitNetwork::Kind::Z, 0, g.a, t);
                attach(g.a, za, 0);
                uint32_t zb = add_node(CircuitNetwork::Kind::Z, 0, g.b, t);
                attach(g.b, zb, 0);
                net.links.push_back({za, zb, 1});
                net.cz_count++;
                continue;
            }
            case GateKind::X: {
                uint32_t x = add_node(CircuitNetwork::Kind::X, 4, g.a, t);
                attach(g.a, x, 0);
                continue;
            }
            case GateKind::S:
                phase = 2;
                break;
            case GateKind::SDG:
                phase = 6;
                break;
            case GateKind::Z:
                phase = 4;
                break;
            case GateKind::T:
                phase = 1;
                break;
            case GateKind::TDG:
                phase = 7;
                break;
        }
        uint32_t z = add_node(CircuitNetwork::Kind::Z, phase, g.a, t);
        attach(g.a, z, 0);
    }
    for (uint32_t q = 0; q < n; q++) {
        uint32_t o = add_node(CircuitNetwork::Kind::Z, 0, q, t + 1);
        net.nodes[o].output = static_cast<int32_t>(q);
        attach(q, o, 1);
    }
    return net;
}

}  // namespace ldlsim
