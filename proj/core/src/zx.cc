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

#include "ldlsim/zx.h"

#include <algorithm>
#include <map>
#include <numeric>

#include "ldlsim/sim.h"

namespace ldlsim {

uint32_t ZxDiagram::add_spider(SpiderKind kind, int phase8) {
    spiders.push_back({kind, static_cast<uint8_t>(((phase8 % 8) + 8) % 8)});
    return static_cast<uint32_t>(spiders.size() - 1);
}

void ZxDiagram::add_edge(uint32_t u, uint32_t v, uint32_t hadamards) {
    if (u >= spiders.size() || v >= spiders.size()) {
        throw std::out_of_range("zx edge endpoint out of range");
    }
    edges.push_back({u, v, (hadamards & 1) != 0});
}

void ZxDiagram::add_open(uint32_t spider, uint32_t hadamards) {
    if (spider >= spiders.size()) {
        throw std::out_of_range("zx open leg on a missing spider");
    }
    open.push_back({spider, (hadamards & 1) != 0});
}

bool ZxDiagram::is_graph_like() const {
    for (const auto &s : spiders) {
        if (s.kind != SpiderKind::Z) {
            return false;
        }
    }
    std::vector<std::pair<uint32_t, uint32_t>> seen;
    for (const auto &e : edges) {
        if (!e.hadamard || e.u == e.v) {
            return false;
        }
        seen.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
        return false;
    }
    std::vector<uint8_t> legs(spiders.size(), 0);
    for (const auto &o : open) {
        if (o.hadamard || legs[o.spider]++) {
            return false;
        }
    }
    return true;
}

namespace {

struct UnionFind {
    std::vector<uint32_t> parent;
    explicit UnionFind(size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    uint32_t find(uint32_t x) {
        while (parent[x] != x) {
            x = parent[x] = parent[parent[x]];
        }
        return x;
    }
    bool unite(uint32_t a, uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

ZxDiagram color_change(const ZxDiagram &d) {
    ZxDiagram out = d;
    auto is_x = [&](uint32_t s) {
        return d.spiders[s].kind == SpiderKind::X;
    };
    for (auto &e : out.edges) {
        e.hadamard ^= is_x(e.u) ^ is_x(e.v);
    }
    for (auto &o : out.open) {
        o.hadamard ^= is_x(o.spider);
    }
    for (auto &s : out.spiders) {
        s.kind = SpiderKind::Z;
    }
    return out;
}

ZxDiagram fuse(const ZxDiagram &d, std::vector<uint32_t> &map) {
    const size_t n = d.spiders.size();
    UnionFind uf(n);
    std::vector<bool> consumed(d.edges.size(), false);
    for (size_t i = 0; i < d.edges.size(); i++) {
        const auto &e = d.edges[i];
        if (!e.hadamard && e.u != e.v && d.spiders[e.u].kind == d.spiders[e.v].kind) {
            consumed[i] = uf.unite(e.u, e.v);
        }
    }
    ZxDiagram out;
    out.scalar = d.scalar;
    std::vector<uint32_t> root_id(n, UINT32_MAX);
    map.assign(n, 0);
    for (uint32_t s = 0; s < n; s++) {
        uint32_t r = uf.find(s);
        if (root_id[r] == UINT32_MAX) {
            root_id[r] = out.add_spider(d.spiders[r].kind, 0);
        }
        map[s] = root_id[r];
        auto &sp = out.spiders[map[s]];
        sp.phase8 = static_cast<uint8_t>((sp.phase8 + d.spiders[s].phase8) % 8);
    }
    for (size_t i = 0; i < d.edges.size(); i++) {
        if (!consumed[i]) {
            out.edges.push_back({map[d.edges[i].u], map[d.edges[i].v], d.edges[i].hadamard});
        }
    }
    for (const auto &o : d.open) {
        out.open.push_back({map[o.spider], o.hadamard});
    }
    return out;
}

ZxDiagram self_loops(const ZxDiagram &d) {
    ZxDiagram out = d;
    out.edges.clear();
    for (const auto &e : d.edges) {
        if (e.u != e.v) {
            out.edges.push_back(e);
        } else if (e.hadamard) {
            auto &sp = out.spiders[e.u];
            sp.phase8 = static_cast<uint8_t>((sp.phase8 + 4) % 8);
            out.scalar *= ExactAmplitude::sqrt2_pow(-1);
        }
    }
    return out;
}

ZxDiagram parallel_edges(const ZxDiagram &d) {
    ZxDiagram out = d;
    out.edges.clear();
    std::map<std::pair<uint32_t, uint32_t>, size_t> pending;
    std::vector<bool> drop(d.edges.size(), false);
    for (size_t i = 0; i < d.edges.size(); i++) {
        const auto &e = d.edges[i];
        if (!e.hadamard || e.u == e.v || d.spiders[e.u].kind != d.spiders[e.v].kind) {
            continue;
        }
        auto key = std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v));
        auto it = pending.find(key);
        if (it == pending.end()) {
            pending.emplace(key, i);
        } else {
            drop[it->second] = drop[i] = true;
            out.scalar *= ExactAmplitude::sqrt2_pow(-2);
            pending.erase(it);
        }
    }
    for (size_t i = 0; i < d.edges.size(); i++) {
        if (!drop[i]) {
            out.edges.push_back(d.edges[i]);
        }
    }
    return out;
}

ZxDiagram open_edges(const ZxDiagram &d) {
    ZxDiagram out = d;
    std::vector<bool> has_open(d.spiders.size(), false);
    for (auto &o : out.open) {
        if (o.hadamard) {
            uint32_t w = out.add_spider(SpiderKind::Z, 0);
            out.add_edge(o.spider, w, 1);
            o = {w, false};
        } else if (has_open[o.spider]) {
            uint32_t a = out.add_spider(SpiderKind::Z, 0);
            uint32_t b = out.add_spider(SpiderKind::Z, 0);
            out.add_edge(o.spider, a, 1);
            out.add_edge(a, b, 1);
            o = {b, false};
        } else {
            has_open[o.spider] = true;
        }
    }
    return out;
}

ZxDiagram canonical(const ZxDiagram &d) {
    ZxDiagram out = d;
    for (auto &e : out.edges) {
        if (e.u > e.v) {
            std::swap(e.u, e.v);
        }
    }
    std::sort(out.edges.begin(), out.edges.end(), [](const ZxEdge &a, const ZxEdge &b) {
        return std::tie(a.u, a.v, a.hadamard) < std::tie(b.u, b.v, b.hadamard);
    });
    return out;
}

}  // namespace

ZxDiagram apply_step(const ZxDiagram &d, ZxStep step, std::vector<uint32_t> *map) {
    std::vector<uint32_t> local(d.spiders.size());
    std::iota(local.begin(), local.end(), 0);
    ZxDiagram out;
    switch (step) {
        case ZxStep::ColorChange:
            out = color_change(d);
            break;
        case ZxStep::Fuse:
            out = fuse(d, local);
            break;
        case ZxStep::SelfLoops:
            out = self_loops(d);
            break;
        case ZxStep::ParallelEdges:
            out = parallel_edges(d);
            break;
        case ZxStep::OpenEdges:
            out = open_edges(d);
            break;
        case ZxStep::Canonical:
            out = canonical(d);
            break;
    }
    if (map) {
        *map = std::move(local);
    }
    return out;
}

ZxDiagram to_graph_like(const ZxDiagram &d, std::vector<uint32_t> *map) {
    std::vector<uint32_t> total(d.spiders.size());
    std::iota(total.begin(), total.end(), 0);
    ZxDiagram cur = d;
    for (ZxStep step : {ZxStep::ColorChange, ZxStep::Fuse, ZxStep::SelfLoops, ZxStep::ParallelEdges,
                        ZxStep::OpenEdges, ZxStep::Canonical}) {
        std::vector<uint32_t> m;
        cur = apply_step(cur, step, &m);
        for (auto &t : total) {
            t = m[t];
        }
    }
    if (map) {
        *map = std::move(total);
    }
    return cur;
}

namespace {

/// The circuit network as a closed diagram. Output node q (index out_base + q) stands for the
/// cap <x_q|, realized as a Z spider of phase x_q pi behind a Hadamard; its x-dependence is kept
/// outside the diagram.
ZxDiagram network_diagram(const CircuitNetwork &net, bool open_outputs, size_t &out_base) {
    const size_t n = net.num_qubits;
    out_base = net.nodes.size() - n;
    ZxDiagram d;
    for (size_t i = 0; i < (open_outputs ? out_base : net.nodes.size()); i++) {
        const auto &node = net.nodes[i];
        d.add_spider(node.kind == CircuitNetwork::Kind::Z ? SpiderKind::Z : SpiderKind::X, node.phase8);
    }
    std::vector<OpenEdge> legs(n, {0, false});
    for (const auto &l : net.links) {
        if (open_outputs && l.v >= out_base) {
            legs[l.v - out_base] = {l.u, ((l.hadamards - 1) & 1) != 0};
        } else {
            d.add_edge(l.u, l.v, l.hadamards);
        }
    }
    if (open_outputs) {
        d.open = legs;
    }
    // Inputs cap at X(0) = 2^(1/2)|0>; CZ templates carry 2^(-1/2) CZ; output caps carry 2^(1/2) <x|.
    int s2 = static_cast<int>(net.cz_count) - static_cast<int>(n) - (open_outputs ? 0 : static_cast<int>(n));
    d.scalar = ExactAmplitude::sqrt2_pow(s2);
    return d;
}

struct ClosedGraph {
    ZxDiagram g;
    std::vector<uint32_t> map;
    std::vector<uint32_t> outputs;
};

ClosedGraph closed_graph(const CliffordCircuit &c, const CircuitNetwork &net) {
    ClosedGraph cg;
    size_t out_base;
    ZxDiagram d = network_diagram(net, false, out_base);
    cg.g = to_graph_like(d, &cg.map);
    for (size_t q = 0; q < c.num_qubits; q++) {
        cg.outputs.push_back(cg.map[out_base + q]);
    }
    return cg;
}

TreeDecomposition transfer_td(const TreeDecomposition &td, const std::vector<uint32_t> &map) {
    TreeDecomposition out;
    out.edges = td.edges;
    out.root = td.root;
    for (const auto &bag : td.bags) {
        std::vector<uint32_t> b;
        for (uint32_t v : bag) {
            if (v >= map.size()) {
                throw TreeDecompositionError(TreeDecompositionError::Kind::BadVertex,
                                             "decomposition names a vertex outside the circuit network");
            }
            b.push_back(map[v]);
        }
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        out.bags.push_back(std::move(b));
    }
    return out;
}

int diag_of_phase(uint8_t phase8) {
    return ((8 - phase8) / 2) % 4;
}

BitVector make_query(size_t n_vertices, const std::vector<uint32_t> &fixed, const BitVector &y,
                     const std::vector<uint32_t> &outputs, const BitVector &x) {
    if (x.size() != outputs.size()) {
        throw ShapeError("query length " + std::to_string(x.size()) + " != qubit count " +
                         std::to_string(outputs.size()));
    }
    BitVector q(n_vertices);
    for (size_t i = 0; i < fixed.size(); i++) {
        q.set(fixed[i], y.get(i));
    }
    for (size_t i = 0; i < outputs.size(); i++) {
        q.set(outputs[i], x.get(i));
    }
    return q;
}

}  // namespace

ZxDiagram circuit_to_zx(const CliffordCircuit &c) {
    size_t out_base;
    return network_diagram(circuit_network(c), true, out_base);
}

BitVector PgsInstance::query(const BitVector &x) const {
    return make_query(a.size(), fixed, y, output_map, x);
}

BitVector TGadgetization::query(const BitVector &x) const {
    return make_query(a.size(), {}, BitVector(), output_map, x);
}

PgsInstance reduce_to_pgs(const CliffordCircuit &c, const std::optional<TreeDecomposition> &td) {
    if (!c.is_clifford()) {
        throw UnsupportedGate("reduce_to_pgs: T/TDG present; use clifford_t_strong");
    }
    CircuitNetwork net = circuit_network(c);
    ClosedGraph cg = closed_graph(c, net);
    const size_t n = cg.g.spiders.size();
    PgsInstance inst;
    inst.a = PhasedAdjacency(n);
    for (uint32_t v = 0; v < n; v++) {
        inst.a.set_diag(v, diag_of_phase(cg.g.spiders[v].phase8));
    }
    for (const auto &e : cg.g.edges) {
        inst.a.set_edge(e.u, e.v, true);
    }
    inst.output_map = cg.outputs;
    std::vector<bool> is_out(n, false);
    for (uint32_t o : cg.outputs) {
        is_out[o] = true;
    }
    for (uint32_t v = 0; v < n; v++) {
        if (!is_out[v]) {
            inst.fixed.push_back(v);
        }
    }
    inst.y = BitVector(inst.fixed.size());
    inst.scalar = cg.g.scalar * ExactAmplitude::sqrt2_pow(2 * static_cast<int>(n) - static_cast<int>(cg.g.edges.size()));
    inst.td = transfer_td(td ? *td : circuit_slices(c), cg.map);
    return inst;
}

std::vector<ExactAmplitude> circuit_strong(const CliffordCircuit &c, const std::vector<BitVector> &xs,
                                           const SimOptions &options) {
    PgsInstance inst = reduce_to_pgs(c);
    SimContext ctx = prepare(inst.a, inst.td, options);
    std::vector<BitVector> qs;
    qs.reserve(xs.size());
    for (const auto &x : xs) {
        qs.push_back(inst.query(x));
    }
    std::vector<ExactAmplitude> out = strong_eval_fixed(ctx, inst.fixed, inst.y, qs);
    for (auto &a : out) {
        a = inst.scalar * a;
    }
    return out;
}

CircuitSampler::CircuitSampler(const CliffordCircuit &c, SampleStrategy strategy, const SimOptions &options)
    : inst_(reduce_to_pgs(c)), ctx_(prepare(inst_.a, inst_.td, options)), strategy_(strategy) {
    if (strategy_ == SampleStrategy::Auto) {
        strategy_ = SampleStrategy::Explicit;
    }
    const size_t n = inst_.output_map.size();
    std::optional<AffineSpace> space = support_space(ctx_, inst_.fixed, inst_.y);
    if (!space) {
        throw ContractViolation("CircuitSampler: circuit reduced to an empty support");
    }
    const size_t d = space->gens.cols();
    // Output rows of the generators, transposed so that row reduction yields a column basis.
    BitMatrix zt(d, n);
    offset_ = BitVector(n);
    for (size_t q = 0; q < n; q++) {
        const uint32_t v = inst_.output_map[q];
        offset_.set(q, space->offset.get(v));
        for (size_t i = 0; i < d; i++) {
            zt.set(i, q, space->gens.get(v, i));
        }
    }
    const size_t r = row_reduce(zt).size();
    basis_ = BitMatrix(n, r);
    for (size_t i = 0; i < r; i++) {
        for (size_t q = 0; q < n; q++) {
            basis_.set(q, i, zt.get(i, q));
        }
    }
}

std::vector<BitVector> CircuitSampler::sample(size_t count, uint64_t seed) const {
    const size_t n = inst_.output_map.size();
    std::vector<BitVector> out;
    out.reserve(count);
    if (strategy_ == SampleStrategy::Direct) {
        SampleSpec spec{inst_.fixed, inst_.y, seed, count};
        std::vector<BitVector> full_samples = *weak_sample(ctx_, spec, SampleStrategy::Direct);
        for (const BitVector &full : full_samples) {
            BitVector x(n);
            for (size_t q = 0; q < n; q++) {
                x.set(q, full.get(inst_.output_map[q]));
            }
            out.push_back(std::move(x));
        }
        return out;
    }
    for (size_t j = 0; j < count; j++) {
        out.push_back(offset_ ^ mul(basis_, seeded_bits(seed, j, basis_.cols())));
    }
    return out;
}

ExactAmplitude t_coefficient(bool s) {
    return s ? ExactAmplitude({1, -1, 1, -1}, 1) : ExactAmplitude({1, 1, -1, 1}, 1);
}

TGadgetization gadgetize_t(const CliffordCircuit &c) {
    CircuitNetwork net = circuit_network(c);
    ClosedGraph cg = closed_graph(c, net);
    const size_t k = cg.g.spiders.size();
    PhasedAdjacency kappa(k);
    std::vector<uint32_t> sites;
    for (uint32_t v = 0; v < k; v++) {
        uint8_t p = cg.g.spiders[v].phase8;
        if (p & 1) {
            sites.push_back(v);
            p = static_cast<uint8_t>(p - 1);
        }
        kappa.set_diag(v, diag_of_phase(p));
    }
    for (const auto &e : cg.g.edges) {
        kappa.set_edge(e.u, e.v, true);
    }
    TreeDecomposition td = transfer_td(circuit_slices(c), cg.map);
    // Shifting the diagonal of every peeled vertex by one makes w1(kappa) invertible; each shift
    // is paid back by a pendant chain v - w - u(pi/2) contributing i^(y_v).
    SimContext probe = prepare(kappa, k > SimOptions{}.dense_limit ? std::optional(td) : std::nullopt);
    std::vector<uint32_t> flipped;
    for (size_t p = probe.k; p < k; p++) {
        flipped.push_back(probe.perm[p]);
    }
    std::sort(flipped.begin(), flipped.end());
    for (uint32_t v : flipped) {
        kappa.add_diag(v, 1);
    }
    const size_t total = k + 2 * sites.size() + 2 * flipped.size();
    TGadgetization tg;
    tg.a = PhasedAdjacency(total);
    for (uint32_t v = 0; v < k; v++) {
        tg.a.set_diag(v, kappa.diag(v));
        for (uint32_t u = v + 1; u < k; u++) {
            if (kappa.edge(v, u)) {
                tg.a.set_edge(v, u, true);
            }
        }
    }
    uint32_t next = static_cast<uint32_t>(k);
    for (uint32_t v : sites) {
        uint32_t w = next++, u = next++;
        tg.a.set_edge(v, w, true);
        tg.a.set_edge(w, u, true);
        tg.t_sites.push_back(u);
    }
    for (uint32_t v : flipped) {
        uint32_t w = next++, u = next++;
        tg.a.set_edge(v, w, true);
        tg.a.set_edge(w, u, true);
        tg.a.set_diag(u, 3);
    }
    tg.kappa_size = k;
    tg.flipped = flipped;
    tg.output_map = cg.outputs;
    const int edges = static_cast<int>(cg.g.edges.size() + 2 * sites.size() + 2 * flipped.size());
    tg.scalar = cg.g.scalar * ExactAmplitude::sqrt2_pow(2 * static_cast<int>(total) - edges);
    tg.td = td;
    return tg;
}

namespace {

ExactAmplitude term_coefficient(uint64_t b, size_t t) {
    ExactAmplitude c = ExactAmplitude::from_int(1);
    for (size_t i = 0; i < t; i++) {
        c *= t_coefficient((b >> i) & 1);
    }
    return c;
}

std::vector<ExactAmplitude> t_naive(const TGadgetization &tg, const std::vector<BitVector> &qs,
                                    const SimOptions &options) {
    const size_t t = tg.t_sites.size();
    std::vector<ExactAmplitude> out(qs.size());
    PhasedAdjacency a = tg.a;
    for (uint64_t i = 0; i < (uint64_t{1} << t); i++) {
        const uint64_t b = i ^ (i >> 1);
        for (size_t s = 0; s < t; s++) {
            a.set_diag(tg.t_sites[s], ((b >> s) & 1) ? 3 : 0);
        }
        std::vector<ExactAmplitude> amps = strong_eval(prepare(a, std::nullopt, options), qs);
        ExactAmplitude coef = term_coefficient(b, t);
        for (size_t j = 0; j < qs.size(); j++) {
            out[j] += coef * amps[j];
        }
    }
    return out;
}

std::vector<ExactAmplitude> t_schur(const TGadgetization &tg, const std::vector<BitVector> &qs,
                                    const SimOptions &options) {
    const size_t k = tg.kappa_size, total = tg.a.size(), m = total - k, t = tg.t_sites.size();
    std::vector<uint32_t> kidx(k), pidx(m);
    std::iota(kidx.begin(), kidx.end(), 0);
    std::iota(pidx.begin(), pidx.end(), static_cast<uint32_t>(k));
    PhasedAdjacency kappa = tg.a.principal(kidx);
    SimContext ctx = prepare(kappa, k > options.dense_limit ? tg.td : std::nullopt, options);
    if (ctx.k != k) {
        throw ContractViolation("clifford_t_strong: kappa block is not full rank");
    }
    const ImplicitLdl &f = ctx.f;
    // Columns [0, m): kappa-neighbours of each block vertex. Columns m + j: query j.
    BitMatrix rhs(k, m + qs.size());
    for (size_t i = 0; i < m; i++) {
        for (uint32_t v = 0; v < k; v++) {
            if (tg.a.edge(v, pidx[i])) {
                rhs.set(f.pos[v], i, true);
            }
        }
    }
    for (size_t j = 0; j < qs.size(); j++) {
        for (size_t p = 0; p < k; p++) {
            rhs.set(p, m + j, qs[j].get(ctx.perm[p]) ^ ctx.w.get(p));
        }
        for (size_t i = 0; i < m; i++) {
            if (qs[j].get(pidx[i])) {
                throw ContractViolation("clifford_t_strong: query sets a T-block vertex");
            }
        }
    }
    BitMatrix sol = implicit_apply(f, LdlOp::LInv, rhs);
    std::vector<BitVector> g(m, BitVector(k)), dg(m);
    std::vector<int> qg(m);
    for (size_t i = 0; i < m; i++) {
        for (size_t p = 0; p < k; p++) {
            g[i].set(p, sol.get(p, i));
        }
        dg[i] = d_apply(f, g[i]);
        qg[i] = d_form(f, g[i]);
    }
    PhasedAdjacency base = tg.a.principal(pidx);
    for (size_t i = 0; i < m; i++) {
        for (size_t j = i + 1; j < m; j++) {
            if (g[i].dot(dg[j])) {
                base.toggle_edge(i, j);
            }
        }
    }
    std::vector<uint32_t> local_sites;
    for (uint32_t s : tg.t_sites) {
        local_sites.push_back(s - static_cast<uint32_t>(k));
    }
    const ExactAmplitude front = tg.scalar * ctx.alpha * ExactAmplitude::sqrt2_pow(-static_cast<int>(k));
    std::vector<ExactAmplitude> out(qs.size());
    for (size_t j = 0; j < qs.size(); j++) {
        BitVector c0(k);
        for (size_t p = 0; p < k; p++) {
            c0.set(p, sol.get(p, m + j));
        }
        const int e0 = d_form(f, c0);
        BitVector dc0 = d_apply(f, c0);
        PhasedAdjacency block = base;
        std::vector<int> lin(m);
        for (size_t i = 0; i < m; i++) {
            lin[i] = (qg[i] + 2 * dc0.dot(g[i])) & 3;
            block.set_diag(i, (base.diag(i) - lin[i] + 4) & 3);
        }
        ExactAmplitude sum;
        const BitVector zero(m);
        for (uint64_t i = 0; i < (uint64_t{1} << t); i++) {
            const uint64_t b = i ^ (i >> 1);
            for (size_t s = 0; s < t; s++) {
                uint32_t v = local_sites[s];
                block.set_diag(v, ((((b >> s) & 1) ? 3 : 0) - lin[v] + 4) & 3);
            }
            sum += term_coefficient(b, t) * strong_eval(prepare(block, std::nullopt, options), {zero})[0];
        }
        out[j] = front * ExactAmplitude::omega_pow(2 * e0) * sum;
    }
    return out;
}

}  // namespace

std::vector<ExactAmplitude> clifford_t_strong(const CliffordCircuit &c, const std::vector<BitVector> &xs,
                                              const CliffordTOptions &options) {
    const size_t t = c.t_count();
    if (t > options.t_cap) {
        throw TCountExceeded("clifford_t_strong: " + std::to_string(t) + " T gates exceed the cap of " +
                             std::to_string(options.t_cap));
    }
    TGadgetization tg = gadgetize_t(c);
    std::vector<BitVector> qs;
    for (const auto &x : xs) {
        qs.push_back(tg.query(x));
    }
    if (options.evaluation == TEvaluation::Naive) {
        std::vector<ExactAmplitude> out = t_naive(tg, qs, options.sim);
        for (auto &a : out) {
            a = tg.scalar * a;
        }
        return out;
    }
    return t_schur(tg, qs, options.sim);
}

}  // namespace ldlsim
