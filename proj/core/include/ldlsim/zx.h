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

#ifndef LDLSIM_ZX_H
#define LDLSIM_ZX_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ldlsim/circuit.h"
#include "ldlsim/gf2.h"
#include "ldlsim/phased.h"
#include "ldlsim/ring.h"
#include "ldlsim/sim.h"
#include "ldlsim/treedec.h"

namespace ldlsim {

enum class SpiderKind : uint8_t { Z, X };

struct Spider {
    SpiderKind kind = SpiderKind::Z;
    /// Phase as a multiple of pi/4.
    uint8_t phase8 = 0;
    bool operator==(const Spider &o) const = default;
};

struct ZxEdge {
    uint32_t u;
    uint32_t v;
    bool hadamard;
    bool operator==(const ZxEdge &o) const = default;
};

/// A boundary leg. Open legs are the tensor's indices, in list order.
struct OpenEdge {
    uint32_t spider;
    bool hadamard;
    bool operator==(const OpenEdge &o) const = default;
};

/// ZX-diagram whose tensor is scalar times the contraction of its spiders. Hadamard edges carry
/// the normalized Hadamard matrix.
struct ZxDiagram {
    std::vector<Spider> spiders;
    std::vector<ZxEdge> edges;
    std::vector<OpenEdge> open;
    ExactAmplitude scalar = ExactAmplitude::from_int(1);

    uint32_t add_spider(SpiderKind kind, int phase8 = 0);
    /// Adds a wire carrying `hadamards` Hadamard boxes; only the parity is kept.
    void add_edge(uint32_t u, uint32_t v, uint32_t hadamards = 1);
    void add_open(uint32_t spider, uint32_t hadamards = 0);
    /// Only Z spiders, internal edges all Hadamard, no loops or parallel edges, at most one
    /// plain open leg per spider.
    bool is_graph_like() const;
    bool operator==(const ZxDiagram &o) const = default;
};

enum class ZxStep {
    /// X spiders become Z spiders with every incident leg's Hadamard flag toggled.
    ColorChange,
    /// Z spiders joined by a plain edge merge; phases add.
    Fuse,
    /// Plain loops vanish; Hadamard loops add pi and a factor 2^(-1/2).
    SelfLoops,
    /// Pairs of parallel Hadamard edges cancel with a factor 1/2.
    ParallelEdges,
    /// Hadamard open legs and second open legs on a spider move onto fresh identity spiders.
    OpenEdges,
    /// Spiders renumbered by first original index, edges sorted.
    Canonical,
};

/// One rewrite pass. `map`, when given, receives old spider -> new spider.
ZxDiagram apply_step(const ZxDiagram &d, ZxStep step, std::vector<uint32_t> *map = nullptr);
/// All passes in order. The tensor, scalar included, is unchanged.
ZxDiagram to_graph_like(const ZxDiagram &d, std::vector<uint32_t> *map = nullptr);

/// U|0^n> as a diagram: one open leg per qubit, qubit q is open leg q.
ZxDiagram circuit_to_zx(const CliffordCircuit &c);

/// Phased graph instance for <x|U|0^n>: the amplitude is scalar * <query(x)|H^N|A>.
/// Vertices in `fixed` take the bits `y`; output qubit q sets vertex output_map[q].
struct PgsInstance {
    PhasedAdjacency a;
    std::vector<uint32_t> fixed;
    BitVector y;
    std::vector<uint32_t> output_map;
    ExactAmplitude scalar;
    std::optional<TreeDecomposition> td;

    BitVector query(const BitVector &x) const;
};

/// `td`, if given, decomposes circuit_network(c).graph(); otherwise circuit_slices(c) is used.
/// Either way it is carried over to A without growing its width.
PgsInstance reduce_to_pgs(const CliffordCircuit &c, const std::optional<TreeDecomposition> &td = std::nullopt);

/// <x|U|0^n> for a Clifford circuit via reduce_to_pgs and the fixed-bits evaluator.
std::vector<ExactAmplitude> circuit_strong(const CliffordCircuit &c, const std::vector<BitVector> &xs,
                                           const SimOptions &options = {});

/// Seeded Born-rule samples of U|0^n> for a Clifford circuit. Preparation runs once. Explicit
/// draws from an independent basis of the outcome space, so a draw costs O(n * dim / 64)
/// regardless of circuit length; Direct projects weak_sample over the whole instance. Both are
/// uniform on the support; their streams for one seed need not agree.
class CircuitSampler {
   public:
    explicit CircuitSampler(const CliffordCircuit &c, SampleStrategy strategy = SampleStrategy::Explicit,
                            const SimOptions &options = {});
    std::vector<BitVector> sample(size_t count, uint64_t seed) const;
    /// Dimension of the outcome space.
    size_t dimension() const {
        return basis_.cols();
    }
    const SimContext &context() const {
        return ctx_;
    }

   private:
    PgsInstance inst_;
    SimContext ctx_;
    SampleStrategy strategy_;
    BitVector offset_;
    BitMatrix basis_;
};

/// Clifford+T split into a full-rank Clifford part kappa (vertices [0, kappa_size)) and a
/// block holding two spiders per T site plus two per dummy flip. The amplitude is
///     scalar * sum over b of prod_i t_coefficient(b_i) * <query(x)|H^N|A_b>,
/// with A_b equal to `a` except diag(t_sites[i]) = 3 b_i.
struct TGadgetization {
    PhasedAdjacency a;
    size_t kappa_size = 0;
    std::vector<uint32_t> t_sites;
    /// kappa vertices whose diagonal was shifted by one to reach full rank.
    std::vector<uint32_t> flipped;
    std::vector<uint32_t> output_map;
    ExactAmplitude scalar;
    /// Decomposition of kappa.
    std::optional<TreeDecomposition> td;

    BitVector query(const BitVector &x) const;
};

TGadgetization gadgetize_t(const CliffordCircuit &c);

/// diag(1, w) = x I + y S: t_coefficient(false) = x, t_coefficient(true) = y.
ExactAmplitude t_coefficient(bool s);

struct TCountExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class TEvaluation {
    /// Factor kappa once; each term reduces to a phased graph on the T block.
    Schur,
    /// Simulate every term from scratch.
    Naive,
};

struct CliffordTOptions {
    size_t t_cap = 20;
    TEvaluation evaluation = TEvaluation::Schur;
    SimOptions sim;
};

std::vector<ExactAmplitude> clifford_t_strong(const CliffordCircuit &c, const std::vector<BitVector> &xs,
                                              const CliffordTOptions &options = {});

}  // namespace ldlsim

#endif
