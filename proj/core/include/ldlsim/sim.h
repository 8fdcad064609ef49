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

#ifndef LDLSIM_SIM_H
#define LDLSIM_SIM_H

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ldlsim/gf2.h"
#include "ldlsim/graph.h"
#include "ldlsim/ldl.h"
#include "ldlsim/phased.h"
#include "ldlsim/ring.h"
#include "ldlsim/treedec.h"

namespace ldlsim {

/// Scalar rule for H^k on the leading block. PivotCount is w^(-#1x1 pivots); SumV is w^(-sum v).
enum class AlphaRule { PivotCount, SumV };
/// Linear Z correction on the leading block. Delta uses d(D); VXorDelta uses v xor d(D).
enum class URule { Delta, VXorDelta };

struct SimOptions {
    AlphaRule alpha_rule = AlphaRule::PivotCount;
    URule u_rule = URule::Delta;
    /// Without a tree decomposition, inputs larger than this get a min-degree decomposition.
    size_t dense_limit = 512;
};

struct SimContext {
    PhasedAdjacency source;
    size_t n = 0;
    size_t k = 0;
    ImplicitLdl f;
    /// Permuted position p holds input index perm[p].
    std::vector<uint32_t> perm;
    BitVector v;
    BitVector u;
    BitVector w;
    BitVector secondbit_diag;
    ExactAmplitude alpha;
    SimOptions options;
};

SimContext prepare(const PhasedAdjacency &a, const std::optional<TreeDecomposition> &td = std::nullopt,
                   const SimOptions &options = {});

/// <x| H^n |A> for each x, in exact form. Evaluated 64 queries per word.
std::vector<ExactAmplitude> strong_eval(const SimContext &ctx, const std::vector<BitVector> &xs);

/// As strong_eval, for queries that all agree with y on the index set S.
std::vector<ExactAmplitude> strong_eval_fixed(const SimContext &ctx, const std::vector<uint32_t> &S,
                                              const BitVector &y, const std::vector<BitVector> &xs);

struct SampleSpec {
    std::vector<uint32_t> S;
    /// Bits on S, aligned with S.
    BitVector y;
    uint64_t seed = 0;
    size_t count = 0;
};

enum class SampleStrategy { Auto, Direct, Explicit };

/// count uniform samples from {x in X_{S,y} : x xor w in span(w1(A))}, or nullopt when that set
/// is empty. Output is identical across strategies for the same seed.
std::optional<std::vector<BitVector>> weak_sample(const SimContext &ctx, const SampleSpec &spec,
                                                  SampleStrategy strategy = SampleStrategy::Auto);

/// offset + column span of gens.
struct AffineSpace {
    BitVector offset;
    BitMatrix gens;
};

/// The sampled set {x in X_{S,y} : x xor w in span(w1(A))} as an affine space, or nullopt if empty.
/// Columns of gens are independent.
std::optional<AffineSpace> support_space(const SimContext &ctx, const std::vector<uint32_t> &S, const BitVector &y);

/// d uniform bits for draw `index` of the stream `seed`.
BitVector seeded_bits(uint64_t seed, size_t index, size_t d);

/// Uniform samples from {o xor G s} restricted to x_S = y. Dense helper.
std::optional<std::vector<BitVector>> sample_affine(const BitVector &offset, const BitMatrix &gens,
                                                    const SampleSpec &spec);

enum class Basis : uint8_t { X, Y, Z };

/// <x| prod_v U_v |G> with U = H, H ZCheck or I for X, Y, Z.
std::vector<ExactAmplitude> graph_state_strong(const Graph &g, const std::vector<Basis> &basis,
                                               const std::vector<BitVector> &xs);
/// Samples of the measurement distribution of prod_v U_v |G>, conditioned on x_S = y.
std::optional<std::vector<BitVector>> graph_state_weak(const Graph &g, const std::vector<Basis> &basis,
                                                       const SampleSpec &spec);

/// Quadratic form of D on leading coordinates: sum of 1x1 entries plus 2 c_p c_q per 2x2 block, mod 4.
int d_form(const ImplicitLdl &f, const BitVector &c);
/// D c on the leading coordinates; (D c) . c' is the bilinear form of d_form.
BitVector d_apply(const ImplicitLdl &f, const BitVector &c);

enum class Rendering { Exact, Float };
/// "zero", "(s,m)", "[c0,c1,c2,c3]/2^e", or "re im" for Float.
std::string render(const ExactAmplitude &a, Rendering r);

}  // namespace ldlsim

#endif
