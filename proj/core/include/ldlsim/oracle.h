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

#ifndef LDLSIM_ORACLE_H
#define LDLSIM_ORACLE_H

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "ldlsim/circuit.h"
#include "ldlsim/gf2.h"
#include "ldlsim/graph.h"
#include "ldlsim/phased.h"
#include "ldlsim/ring.h"
#include "ldlsim/zx.h"

namespace ldlsim {

using cplx = std::complex<double>;
using Mat2 = std::array<cplx, 4>;

constexpr size_t MAX_DENSE_QUBITS = 14;

Mat2 gate_matrix(GateKind k);

/// Dense statevector. Qubit q is bit q of the amplitude index.
struct DenseState {
    size_t n = 0;
    std::vector<cplx> amps;

    static DenseState zero(size_t n);
    static DenseState plus(size_t n);
    static DenseState graph_state(const Graph &g);
    void apply(const Mat2 &m, uint32_t q);
    void apply_cz(uint32_t a, uint32_t b);
    void apply(const Gate &g);
    cplx amplitude(const BitVector &x) const;
    double norm2() const;
    /// max |a_i - phase * b_i| with the phase fixed by the first entry of largest magnitude in `a`.
    double distance_up_to_phase(const DenseState &o) const;
    double distance(const DenseState &o) const;
};

/// Runs `c` on |0^n>. Refuses n > MAX_DENSE_QUBITS.
DenseState statevector(const CliffordCircuit &c);

/// <x| H^n |A> by direct summation over all 2^n basis states.
ExactAmplitude pgs_brute_amplitude(const PhasedAdjacency &a, const BitVector &x);
/// Every <x| H^n |A>, indexed by x with bit i = x_i, via four Walsh-Hadamard transforms.
std::vector<ExactAmplitude> pgs_brute_all(const PhasedAdjacency &a);

/// Stabilizer rows: row j is (-1)^r_j times the tensor product of sigma(z_jk, x_jk), where
/// sigma(0,0) = I, sigma(0,1) = X, sigma(1,1) = Y, sigma(1,0) = Z.
struct Tableau {
    size_t n = 0;
    BitMatrix z;
    BitMatrix x;
    BitVector r;

    static Tableau zero_state(size_t n);
    /// Symplectic products all zero and rank [Z|X] = n.
    bool is_valid() const;
};

/// Residue used for "(p2 - p1) mod 3" in the row_add phase function.
enum class ModResidue { Balanced, NonNegative };

void tableau_row_add(Tableau &t, size_t i, size_t j, ModResidue res = ModResidue::Balanced);
void tableau_apply_h(Tableau &t, size_t q);
void tableau_apply_s(Tableau &t, size_t q);
void tableau_apply_cz(Tableau &t, size_t a, size_t b);
Tableau tableau_run(const CliffordCircuit &c);
/// Largest residual |(P_j - 1) psi| over the stabilizer rows.
double stabilizer_residual(const Tableau &t, const DenseState &psi);

struct GraphForm {
    Graph g;
    BitVector a;
    /// Exponent of S^dag in Z4; values 2 and 3 absorb a Z sign on qubits without an H.
    std::vector<uint8_t> b;
    BitVector c;
};

/// |psi> = (prod_j X^c_j H^a_j (S^dag)^b_j) |G>. Requires n independent rows.
GraphForm stabilizers_to_graph(const Tableau &t, ModResidue res = ModResidue::Balanced);
DenseState graph_form_state(const GraphForm &f);

/// The 24 one-qubit Cliffords modulo global phase, as canonical matrices.
struct OneQubitClifford {
    uint8_t index = 0;
    static const std::vector<Mat2> &table();
    static OneQubitClifford from_matrix(const Mat2 &m);
    const Mat2 &matrix() const {
        return table()[index];
    }
    OneQubitClifford operator*(const OneQubitClifford &o) const;
    bool operator==(const OneQubitClifford &o) const = default;
};

Mat2 mat_mul(const Mat2 &a, const Mat2 &b);
bool equal_up_to_phase(const Mat2 &a, const Mat2 &b);
Mat2 z_check();
Mat2 x_check();

/// (a, b, c) in Z4 with ZCheck^a XCheck^b ZCheck^c equal to u up to phase; the least such
/// triple ordered by (c, b, a).
std::array<int, 3> euler_decompose(const OneQubitClifford &u);

/// Dense contraction of a diagram, scalar included. Entry i has open leg j set to bit j of i.
/// Refuses more than 24 spiders plus open legs.
std::vector<cplx> zx_tensor(const ZxDiagram &d);

}  // namespace ldlsim

#endif
