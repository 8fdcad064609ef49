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

#ifndef LDLSIM_PHASED_H
#define LDLSIM_PHASED_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ldlsim/gf2.h"
#include "ldlsim/graph.h"

namespace ldlsim {

/// Element of J_n: F2 symmetric off-diagonal with zero diagonal, plus a Z4 diagonal held as
/// low and high bit vectors.
class PhasedAdjacency {
   public:
    PhasedAdjacency() = default;
    explicit PhasedAdjacency(size_t n) : off_(n, n), lo_(n), hi_(n) {
    }
    static PhasedAdjacency from_graph(const Graph &g);
    /// Off-diagonal from `a`, diagonal low bits from a's diagonal.
    static PhasedAdjacency from_matrix(const BitMatrix &a);

    size_t size() const {
        return lo_.size();
    }
    uint8_t diag(size_t i) const {
        return static_cast<uint8_t>(lo_.get(i) | (hi_.get(i) << 1));
    }
    void set_diag(size_t i, int value) {
        value &= 3;
        lo_.set(i, value & 1);
        hi_.set(i, value >> 1);
    }
    void add_diag(size_t i, int delta) {
        set_diag(i, diag(i) + delta);
    }
    bool edge(size_t i, size_t j) const {
        return off_.get(i, j);
    }
    void set_edge(size_t i, size_t j, bool b);
    void toggle_edge(size_t i, size_t j);

    const BitMatrix &offdiag() const {
        return off_;
    }
    const BitVector &diag_low() const {
        return lo_;
    }
    const BitVector &diag_high() const {
        return hi_;
    }
    /// w1(A): off-diagonal plus low diagonal bits.
    BitMatrix omega1() const;
    Graph graph() const;
    /// result(i, j) = this(perm[i], perm[j]).
    PhasedAdjacency permuted(const std::vector<uint32_t> &perm) const;
    PhasedAdjacency principal(const std::vector<uint32_t> &idx) const {
        return permuted(idx);
    }
    /// Z4 value of x^T A x with x lifted to {0,1}.
    int quadratic_form(const BitVector &x) const;
    bool operator==(const PhasedAdjacency &o) const = default;
    std::string str() const;

   private:
    BitMatrix off_;
    BitVector lo_;
    BitVector hi_;
};

/// `pgs <n>` header, `d <v> <0..3>` per nonzero diagonal, `e <u> <v>` per edge. 0-indexed.
PhasedAdjacency parse_pgs(std::string_view text);
std::string format_pgs(const PhasedAdjacency &a);

}  // namespace ldlsim

#endif
