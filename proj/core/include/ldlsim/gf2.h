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

#ifndef LDLSIM_GF2_H
#define LDLSIM_GF2_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ldlsim {

using word_t = uint64_t;
constexpr size_t WORD_BITS = 64;

inline size_t num_words(size_t bits) {
    return (bits + WORD_BITS - 1) / WORD_BITS;
}

struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

/// Bit-packed vector over F2. Pad bits beyond `size()` are always zero.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t n) : n_(n), w_(num_words(n), 0) {
    }
    static BitVector from_string(std::string_view bits);
    static BitVector from_index(size_t n, uint64_t bits);

    size_t size() const {
        return n_;
    }
    bool get(size_t i) const {
        return (w_[i / WORD_BITS] >> (i % WORD_BITS)) & 1;
    }
    void set(size_t i, bool b) {
        word_t m = word_t{1} << (i % WORD_BITS);
        if (b) {
            w_[i / WORD_BITS] |= m;
        } else {
            w_[i / WORD_BITS] &= ~m;
        }
    }
    void flip(size_t i) {
        w_[i / WORD_BITS] ^= word_t{1} << (i % WORD_BITS);
    }
    bool any() const;
    size_t popcount() const;
    bool dot(const BitVector &o) const;

    BitVector &operator^=(const BitVector &o);
    BitVector &operator&=(const BitVector &o);
    BitVector operator^(const BitVector &o) const;
    BitVector operator&(const BitVector &o) const;
    bool operator==(const BitVector &o) const = default;

    word_t *words() {
        return w_.data();
    }
    const word_t *words() const {
        return w_.data();
    }
    size_t word_count() const {
        return w_.size();
    }
    std::string str() const;

   private:
    size_t n_ = 0;
    std::vector<word_t> w_;
};

/// Row-major bit-packed matrix over F2. Each row is padded to a whole number of words.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), stride_(num_words(cols)), d_(rows * stride_, 0) {
    }
    static BitMatrix identity(size_t n);
    static BitMatrix from_rows(const std::vector<std::string> &rows);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    size_t stride() const {
        return stride_;
    }
    bool get(size_t r, size_t c) const {
        return (d_[r * stride_ + c / WORD_BITS] >> (c % WORD_BITS)) & 1;
    }
    void set(size_t r, size_t c, bool b) {
        word_t m = word_t{1} << (c % WORD_BITS);
        word_t &w = d_[r * stride_ + c / WORD_BITS];
        w = b ? (w | m) : (w & ~m);
    }
    void flip(size_t r, size_t c) {
        d_[r * stride_ + c / WORD_BITS] ^= word_t{1} << (c % WORD_BITS);
    }
    word_t *row(size_t r) {
        return d_.data() + r * stride_;
    }
    const word_t *row(size_t r) const {
        return d_.data() + r * stride_;
    }
    void xor_row_into(size_t src, size_t dst);
    void swap_rows(size_t a, size_t b);
    bool row_any(size_t r) const;
    BitVector row_vector(size_t r) const;
    BitVector col_vector(size_t c) const;
    void set_row(size_t r, const BitVector &v);
    void set_col(size_t c, const BitVector &v);

    BitMatrix transpose() const;
    bool is_symmetric() const;
    bool is_zero() const;
    bool operator==(const BitMatrix &o) const = default;
    std::string str() const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    size_t stride_ = 0;
    std::vector<word_t> d_;
};

BitMatrix mul(const BitMatrix &a, const BitMatrix &b);
BitMatrix mul_naive(const BitMatrix &a, const BitMatrix &b);
BitVector mul(const BitMatrix &a, const BitVector &x);
size_t rank(const BitMatrix &a);
BitVector solve_lower_unit(const BitMatrix &l, const BitVector &rhs);
std::optional<BitVector> in_span(const BitMatrix &basis, const BitVector &v);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> row_reduce(BitMatrix &m);

/// Basis of {c : m c = 0} as columns of the returned matrix.
BitMatrix kernel_basis(const BitMatrix &m);

}  // namespace ldlsim

#endif
