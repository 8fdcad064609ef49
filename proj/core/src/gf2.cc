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

#include "ldlsim/gf2.h"

#include <algorithm>
#include <bit>

namespace ldlsim {

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (size_t i = 0; i < bits.size(); i++) {
        if (bits[i] == '1') {
            v.set(i, true);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("bit string contains a character other than 0/1");
        }
    }
    return v;
}

BitVector BitVector::from_index(size_t n, uint64_t bits) {
    BitVector v(n);
    for (size_t i = 0; i < n && i < 64; i++) {
        v.set(i, (bits >> i) & 1);
    }
    return v;
}

bool BitVector::any() const {
    for (word_t w : w_) {
        if (w) {
            return true;
        }
    }
    return false;
}

size_t BitVector::popcount() const {
    size_t c = 0;
    for (word_t w : w_) {
        c += std::popcount(w);
    }
    return c;
}

bool BitVector::dot(const BitVector &o) const {
    if (o.n_ != n_) {
        throw ShapeError("BitVector::dot length mismatch");
    }
    word_t acc = 0;
    for (size_t k = 0; k < w_.size(); k++) {
        acc ^= w_[k] & o.w_[k];
    }
    return std::popcount(acc) & 1;
}

BitVector &BitVector::operator^=(const BitVector &o) {
    if (o.n_ != n_) {
        throw ShapeError("BitVector xor length mismatch");
    }
    for (size_t k = 0; k < w_.size(); k++) {
        w_[k] ^= o.w_[k];
    }
    return *this;
}

BitVector &BitVector::operator&=(const BitVector &o) {
    if (o.n_ != n_) {
        throw ShapeError("BitVector and length mismatch");
    }
    for (size_t k = 0; k < w_.size(); k++) {
        w_[k] &= o.w_[k];
    }
    return *this;
}

BitVector BitVector::operator^(const BitVector &o) const {
    BitVector r = *this;
    r ^= o;
    return r;
}

BitVector BitVector::operator&(const BitVector &o) const {
    BitVector r = *this;
    r &= o;
    return r;
}

std::string BitVector::str() const {
    std::string s(n_, '0');
    for (size_t i = 0; i < n_; i++) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i, true);
    }
    return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string> &rows) {
    size_t c = rows.empty() ? 0 : rows[0].size();
    BitMatrix m(rows.size(), c);
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != c) {
            throw ShapeError("ragged rows");
        }
        for (size_t j = 0; j < c; j++) {
            m.set(r, j, rows[r][j] == '1');
        }
    }
    return m;
}

void BitMatrix::xor_row_into(size_t src, size_t dst) {
    word_t *d = row(dst);
    const word_t *s = row(src);
    for (size_t k = 0; k < stride_; k++) {
        d[k] ^= s[k];
    }
}

void BitMatrix::swap_rows(size_t a, size_t b) {
    if (a != b) {
        std::swap_ranges(row(a), row(a) + stride_, row(b));
    }
}

bool BitMatrix::row_any(size_t r) const {
    const word_t *p = row(r);
    for (size_t k = 0; k < stride_; k++) {
        if (p[k]) {
            return true;
        }
    }
    return false;
}

BitVector BitMatrix::row_vector(size_t r) const {
    BitVector v(cols_);
    std::copy(row(r), row(r) + stride_, v.words());
    return v;
}

BitVector BitMatrix::col_vector(size_t c) const {
    BitVector v(rows_);
    for (size_t r = 0; r < rows_; r++) {
        if (get(r, c)) {
            v.set(r, true);
        }
    }
    return v;
}

void BitMatrix::set_row(size_t r, const BitVector &v) {
    if (v.size() != cols_) {
        throw ShapeError("set_row length mismatch");
    }
    std::copy(v.words(), v.words() + stride_, row(r));
}

void BitMatrix::set_col(size_t c, const BitVector &v) {
    if (v.size() != rows_) {
        throw ShapeError("set_col length mismatch");
    }
    for (size_t r = 0; r < rows_; r++) {
        set(r, c, v.get(r));
    }
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        const word_t *p = row(r);
        for (size_t k = 0; k < stride_; k++) {
            word_t w = p[k];
            while (w) {
                size_t c = k * WORD_BITS + std::countr_zero(w);
                w &= w - 1;
                t.set(c, r, true);
            }
        }
    }
    return t;
}

bool BitMatrix::is_symmetric() const {
    return rows_ == cols_ && transpose() == *this;
}

bool BitMatrix::is_zero() const {
    return std::all_of(d_.begin(), d_.end(), [](word_t w) { return w == 0; });
}

std::string BitMatrix::str() const {
    std::string s;
    for (size_t r = 0; r < rows_; r++) {
        s += row_vector(r).str();
        s += '\n';
    }
    return s;
}

static void check_mul_shape(const BitMatrix &a, const BitMatrix &b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("mul: a.cols != b.rows");
    }
}

BitMatrix mul_naive(const BitMatrix &a, const BitMatrix &b) {
    check_mul_shape(a, b);
    BitMatrix c(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < b.cols(); j++) {
            bool acc = false;
            for (size_t k = 0; k < a.cols(); k++) {
                acc ^= a.get(i, k) & b.get(k, j);
            }
            c.set(i, j, acc);
        }
    }
    return c;
}

static void mul_four_russians(const BitMatrix &a, const BitMatrix &b, BitMatrix &c) {
    const size_t s = b.stride();
    std::vector<word_t> table(256 * s);
    for (size_t k0 = 0; k0 < a.cols(); k0 += 8) {
        size_t kw = std::min<size_t>(8, a.cols() - k0);
        size_t entries = size_t{1} << kw;
        std::fill(table.begin(), table.begin() + s, 0);
        for (size_t g = 1; g < entries; g++) {
            size_t low = std::countr_zero(g);
            const word_t *src = table.data() + (g & (g - 1)) * s;
            const word_t *br = b.row(k0 + low);
            word_t *dst = table.data() + g * s;
            for (size_t t = 0; t < s; t++) {
                dst[t] = src[t] ^ br[t];
            }
        }
        for (size_t i = 0; i < a.rows(); i++) {
            word_t w = a.row(i)[k0 / WORD_BITS] >> (k0 % WORD_BITS);
            size_t idx = w & (entries - 1);
            if (!idx) {
                continue;
            }
            const word_t *src = table.data() + idx * s;
            word_t *dst = c.row(i);
            for (size_t t = 0; t < s; t++) {
                dst[t] ^= src[t];
            }
        }
    }
}

BitMatrix mul(const BitMatrix &a, const BitMatrix &b) {
    check_mul_shape(a, b);
    BitMatrix c(a.rows(), b.cols());
    if (b.cols() >= 256 && a.rows() >= 64) {
        mul_four_russians(a, b, c);
        return c;
    }
    const size_t s = b.stride();
    for (size_t i = 0; i < a.rows(); i++) {
        const word_t *ar = a.row(i);
        word_t *cr = c.row(i);
        for (size_t kw = 0; kw < a.stride(); kw++) {
            word_t w = ar[kw];
            while (w) {
                size_t k = kw * WORD_BITS + std::countr_zero(w);
                w &= w - 1;
                const word_t *br = b.row(k);
                for (size_t t = 0; t < s; t++) {
                    cr[t] ^= br[t];
                }
            }
        }
    }
    return c;
}

BitVector mul(const BitMatrix &a, const BitVector &x) {
    if (a.cols() != x.size()) {
        throw ShapeError("mul: a.cols != x.size");
    }
    BitVector y(a.rows());
    for (size_t i = 0; i < a.rows(); i++) {
        const word_t *ar = a.row(i);
        word_t acc = 0;
        for (size_t k = 0; k < a.stride(); k++) {
            acc ^= ar[k] & x.words()[k];
        }
        if (std::popcount(acc) & 1) {
            y.set(i, true);
        }
    }
    return y;
}

std::vector<size_t> row_reduce(BitMatrix &m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); c++) {
        size_t p = r;
        while (p < m.rows() && !m.get(p, c)) {
            p++;
        }
        if (p == m.rows()) {
            continue;
        }
        m.swap_rows(p, r);
        for (size_t i = 0; i < m.rows(); i++) {
            if (i != r && m.get(i, c)) {
                m.xor_row_into(r, i);
            }
        }
        pivots.push_back(c);
        r++;
    }
    return pivots;
}

size_t rank(const BitMatrix &a) {
    BitMatrix m = a.rows() <= a.cols() ? a : a.transpose();
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); c++) {
        size_t p = r;
        while (p < m.rows() && !m.get(p, c)) {
            p++;
        }
        if (p == m.rows()) {
            continue;
        }
        m.swap_rows(p, r);
        for (size_t i = r + 1; i < m.rows(); i++) {
            if (m.get(i, c)) {
                m.xor_row_into(r, i);
            }
        }
        r++;
    }
    return r;
}

BitVector solve_lower_unit(const BitMatrix &l, const BitVector &rhs) {
    const size_t n = l.rows();
    if (l.cols() != n || rhs.size() != n) {
        throw ShapeError("solve_lower_unit: shape mismatch");
    }
    for (size_t i = 0; i < n; i++) {
        if (!l.get(i, i)) {
            throw ContractViolation("solve_lower_unit: non-unit diagonal at row " + std::to_string(i));
        }
    }
    BitVector x(n);
    for (size_t i = 0; i < n; i++) {
        const word_t *lr = l.row(i);
        word_t acc = 0;
        for (size_t k = 0; k <= i / WORD_BITS; k++) {
            acc ^= lr[k] & x.words()[k];
        }
        bool b = rhs.get(i) ^ (std::popcount(acc) & 1);
        x.set(i, b);
    }
    return x;
}

std::optional<BitVector> in_span(const BitMatrix &basis, const BitVector &v) {
    if (basis.rows() != v.size()) {
        throw ShapeError("in_span: basis.rows != v.size");
    }
    const size_t r = basis.cols();
    BitMatrix aug(basis.rows(), r + 1);
    for (size_t i = 0; i < basis.rows(); i++) {
        std::copy(basis.row(i), basis.row(i) + basis.stride(), aug.row(i));
        aug.set(i, r, v.get(i));
    }
    std::vector<size_t> piv = row_reduce(aug);
    BitVector c(r);
    for (size_t k = 0; k < piv.size(); k++) {
        if (piv[k] == r) {
            return std::nullopt;
        }
        c.set(piv[k], aug.get(k, r));
    }
    return c;
}

BitMatrix kernel_basis(const BitMatrix &m) {
    BitMatrix red = m;
    std::vector<size_t> piv = row_reduce(red);
    std::vector<bool> is_piv(m.cols(), false);
    for (size_t p : piv) {
        is_piv[p] = true;
    }
    BitMatrix z(m.cols(), m.cols() - piv.size());
    size_t out = 0;
    for (size_t f = 0; f < m.cols(); f++) {
        if (is_piv[f]) {
            continue;
        }
        z.set(f, out, true);
        for (size_t k = 0; k < piv.size(); k++) {
            if (red.get(k, f)) {
                z.set(piv[k], out, true);
            }
        }
        out++;
    }
    return z;
}

}  // namespace ldlsim
