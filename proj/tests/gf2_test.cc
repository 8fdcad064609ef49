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

#include <gtest/gtest.h>

#include "ldlsim/ring.h"
#include "test_util.h"

using namespace ldlsim;
using ldlsim::testing::random_matrix;
using ldlsim::testing::random_vector;

namespace {

size_t rank_oracle(BitMatrix m) {
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
        r++;
    }
    return r;
}

BitMatrix random_unit_lower(std::mt19937_64 &rng, size_t n) {
    BitMatrix l = BitMatrix::identity(n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < i; j++) {
            l.set(i, j, rng() & 1);
        }
    }
    return l;
}

}  // namespace

TEST(gf2, mul_examples) {
    BitMatrix a = BitMatrix::from_rows({"11", "01"});
    BitMatrix b = BitMatrix::from_rows({"10", "11"});
    EXPECT_EQ(mul(a, b), BitMatrix::from_rows({"01", "11"}));
    std::mt19937_64 rng(1);
    BitMatrix m = random_matrix(rng, 70, 90);
    EXPECT_EQ(mul(BitMatrix::identity(70), m), m);
    EXPECT_THROW(mul(a, BitMatrix(3, 3)), ShapeError);
}

TEST(gf2, mul_matches_naive_and_associates) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 20; trial++) {
        size_t n = 1 + rng() % 300, k = 1 + rng() % 300, m = 1 + rng() % 100;
        BitMatrix a = random_matrix(rng, n, k), b = random_matrix(rng, k, m), c = random_matrix(rng, m, 7);
        ASSERT_EQ(mul(a, b), mul_naive(a, b));
        EXPECT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
    }
    BitMatrix a = random_matrix(rng, 64, 64), b = random_matrix(rng, 64, 64);
    EXPECT_EQ(mul(a, b), mul_naive(a, b));
}

TEST(gf2, pad_bits_stay_zero) {
    std::mt19937_64 rng(3);
    BitMatrix m = random_matrix(rng, 5, 70);
    BitMatrix t = m.transpose().transpose();
    EXPECT_EQ(t, m);
    BitVector v = random_vector(rng, 70) ^ random_vector(rng, 70);
    EXPECT_EQ(v.words()[1] >> 6, 0u);
}

TEST(gf2, rank_examples_and_oracle) {
    EXPECT_EQ(rank(BitMatrix::identity(5)), 5u);
    EXPECT_EQ(rank(BitMatrix::from_rows({"111", "111", "111"})), 1u);
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 20; trial++) {
        BitMatrix a = random_matrix(rng, 1 + rng() % 120, 1 + rng() % 120, 0.1 * (1 + rng() % 5));
        BitMatrix copy = a;
        EXPECT_EQ(rank(a), rank_oracle(a));
        EXPECT_EQ(rank(a), rank(a.transpose()));
        EXPECT_EQ(a, copy);
    }
    BitMatrix big = random_matrix(rng, 100, 100);
    EXPECT_EQ(rank(big), rank_oracle(big));
}

TEST(gf2, solve_lower_unit) {
    BitVector v = BitVector::from_string("1011");
    EXPECT_EQ(solve_lower_unit(BitMatrix::identity(4), v), v);
    EXPECT_EQ(solve_lower_unit(BitMatrix::from_rows({"10", "11"}), BitVector::from_string("11")),
              BitVector::from_string("10"));
    std::mt19937_64 rng(5);
    BitMatrix l = random_unit_lower(rng, 128);
    BitVector rhs = random_vector(rng, 128);
    EXPECT_EQ(mul(l, solve_lower_unit(l, rhs)), rhs);
    EXPECT_THROW(solve_lower_unit(BitMatrix::from_rows({"00", "11"}), BitVector(2)), ContractViolation);
}

TEST(gf2, in_span) {
    auto c = in_span(BitMatrix::identity(3), BitVector::from_string("101"));
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(*c, BitVector::from_string("101"));
    EXPECT_FALSE(in_span(BitMatrix(3, 2), BitVector::from_string("010")).has_value());
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 30; trial++) {
        size_t n = 1 + rng() % 80, k = 1 + rng() % 40;
        BitMatrix basis = mul(random_matrix(rng, n, 3), random_matrix(rng, 3, k));
        BitVector v = mul(basis, random_vector(rng, k));
        auto coords = in_span(basis, v);
        ASSERT_TRUE(coords.has_value());
        EXPECT_EQ(mul(basis, *coords), v);
    }
}

TEST(gf2, kernel_basis) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; trial++) {
        BitMatrix m = random_matrix(rng, 1 + rng() % 30, 1 + rng() % 30);
        BitMatrix k = kernel_basis(m);
        EXPECT_EQ(k.cols(), m.cols() - rank(m));
        EXPECT_TRUE(mul(m, k).is_zero());
        EXPECT_EQ(rank(k), k.cols());
    }
}

TEST(ring, clifford_values) {
    EXPECT_EQ(ExactAmplitude::omega_pow(8), ExactAmplitude::from_int(1));
    EXPECT_EQ(ExactAmplitude::omega_pow(4), ExactAmplitude::from_int(-1));
    EXPECT_EQ(ExactAmplitude::sqrt2_pow(2), ExactAmplitude::from_int(2));
    ExactAmplitude r = ExactAmplitude::sqrt2_pow(-1);
    EXPECT_EQ(r * r, ExactAmplitude({1, 0, 0, 0}, 1));
    EXPECT_EQ(ExactAmplitude::omega_pow(1) - ExactAmplitude::omega_pow(3), ExactAmplitude::sqrt2_pow(1));
    for (int s = -6; s <= 6; s++) {
        for (int m = 0; m < 8; m++) {
            ExactAmplitude a = ExactAmplitude::clifford(s, m);
            auto form = a.clifford_form();
            ASSERT_TRUE(form.has_value());
            EXPECT_EQ(ExactAmplitude::clifford(form->first, form->second), a);
            EXPECT_EQ(a.norm2(), ExactAmplitude::sqrt2_pow(2 * s));
            EXPECT_NEAR(std::abs(a.to_complex()), std::pow(2.0, s / 2.0), 1e-12);
        }
    }
    EXPECT_EQ(ExactAmplitude().str(), "zero");
    EXPECT_FALSE(ExactAmplitude().clifford_form().has_value());
    EXPECT_FALSE((ExactAmplitude::from_int(1) + ExactAmplitude::omega_pow(1)).clifford_form().has_value());
}

TEST(ring, arithmetic_matches_complex) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; trial++) {
        auto pick = [&] {
            return ExactAmplitude({static_cast<int64_t>(rng() % 9) - 4, static_cast<int64_t>(rng() % 9) - 4,
                                   static_cast<int64_t>(rng() % 9) - 4, static_cast<int64_t>(rng() % 9) - 4},
                                  static_cast<int>(rng() % 5));
        };
        ExactAmplitude a = pick(), b = pick();
        EXPECT_LT(std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()), 1e-9);
        EXPECT_LT(std::abs((a + b).to_complex() - (a.to_complex() + b.to_complex())), 1e-9);
        EXPECT_LT(std::abs(a.conj().to_complex() - std::conj(a.to_complex())), 1e-9);
        EXPECT_EQ(a - a, ExactAmplitude());
    }
}
