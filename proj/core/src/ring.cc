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

#include "ldlsim/ring.h"

#include <cmath>
#include <stdexcept>

namespace ldlsim {

static int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw std::overflow_error("ExactAmplitude overflow");
    }
    return r;
}

static int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw std::overflow_error("ExactAmplitude overflow");
    }
    return r;
}

static int64_t checked_shl(int64_t a, int s) {
    if (s >= 62) {
        if (a == 0) {
            return 0;
        }
        throw std::overflow_error("ExactAmplitude overflow");
    }
    return checked_mul(a, int64_t{1} << s);
}

ExactAmplitude::ExactAmplitude(std::array<int64_t, 4> c, int e) : c_(c), e_(e) {
    normalize();
}

void ExactAmplitude::normalize() {
    if (is_zero()) {
        e_ = 0;
        return;
    }
    while (((c_[0] | c_[1] | c_[2] | c_[3]) & 1) == 0) {
        for (auto &x : c_) {
            x /= 2;
        }
        e_--;
    }
}

ExactAmplitude ExactAmplitude::from_int(int64_t v) {
    return ExactAmplitude({v, 0, 0, 0}, 0);
}

ExactAmplitude ExactAmplitude::omega_pow(int m) {
    m = ((m % 8) + 8) % 8;
    std::array<int64_t, 4> c{0, 0, 0, 0};
    c[m % 4] = m < 4 ? 1 : -1;
    return ExactAmplitude(c, 0);
}

ExactAmplitude ExactAmplitude::sqrt2_pow(int s) {
    int half = s >= 0 ? s / 2 : -((-s + 1) / 2);
    ExactAmplitude r({1, 0, 0, 0}, -half);
    if (s - 2 * half == 1) {
        r = r * ExactAmplitude({0, 1, 0, -1}, 0);
    }
    return r;
}

ExactAmplitude ExactAmplitude::clifford(int s, int m) {
    return sqrt2_pow(s).times_omega(m);
}

ExactAmplitude ExactAmplitude::operator+(const ExactAmplitude &o) const {
    if (is_zero()) {
        return o;
    }
    if (o.is_zero()) {
        return *this;
    }
    int e = std::max(e_, o.e_);
    std::array<int64_t, 4> c;
    for (int k = 0; k < 4; k++) {
        c[k] = checked_add(checked_shl(c_[k], e - e_), checked_shl(o.c_[k], e - o.e_));
    }
    return ExactAmplitude(c, e);
}

ExactAmplitude ExactAmplitude::operator-() const {
    ExactAmplitude r = *this;
    for (auto &x : r.c_) {
        x = -x;
    }
    return r;
}

ExactAmplitude ExactAmplitude::operator-(const ExactAmplitude &o) const {
    return *this + (-o);
}

ExactAmplitude ExactAmplitude::operator*(const ExactAmplitude &o) const {
    std::array<int64_t, 4> c{0, 0, 0, 0};
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            int64_t p = checked_mul(c_[i], o.c_[j]);
            int k = i + j;
            if (k >= 4) {
                c[k - 4] = checked_add(c[k - 4], -p);
            } else {
                c[k] = checked_add(c[k], p);
            }
        }
    }
    return ExactAmplitude(c, e_ + o.e_);
}

ExactAmplitude ExactAmplitude::conj() const {
    return ExactAmplitude({c_[0], -c_[3], -c_[2], -c_[1]}, e_);
}

ExactAmplitude ExactAmplitude::times_omega(int m) const {
    m = ((m % 8) + 8) % 8;
    std::array<int64_t, 4> c = c_;
    for (int t = 0; t < m; t++) {
        c = {-c[3], c[0], c[1], c[2]};
    }
    return ExactAmplitude(c, e_);
}

ExactAmplitude ExactAmplitude::norm2() const {
    return *this * conj();
}

std::optional<std::pair<int, int>> ExactAmplitude::clifford_form() const {
    if (is_zero()) {
        return std::nullopt;
    }
    for (int m = 0; m < 8; m++) {
        ExactAmplitude y = times_omega(-m);
        if (y.c_ == std::array<int64_t, 4>{1, 0, 0, 0}) {
            return std::make_pair(-2 * y.e_, m);
        }
        if (y.c_ == std::array<int64_t, 4>{0, 1, 0, -1}) {
            return std::make_pair(1 - 2 * y.e_, m);
        }
    }
    return std::nullopt;
}

std::complex<double> ExactAmplitude::to_complex() const {
    const double h = std::sqrt(0.5);
    std::complex<double> w[4] = {{1, 0}, {h, h}, {0, 1}, {-h, h}};
    std::complex<double> r = 0;
    for (int k = 0; k < 4; k++) {
        r += static_cast<double>(c_[k]) * w[k];
    }
    return r * std::ldexp(1.0, -e_);
}

std::string ExactAmplitude::str() const {
    if (is_zero()) {
        return "zero";
    }
    if (auto f = clifford_form()) {
        return "(" + std::to_string(f->first) + "," + std::to_string(f->second) + ")";
    }
    return "[" + std::to_string(c_[0]) + "," + std::to_string(c_[1]) + "," + std::to_string(c_[2]) + "," +
           std::to_string(c_[3]) + "]/2^" + std::to_string(e_);
}

}  // namespace ldlsim
