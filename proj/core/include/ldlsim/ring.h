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

#ifndef LDLSIM_RING_H
#define LDLSIM_RING_H

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace ldlsim {

/// Exact element of Z[1/2][w] with w = exp(i pi/4):
///     (c[0] + c[1] w + c[2] w^2 + c[3] w^3) / 2^e
/// Kept normalized: zero is all-zero with e = 0, otherwise not every c[k] is even.
class ExactAmplitude {
   public:
    ExactAmplitude() = default;
    ExactAmplitude(std::array<int64_t, 4> c, int e);
    static ExactAmplitude from_int(int64_t v);
    static ExactAmplitude omega_pow(int m);
    /// 2^(s/2).
    static ExactAmplitude sqrt2_pow(int s);
    /// 2^(s/2) * w^m.
    static ExactAmplitude clifford(int s, int m);

    const std::array<int64_t, 4> &coeffs() const {
        return c_;
    }
    int exponent() const {
        return e_;
    }
    bool is_zero() const {
        return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
    }

    ExactAmplitude operator+(const ExactAmplitude &o) const;
    ExactAmplitude operator-(const ExactAmplitude &o) const;
    ExactAmplitude operator-() const;
    ExactAmplitude operator*(const ExactAmplitude &o) const;
    ExactAmplitude &operator+=(const ExactAmplitude &o) {
        return *this = *this + o;
    }
    ExactAmplitude &operator*=(const ExactAmplitude &o) {
        return *this = *this * o;
    }
    bool operator==(const ExactAmplitude &o) const = default;

    ExactAmplitude conj() const;
    ExactAmplitude times_omega(int m) const;
    ExactAmplitude norm2() const;

    /// (s, m) with value 2^(s/2) w^m, or nullopt when zero or not of that shape.
    std::optional<std::pair<int, int>> clifford_form() const;
    std::complex<double> to_complex() const;
    /// "zero", "(s,m)" or "[c0,c1,c2,c3]/2^e".
    std::string str() const;

   private:
    void normalize();
    std::array<int64_t, 4> c_{0, 0, 0, 0};
    int e_ = 0;
};

}  // namespace ldlsim

#endif
