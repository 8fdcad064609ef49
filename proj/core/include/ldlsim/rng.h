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

#ifndef LDLSIM_RNG_H
#define LDLSIM_RNG_H

#include <cstdint>

namespace ldlsim {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Counter-based stream: the word at `counter` depends only on (key, counter).
inline uint64_t rng_word(uint64_t key, uint64_t counter) {
    return splitmix64(splitmix64(key) ^ splitmix64(counter + 0x632BE59BD9B4E019ULL));
}

inline uint64_t rng_key(uint64_t seed, uint64_t a, uint64_t b = 0) {
    return splitmix64(splitmix64(seed ^ 0xD1B54A32D192ED03ULL) + a * 0x9E3779B97F4A7C15ULL + splitmix64(b));
}

/// Sub-stream seed for a named purpose.
inline uint64_t derive_seed(uint64_t seed, const char *tag) {
    uint64_t h = 0xCBF29CE484222325ULL;
    for (const char *p = tag; *p; p++) {
        h = (h ^ static_cast<unsigned char>(*p)) * 0x100000001B3ULL;
    }
    return splitmix64(seed ^ h);
}

}  // namespace ldlsim

#endif
