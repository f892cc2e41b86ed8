// Copyright 2026 The anyonc Authors
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

#ifndef ANYONC_RNG_HPP
#define ANYONC_RNG_HPP

#include <cstdint>

namespace anyonc {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen over std::mt19937_64 because
// the output stream is trivially specified, so seeded runs reproduce
// bit-for-bit on any platform or standard library.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 bits of precision.
    double u01() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    std::uint64_t next_below(std::uint64_t n) {
        return next() % n;
    }
};

// Independent substream seed for run i of a master seed.
inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t i) {
    return master ^ (0x9E3779B97F4A7C15ULL * i);
}

}  // namespace anyonc

#endif
