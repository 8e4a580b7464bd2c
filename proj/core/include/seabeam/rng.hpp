// SPDX-License-Identifier: Apache-2.0
//
// seabeam - robust downlink beamforming for integrated satellite-terrestrial
// maritime communication systems
// Copyright (C) 2026 seabeam contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef SEABEAM_RNG_HPP
#define SEABEAM_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>

namespace seabeam {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t &state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t rotl64(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace detail

// Mixes a base seed with two counters into a new seed. Streams derived from
// distinct (a, b) pairs are statistically independent, which keeps sweep
// points and Monte Carlo trials reproducible regardless of execution order.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = base;
    std::uint64_t h = detail::splitmix64(s);
    s ^= a * 0x9e3779b97f4a7c15ULL;
    h ^= detail::splitmix64(s);
    s ^= b * 0xd1b54a32d192ed03ULL;
    h ^= detail::splitmix64(s);
    return h;
}

// xoshiro256++ with splitmix64 state expansion. Self-contained so that byte
// identical output is guaranteed across platforms and standard libraries.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto &word : s_)
            word = detail::splitmix64(sm);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = detail::rotl64(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = detail::rotl64(s_[3], 45);
        return result;
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    // Standard normal via Box-Muller, implemented locally so that draws do
    // not depend on the C++ runtime's distribution internals.
    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1 = uniform01();
        while (u1 <= 0.0)
            u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        cached_ = r * std::sin(a);
        have_cached_ = true;
        return r * std::cos(a);
    }

    // Circularly symmetric complex normal with unit variance.
    std::complex<double> cnormal() {
        const double scale = 0.7071067811865475244;
        const double re = normal();
        const double im = normal();
        return {scale * re, scale * im};
    }

    RandomStream derive(std::uint64_t a, std::uint64_t b) const {
        return RandomStream(derive_seed(s_[0] ^ detail::rotl64(s_[2], 31), a, b));
    }

  private:
    std::uint64_t s_[4] = {};
    double cached_ = 0.0;
    bool have_cached_ = false;
};

} // namespace seabeam

#endif
