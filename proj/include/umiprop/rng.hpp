// umiprop - multi-band urban microcell propagation modelling toolkit
// Copyright (C) 2026 the umiprop authors
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

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace umiprop {

/// PCG-XSH-RR 64/32 generator (O'Neill). Self-contained so that seeded
/// runs produce identical streams on every platform and standard library;
/// std::normal_distribution and friends leave the algorithm unspecified.
class Pcg32 {
  public:
    explicit Pcg32(std::uint64_t seed, std::uint64_t stream = 0)
    {
        inc_ = (stream << 1u) | 1u;
        state_ = 0u;
        next_u32();
        state_ += seed;
        next_u32();
    }

    /// Independent generator for logical substream `index` of `seed`
    /// (one per Monte Carlo drop, one per parallel worker, ...).
    static Pcg32 substream(std::uint64_t seed, std::uint64_t index)
    {
        return Pcg32(split_mix(seed ^ split_mix(index + 0x9e3779b97f4a7c15ull)), index);
    }

    std::uint32_t next_u32()
    {
        std::uint64_t old = state_;
        state_ = old * 6364136223846793005ull + inc_;
        auto xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
        auto rot = static_cast<std::uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
    }

    std::uint64_t next_u64()
    {
        std::uint64_t hi = next_u32();
        return (hi << 32u) | next_u32();
    }

    /// Uniform double in [0, 1), 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11u) * 0x1.0p-53; }

    /// Standard normal deviate via Box-Muller; uses only the cosine branch
    /// so the draw count per call is fixed.
    double next_gaussian()
    {
        double u1 = 1.0 - next_double(); // (0, 1], keeps the log finite
        double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

  private:
    static std::uint64_t split_mix(std::uint64_t z)
    {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30u)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27u)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31u);
    }

    std::uint64_t state_ = 0;
    std::uint64_t inc_ = 1;
};

} // namespace umiprop
