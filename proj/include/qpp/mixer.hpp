// Copyright 2026 The qppsim Authors
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

#pragma once

#include <cstdint>

namespace qpp {

// SplitMix64-style mixing shared by the key schedule and the shot sampler.
// All arithmetic is modulo 2^64, so outputs are identical on every platform.

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t finalize64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

constexpr std::uint64_t mix64(std::uint64_t z) noexcept { return finalize64(z + kGoldenGamma); }

/// Weyl-sequence generator: advance by the golden gamma, emit the finalized state.
class SplitMix64 {
public:
    constexpr explicit SplitMix64(std::uint64_t state) noexcept : state_(state) {}

    constexpr std::uint64_t next_u64() noexcept {
        state_ += kGoldenGamma;
        return finalize64(state_);
    }

    /// Uniform deviate in [0, 1) from the top 53 bits of the next word.
    constexpr double next_unit() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    constexpr std::uint64_t state() const noexcept { return state_; }

private:
    std::uint64_t state_;
};

}  // namespace qpp
