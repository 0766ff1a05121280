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

// The simulated quantum channel: a bit-exact file format for ciphertext
// states, and shot sampling that turns states into classical bytes.
//
// QPPS layout (all integers and floats little-endian):
//   offset 0   "QPPS"
//   offset 4   version, 0x01
//   offset 5   block count, uint64
//   offset 13  pad_bits, uint8 (0..7)
//   offset 14  per state: re0 im0 re1 im1 re2 im2 re3 im3, IEEE-754 binary64

#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "qpp/cipher.hpp"
#include "qpp/error.hpp"
#include "qpp/qstate.hpp"

namespace qpp {

inline constexpr char kQppsMagic[4] = {'Q', 'P', 'P', 'S'};
inline constexpr std::uint8_t kQppsVersion = 0x01;
inline constexpr std::size_t kQppsHeaderBytes = 14;
inline constexpr std::size_t kQppsStateBytes = kDim * 2 * sizeof(double);
/// Deserialized states may drift this far from unit norm before rejection.
inline constexpr double kChannelNormTol = 1e-6;

static_assert(sizeof(double) == 8 && std::numeric_limits<double>::is_iec559);

namespace detail {

inline void put_u64_le(std::vector<std::uint8_t>& out, std::uint64_t x) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(x >> (8 * i)));
}

inline std::uint64_t get_u64_le(std::span<const std::uint8_t> in) {
    std::uint64_t x = 0;
    for (int i = 7; i >= 0; --i) x = (x << 8) | in[static_cast<std::size_t>(i)];
    return x;
}

}  // namespace detail

inline std::vector<std::uint8_t> serialize(const CipherStates& cs) {
    std::vector<std::uint8_t> out;
    out.reserve(kQppsHeaderBytes + kQppsStateBytes * cs.block_count());
    out.insert(out.end(), std::begin(kQppsMagic), std::end(kQppsMagic));
    out.push_back(kQppsVersion);
    detail::put_u64_le(out, cs.block_count());
    out.push_back(cs.pad_bits);
    for (const auto& s : cs.states) {
        for (const auto& a : s.amplitudes()) {
            detail::put_u64_le(out, std::bit_cast<std::uint64_t>(a.real()));
            detail::put_u64_le(out, std::bit_cast<std::uint64_t>(a.imag()));
        }
    }
    return out;
}

inline CipherStates deserialize(std::span<const std::uint8_t> bytes) {
    if (bytes.size() >= 4 && std::memcmp(bytes.data(), kQppsMagic, 4) != 0) {
        throw Error(ErrorCode::BadMagic, "not a QPPS stream");
    }
    if (bytes.size() < kQppsHeaderBytes) {
        throw Error(ErrorCode::TruncatedStream, "header needs 14 bytes");
    }
    if (bytes[4] != kQppsVersion) {
        throw Error(ErrorCode::BadVersion, "unsupported QPPS version " + std::to_string(bytes[4]));
    }
    const std::uint64_t count = detail::get_u64_le(bytes.subspan(5, 8));
    const std::uint8_t pad_bits = bytes[13];
    if (pad_bits > 7) throw Error(ErrorCode::InvalidArgument, "pad_bits above 7");

    const std::size_t payload = bytes.size() - kQppsHeaderBytes;
    if (count > payload / kQppsStateBytes) {
        throw Error(ErrorCode::TruncatedStream, "stream holds fewer than " +
                                                    std::to_string(count) + " states");
    }
    if (payload != count * kQppsStateBytes) {
        throw Error(ErrorCode::TrailingData, "bytes after the last state");
    }

    CipherStates cs;
    cs.pad_bits = pad_bits;
    cs.states.reserve(count);
    auto cursor = bytes.subspan(kQppsHeaderBytes);
    for (std::uint64_t i = 0; i < count; ++i) {
        Statevector4::Amplitudes amps;
        for (auto& a : amps) {
            const double re = std::bit_cast<double>(detail::get_u64_le(cursor.subspan(0, 8)));
            const double im = std::bit_cast<double>(detail::get_u64_le(cursor.subspan(8, 8)));
            a = Amplitude{re, im};
            cursor = cursor.subspan(16);
        }
        double n2 = 0.0;
        bool finite = true;
        for (const auto& a : amps) {
            finite = finite && is_finite(a);
            n2 += modulus_squared(a);
        }
        if (!finite || std::abs(std::sqrt(n2) - 1.0) > kChannelNormTol) {
            throw Error(ErrorCode::NormViolation, "state " + std::to_string(i) + " is not normalized");
        }
        cs.states.push_back(Statevector4::from_amplitudes(amps, 4 * kChannelNormTol));
    }
    return cs;
}

/// `shots_per_state` Born-rule shots of each state, 2 bits per shot packed
/// MSB-first (4 shots per byte), states concatenated. A final partial byte is
/// zero-filled. State i draws from ShotRng::for_state(seed, i).
inline std::vector<std::uint8_t> sample_states(std::span<const Statevector4> states,
                                               std::size_t shots_per_state, std::uint64_t seed) {
    if (shots_per_state == 0) throw Error(ErrorCode::InvalidArgument, "shots_per_state must be >= 1");
    const std::size_t total = states.size() * shots_per_state;
    std::vector<std::uint8_t> out((total + 3) / 4, 0);
    std::size_t k = 0;
    for (std::size_t i = 0; i < states.size(); ++i) {
        ShotRng rng = ShotRng::for_state(seed, i);
        for (std::size_t s = 0; s < shots_per_state; ++s, ++k) {
            const auto v = measure_shot(states[i], rng);
            out[k / 4] |= static_cast<std::uint8_t>(v << (6 - 2 * (k % 4)));
        }
    }
    return out;
}

inline std::vector<std::uint8_t> sample_states(const CipherStates& cs, std::size_t shots_per_state,
                                               std::uint64_t seed) {
    return sample_states(std::span<const Statevector4>(cs.states), shots_per_state, seed);
}

}  // namespace qpp
