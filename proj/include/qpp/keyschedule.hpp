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

// Expansion of a pre-shared key into the byte-level XOR randomization, the
// Fisher-Yates randomness behind the permutation pad, and dispatch indices.
//
// Each consumer gets its own stream, seeded by folding the key bytes into a
// SplitMix64 state that starts from a per-domain constant. The expander is
// deterministic and portable; it is not a CSPRNG.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <span>
#include <utility>
#include <vector>

#include "qpp/error.hpp"
#include "qpp/mixer.hpp"
#include "qpp/perm4.hpp"

namespace qpp {

inline constexpr std::size_t kMinKeyBytes = 32;

enum class DomainTag : std::uint8_t {
    Pad = 0x01,
    Dispatch = 0x02,
    Shots = 0x03,
};

/// Opaque pre-shared secret, at least 32 bytes.
class KeyMaterial {
public:
    explicit KeyMaterial(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {
        if (bytes_.size() < kMinKeyBytes) {
            throw Error(ErrorCode::KeyTooShort, "key has " + std::to_string(bytes_.size()) +
                                                    " bytes, need at least " +
                                                    std::to_string(kMinKeyBytes));
        }
    }

    /// Reads a raw binary key file verbatim.
    static KeyMaterial load(const std::filesystem::path& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw Error(ErrorCode::IoError, "cannot open key file " + path.string());
        std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                        std::istreambuf_iterator<char>());
        if (in.bad()) throw Error(ErrorCode::IoError, "cannot read key file " + path.string());
        return KeyMaterial(std::move(bytes));
    }

    std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }
    std::size_t size() const noexcept { return bytes_.size(); }

private:
    std::vector<std::uint8_t> bytes_;
};

class Keystream {
public:
    constexpr Keystream(std::uint64_t state, DomainTag tag) noexcept : gen_(state), tag_(tag) {}

    std::uint64_t next_u64() noexcept { return gen_.next_u64(); }
    std::uint64_t state() const noexcept { return gen_.state(); }
    DomainTag tag() const noexcept { return tag_; }

private:
    SplitMix64 gen_;
    DomainTag tag_;
};

inline constexpr std::uint64_t kKeyFoldInit = 0x243F6A8885A308D3ull;

inline Keystream seed(const KeyMaterial& key, DomainTag tag) {
    std::uint64_t s = kKeyFoldInit ^ static_cast<std::uint64_t>(tag);
    for (std::uint8_t b : key.bytes()) s = mix64(s ^ b);
    return Keystream(s, tag);
}

template <typename G>
concept WordSource = requires(G g) {
    { g.next_u64() } -> std::convertible_to<std::uint64_t>;
};

/// Uniform integer in [0, n) by byte rejection sampling, 2 <= n <= 256.
/// Only the low byte of each word is used.
template <WordSource G>
unsigned next_below(G& gen, unsigned n) {
    if (n < 2 || n > 256) throw Error(ErrorCode::InvalidArgument, "next_below: n outside 2..256");
    const unsigned limit = 256 - (256 % n);
    for (;;) {
        const unsigned b = static_cast<unsigned>(gen.next_u64() & 0xFFu);
        if (b < limit) return b % n;
    }
}

/// out[i] = data[i] ^ key[i mod keylen]. Its own inverse.
inline std::vector<std::uint8_t> xor_randomize(std::span<const std::uint8_t> data,
                                               const KeyMaterial& key) {
    const auto k = key.bytes();
    std::vector<std::uint8_t> out(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        out[i] = static_cast<std::uint8_t>(data[i] ^ k[i % k.size()]);
    }
    return out;
}

/// Fisher-Yates shuffle of (0 1 2 3). `draw(n)` must return an index in [0, n);
/// it is called with n = 4, 3, 2 in that order.
template <typename Draw>
    requires std::invocable<Draw&, unsigned>
Perm4 fisher_yates_perm(Draw&& draw) {
    Perm4::Map p{0, 1, 2, 3};
    for (unsigned i = 3; i >= 1; --i) {
        const unsigned j = static_cast<unsigned>(draw(i + 1));
        std::swap(p[i], p[j]);
    }
    return Perm4::from_map(p);
}

inline Perm4 fisher_yates_perm(Keystream& ks) {
    return fisher_yates_perm([&ks](unsigned n) { return next_below(ks, n); });
}

inline constexpr std::size_t kPadSize = 56;

/// One pad index per block, drawn from the key's dispatch stream.
inline std::vector<std::uint8_t> build_dispatch(const KeyMaterial& key, std::size_t n_blocks,
                                                std::size_t pad_size = kPadSize) {
    if (pad_size < 2 || pad_size > 256) {
        throw Error(ErrorCode::InvalidArgument, "pad size outside 2..256");
    }
    Keystream ks = seed(key, DomainTag::Dispatch);
    std::vector<std::uint8_t> out;
    out.reserve(n_blocks);
    for (std::size_t i = 0; i < n_blocks; ++i) {
        out.push_back(static_cast<std::uint8_t>(next_below(ks, static_cast<unsigned>(pad_size))));
    }
    return out;
}

}  // namespace qpp
