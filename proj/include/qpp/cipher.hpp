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

// End-to-end Quantum Permutation Pad pipelines.
//
// Superposition mode, per 2-bit block v of the XOR-randomized plaintext:
//   encrypt:  |c> = P_d H^ |v>           (d = dispatch index of the block)
//   decrypt:  v   = measure(H^dagger P_d^dagger |c>)
// Basis mode drops H^ and maps the block classically: c = P_d(v).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qpp/error.hpp"
#include "qpp/keyschedule.hpp"
#include "qpp/pads.hpp"
#include "qpp/qstate.hpp"
#include "qpp/superposition.hpp"

namespace qpp {

/// Splits bytes into 2-bit blocks, most significant pair first.
inline std::vector<std::uint8_t> bytes_to_blocks(std::span<const std::uint8_t> data) {
    std::vector<std::uint8_t> out;
    out.reserve(data.size() * 4);
    for (std::uint8_t b : data) {
        for (int shift = 6; shift >= 0; shift -= 2) {
            out.push_back(static_cast<std::uint8_t>((b >> shift) & 0x3u));
        }
    }
    return out;
}

inline std::vector<std::uint8_t> blocks_to_bytes(std::span<const std::uint8_t> blocks) {
    if (blocks.size() % 4 != 0) {
        throw Error(ErrorCode::BadBlockCount,
                    std::to_string(blocks.size()) + " blocks is not a whole number of bytes");
    }
    std::vector<std::uint8_t> out;
    out.reserve(blocks.size() / 4);
    for (std::size_t i = 0; i < blocks.size(); i += 4) {
        std::uint8_t b = 0;
        for (std::size_t k = 0; k < 4; ++k) {
            if (blocks[i + k] > 3) throw Error(ErrorCode::InvalidArgument, "block value above 3");
            b = static_cast<std::uint8_t>((b << 2) | blocks[i + k]);
        }
        out.push_back(b);
    }
    return out;
}

/// Ciphertext states in block order. This is what crosses the (simulated)
/// quantum channel.
struct CipherStates {
    std::vector<Statevector4> states;
    /// Trailing padding bits of a final partial byte. Always 0 for byte input.
    std::uint8_t pad_bits = 0;

    std::size_t block_count() const noexcept { return states.size(); }

    friend bool operator==(const CipherStates&, const CipherStates&) = default;
};

/// Everything derived from the key before block processing starts.
struct EncryptionContext {
    KeyMaterial key;
    PermutationPad pad;
    std::vector<std::uint8_t> dispatch;

    static EncryptionContext derive(const KeyMaterial& key, std::size_t block_count) {
        return {key, build_pad(key), build_dispatch(key, block_count, kPadSize)};
    }

    void check_block_count(std::size_t block_count) const {
        if (dispatch.size() != block_count) {
            throw Error(ErrorCode::BadBlockCount,
                        "dispatch covers " + std::to_string(dispatch.size()) + " blocks, input has " +
                            std::to_string(block_count));
        }
        for (auto d : dispatch) {
            if (d >= pad.size()) throw Error(ErrorCode::InvalidArgument, "dispatch index past pad");
        }
    }
};

namespace detail {

inline const Unitary4& h_hat() {
    static const Unitary4 h = build_h_hat();
    return h;
}

inline const Unitary4& h_hat_dagger() {
    static const Unitary4 h = build_h_hat_dagger();
    return h;
}

}  // namespace detail

/// H^|v> for each block: the pre-permutation superposition states.
inline std::vector<Statevector4> superpose_blocks(std::span<const std::uint8_t> blocks) {
    std::vector<Statevector4> out;
    out.reserve(blocks.size());
    for (auto v : blocks) out.push_back(apply(detail::h_hat(), Statevector4::basis(v)));
    return out;
}

inline CipherStates encrypt(const EncryptionContext& ctx, std::span<const std::uint8_t> plaintext) {
    const auto blocks = bytes_to_blocks(xor_randomize(plaintext, ctx.key));
    ctx.check_block_count(blocks.size());
    CipherStates cs;
    cs.states.reserve(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const auto superposed = apply(detail::h_hat(), Statevector4::basis(blocks[i]));
        cs.states.push_back(apply(ctx.pad.unitary(ctx.dispatch[i]), superposed));
    }
    return cs;
}

inline CipherStates encrypt(const KeyMaterial& key, std::span<const std::uint8_t> plaintext) {
    return encrypt(EncryptionContext::derive(key, plaintext.size() * 4), plaintext);
}

/// Throws NotBasisState when a state does not return to a basis state, which
/// is what a wrong key or corrupted channel usually produces. It is not a MAC.
inline std::vector<std::uint8_t> decrypt(const EncryptionContext& ctx, const CipherStates& cs) {
    if (cs.pad_bits != 0) throw Error(ErrorCode::BadBlockCount, "partial trailing byte");
    ctx.check_block_count(cs.block_count());
    std::vector<std::uint8_t> blocks;
    blocks.reserve(cs.block_count());
    for (std::size_t i = 0; i < cs.block_count(); ++i) {
        const auto unpermuted = apply(ctx.pad.inverse_unitary(ctx.dispatch[i]), cs.states[i]);
        const auto basis = apply(detail::h_hat_dagger(), unpermuted);
        blocks.push_back(static_cast<std::uint8_t>(collapse_expect_basis(basis, kPipelineTol)));
    }
    return xor_randomize(blocks_to_bytes(blocks), ctx.key);
}

inline std::vector<std::uint8_t> decrypt(const KeyMaterial& key, const CipherStates& cs) {
    if (cs.block_count() % 4 != 0) {
        throw Error(ErrorCode::BadBlockCount, "block count not a multiple of 4");
    }
    return decrypt(EncryptionContext::derive(key, cs.block_count()), cs);
}

inline std::vector<std::uint8_t> encrypt_basis(const EncryptionContext& ctx,
                                               std::span<const std::uint8_t> plaintext) {
    auto blocks = bytes_to_blocks(xor_randomize(plaintext, ctx.key));
    ctx.check_block_count(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        blocks[i] = ctx.pad.ops()[ctx.dispatch[i]](blocks[i]);
    }
    return blocks_to_bytes(blocks);
}

inline std::vector<std::uint8_t> encrypt_basis(const KeyMaterial& key,
                                               std::span<const std::uint8_t> plaintext) {
    return encrypt_basis(EncryptionContext::derive(key, plaintext.size() * 4), plaintext);
}

inline std::vector<std::uint8_t> decrypt_basis(const EncryptionContext& ctx,
                                               std::span<const std::uint8_t> ciphertext) {
    auto blocks = bytes_to_blocks(ciphertext);
    ctx.check_block_count(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        blocks[i] = ctx.pad.inverse_ops()[ctx.dispatch[i]](blocks[i]);
    }
    return xor_randomize(blocks_to_bytes(blocks), ctx.key);
}

inline std::vector<std::uint8_t> decrypt_basis(const KeyMaterial& key,
                                               std::span<const std::uint8_t> ciphertext) {
    return decrypt_basis(EncryptionContext::derive(key, ciphertext.size() * 4), ciphertext);
}

/// What an adversary holding H^ (but not the pad) gets: H^dagger applied to
/// every ciphertext state.
inline CipherStates adversary_view(const CipherStates& cs) {
    CipherStates out;
    out.pad_bits = cs.pad_bits;
    out.states.reserve(cs.block_count());
    for (const auto& s : cs.states) out.states.push_back(apply(detail::h_hat_dagger(), s));
    return out;
}

}  // namespace qpp
