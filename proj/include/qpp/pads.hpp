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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "qpp/keyschedule.hpp"
#include "qpp/perm4.hpp"
#include "qpp/qstate.hpp"

namespace qpp {

/// Permutation matrix with M[r][c] = 1 iff r == p(c), so M|c> = |p(c)>.
inline Unitary4 perm_to_unitary(const Perm4& p) {
    Unitary4::Matrix m{};
    for (std::size_t c = 0; c < kDim; ++c) m[p(c)][c] = Amplitude{1.0, 0.0};
    return Unitary4::from_rows(m);
}

/// All 24 elements of S4 in lexicographic order of their maps.
inline std::vector<Perm4> enumerate_s4() {
    Perm4::Map m{0, 1, 2, 3};
    std::vector<Perm4> out;
    out.reserve(24);
    do {
        out.push_back(Perm4::from_map(m));
    } while (std::next_permutation(m.begin(), m.end()));
    return out;
}

/// The key-derived Permutation Pad and its elementwise inverses, with their
/// unitaries cached for the cipher's hot loop.
class PermutationPad {
public:
    /// Builds a pad directly from permutations. Used for test hooks.
    explicit PermutationPad(std::vector<Perm4> ops) : ops_(std::move(ops)) {
        if (ops_.empty()) throw Error(ErrorCode::InvalidArgument, "empty permutation pad");
        inverse_ops_.reserve(ops_.size());
        for (const auto& p : ops_) {
            inverse_ops_.push_back(invert(p));
            unitaries_.push_back(perm_to_unitary(p));
            inverse_unitaries_.push_back(perm_to_unitary(inverse_ops_.back()));
        }
    }

    std::size_t size() const noexcept { return ops_.size(); }
    const std::vector<Perm4>& ops() const noexcept { return ops_; }
    const std::vector<Perm4>& inverse_ops() const noexcept { return inverse_ops_; }
    const Unitary4& unitary(std::size_t i) const { return unitaries_.at(i); }
    const Unitary4& inverse_unitary(std::size_t i) const { return inverse_unitaries_.at(i); }

    /// log2 of the number of distinct pads: size * log2(4!).
    double entropy_bits() const noexcept {
        return static_cast<double>(ops_.size()) * std::log2(24.0);
    }

    /// FNV-1a 64 over the concatenated maps, for key-agreement sanity checks.
    std::uint64_t fingerprint() const noexcept {
        std::uint64_t h = 0xCBF29CE484222325ull;
        for (const auto& p : ops_) {
            for (auto x : p.map()) {
                h ^= x;
                h *= 0x100000001B3ull;
            }
        }
        return h;
    }

private:
    std::vector<Perm4> ops_;
    std::vector<Perm4> inverse_ops_;
    std::vector<Unitary4> unitaries_;
    std::vector<Unitary4> inverse_unitaries_;
};

/// 56 successive Fisher-Yates draws from the key's pad stream. Repeats are allowed.
inline PermutationPad build_pad(const KeyMaterial& key) {
    Keystream ks = seed(key, DomainTag::Pad);
    std::vector<Perm4> ops;
    ops.reserve(kPadSize);
    for (std::size_t i = 0; i < kPadSize; ++i) ops.push_back(fisher_yates_perm(ks));
    return PermutationPad(std::move(ops));
}

}  // namespace qpp
