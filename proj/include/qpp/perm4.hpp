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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "qpp/error.hpp"

namespace qpp {

/// An element of S4. map()[v] is the image of basis index v.
class Perm4 {
public:
    using Map = std::array<std::uint8_t, 4>;

    constexpr Perm4() noexcept : map_{0, 1, 2, 3} {}

    /// Throws InvalidArgument unless `m` is a bijection on {0,1,2,3}.
    static Perm4 from_map(const Map& m) {
        unsigned seen = 0;
        for (auto x : m) {
            if (x > 3 || (seen & (1u << x))) {
                throw Error(ErrorCode::InvalidArgument, "not a permutation of {0,1,2,3}");
            }
            seen |= 1u << x;
        }
        Perm4 p;
        p.map_ = m;
        return p;
    }

    static constexpr Perm4 identity() noexcept { return Perm4(); }

    constexpr std::uint8_t operator()(std::size_t v) const { return map_[v]; }
    constexpr const Map& map() const noexcept { return map_; }

    constexpr bool is_identity() const noexcept { return map_ == Map{0, 1, 2, 3}; }

    /// Function composition: (p * q)(v) = p(q(v)).
    friend constexpr Perm4 operator*(const Perm4& p, const Perm4& q) noexcept {
        Perm4 r;
        for (std::size_t v = 0; v < 4; ++v) r.map_[v] = p.map_[q.map_[v]];
        return r;
    }

    friend constexpr bool operator==(const Perm4&, const Perm4&) = default;
    friend constexpr auto operator<=>(const Perm4&, const Perm4&) = default;

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t v = 0; v < 4; ++v) {
            if (v) s += ' ';
            s += static_cast<char>('0' + map_[v]);
        }
        return s + ")";
    }

private:
    Map map_;
};

/// Inverse permutation: invert(p)(p(v)) == v.
inline Perm4 invert(const Perm4& p) {
    Perm4::Map m{};
    for (std::uint8_t v = 0; v < 4; ++v) m[p(v)] = v;
    return Perm4::from_map(m);
}

}  // namespace qpp
