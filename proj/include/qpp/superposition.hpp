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

// The superposition operator used by the cipher and its companions.
//
//          1 [ 1   1  -1  -1 ]
//   H^ =  -  [ 1  -1  -i   i ]
//          2 [ 1  -1   i  -i ]
//            [ 1   1   1   1 ]
//
// H^ diagonalizes the 4-cycle P1 = (0->2, 1->0, 2->3, 3->1):
// H^dagger P1 H^ = diag(1, -1, i, -i).
//
// Note on H^|10>: the column read-off is 1/2(-1, -i, i, 1). A frequently
// quoted expansion gives +1/2 for the |00> amplitude; the matrix is the
// definition used here and the sign of that expansion is an erratum.

#include <array>
#include <cmath>
#include <complex>

#include "qpp/error.hpp"
#include "qpp/pads.hpp"
#include "qpp/qstate.hpp"

namespace qpp {

inline Unitary4 build_h_hat() {
    constexpr double h = 0.5;
    const Amplitude p{h, 0.0}, n{-h, 0.0}, pi{0.0, h}, ni{0.0, -h};
    return Unitary4::from_rows({{
        {p, p, n, n},
        {p, n, ni, pi},
        {p, n, pi, ni},
        {p, p, p, p},
    }});
}

inline Unitary4 build_h_hat_dagger() { return dagger(build_h_hat()); }

/// Hadamard on each qubit. Provided for comparison; the cipher always uses H^.
inline Unitary4 build_hh_tensor() {
    constexpr double h = 0.5;
    const Amplitude p{h, 0.0}, n{-h, 0.0};
    return Unitary4::from_rows({{
        {p, p, p, p},
        {p, n, p, n},
        {p, p, n, n},
        {p, n, n, p},
    }});
}

/// The 4-cycle diagonalized by H^.
inline Perm4 p1_cycle() { return Perm4::from_map({2, 0, 3, 1}); }

/// D = H^dagger P1 H^. Throws DiagonalizationFailure unless D is diagonal
/// with entries (1, -1, i, -i) to 1e-12.
inline Unitary4 verify_p1_diagonalization() {
    const Unitary4 h = build_h_hat();
    const Unitary4 d = compose(dagger(h), compose(perm_to_unitary(p1_cycle()), h));
    const std::array<Amplitude, kDim> expected{Amplitude{1, 0}, Amplitude{-1, 0},
                                               Amplitude{0, 1}, Amplitude{0, -1}};
    for (std::size_t r = 0; r < kDim; ++r) {
        for (std::size_t c = 0; c < kDim; ++c) {
            const double dev = r == c ? std::abs(d(r, c) - expected[r]) : std::abs(d(r, c));
            if (dev > kExactTol) {
                throw Error(ErrorCode::DiagonalizationFailure,
                            "entry (" + std::to_string(r) + "," + std::to_string(c) +
                                ") off by " + std::to_string(dev));
            }
        }
    }
    return d;
}

/// The four states H^|v>; every encrypted-before-permutation state is one of them.
struct SuperpositionSetS {
    std::array<Statevector4, kDim> states;

    static SuperpositionSetS build() {
        const Unitary4 h = build_h_hat();
        return {{apply(h, Statevector4::basis(0)), apply(h, Statevector4::basis(1)),
                 apply(h, Statevector4::basis(2)), apply(h, Statevector4::basis(3))}};
    }

    /// Index of the member phase-equivalent to psi, or -1.
    int match(const Statevector4& psi, double tol = kExactTol) const {
        for (std::size_t v = 0; v < kDim; ++v) {
            if (phase_equivalent(psi, states[v], tol)) return static_cast<int>(v);
        }
        return -1;
    }
};

}  // namespace qpp
