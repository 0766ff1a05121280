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

#include "qpp/superposition.hpp"

#include <complex>

#include "gtest/gtest.h"

using namespace qpp;
using C = std::complex<double>;

namespace {

Statevector4 half(C a, C b, C c, C d) {
    return Statevector4::from_amplitudes({0.5 * a, 0.5 * b, 0.5 * c, 0.5 * d});
}

const C i{0, 1};

}  // namespace

TEST(HHat, ColumnsOnBasisStates) {
    const auto h = build_h_hat();
    EXPECT_LT(h.unitarity_defect(), kExactTol);
    EXPECT_LT(max_abs_diff(apply(h, Statevector4::basis(0)), half(1, 1, 1, 1)), kExactTol);
    EXPECT_LT(max_abs_diff(apply(h, Statevector4::basis(1)), half(1, -1, -1, 1)), kExactTol);
    // The |00> amplitude is -1/2 by the matrix; the commonly quoted +1/2 is an erratum.
    EXPECT_LT(max_abs_diff(apply(h, Statevector4::basis(2)), half(-1, -i, i, 1)), kExactTol);
    EXPECT_LT(max_abs_diff(apply(h, Statevector4::basis(3)), half(-1, i, -i, 1)), kExactTol);
}

TEST(HHatDagger, InvertsHHat) {
    const auto h = build_h_hat();
    const auto hd = build_h_hat_dagger();
    EXPECT_LT(max_abs_diff(compose(hd, h), Unitary4::identity()), kExactTol);
    for (BasisIndex v = 0; v < 4; ++v) {
        EXPECT_EQ(collapse_expect_basis(apply(hd, apply(h, Statevector4::basis(v))), kExactTol), v);
    }
    EXPECT_LT(max_abs_diff(apply(hd, half(1, 1, 1, 1)), Statevector4::basis(0)), kExactTol);
}

TEST(HHatDagger, ObscuresCycledState) {
    const auto hd = build_h_hat_dagger();
    const auto out = apply(hd, half(1, 1, -1, -1));
    // Row-by-row oracle: row r of H^dagger is the conjugate of column r of H^.
    const auto h = build_h_hat();
    const std::array<C, 4> in{0.5, 0.5, -0.5, -0.5};
    for (std::size_t r = 0; r < 4; ++r) {
        C dot = 0;
        for (std::size_t k = 0; k < 4; ++k) dot += std::conj(h.rows()[k][r]) * in[k];
        EXPECT_LT(std::abs(out[r] - dot), kExactTol);
    }
    const std::array<C, 4> expected{0, 0, C(-2, 2) / 4.0, C(-2, -2) / 4.0};
    for (std::size_t r = 0; r < 4; ++r) EXPECT_LT(std::abs(out[r] - expected[r]), kExactTol);
}

TEST(HHTensor, HadamardPairProperties) {
    const auto hh = build_hh_tensor();
    EXPECT_LT(hh.unitarity_defect(), kExactTol);
    EXPECT_LT(max_abs_diff(apply(hh, Statevector4::basis(0)), half(1, 1, 1, 1)), kExactTol);
    EXPECT_LT(max_abs_diff(compose(hh, hh), Unitary4::identity()), kExactTol);
}

TEST(P1Diagonalization, DiagonalOfFourthRoots) {
    const auto d = verify_p1_diagonalization();
    C det = 1;
    for (std::size_t k = 0; k < 4; ++k) {
        EXPECT_LT(std::abs(std::pow(d(k, k), 4) - C(1)), kExactTol);
        det *= d(k, k);
        for (std::size_t c = 0; c < 4; ++c)
            if (c != k) EXPECT_LT(std::abs(d(k, c)), kExactTol);
    }
    EXPECT_LT(std::abs(std::abs(det) - 1.0), kExactTol);
}

TEST(P1Diagonalization, OtherCyclesAreNotDiagonalizedInThatOrder) {
    // H^ is tied to P1 specifically: the 4-cycle 0->1->2->3->0 does not become diagonal.
    const auto h = build_h_hat();
    const auto d = compose(dagger(h), compose(perm_to_unitary(Perm4::from_map({1, 2, 3, 0})), h));
    double off = 0;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            if (r != c) off = std::max(off, std::abs(d(r, c)));
    EXPECT_GT(off, 0.1);
}

TEST(SuperpositionSet, UniformProbabilitiesAndDistinctPhases) {
    const auto set = SuperpositionSetS::build();
    for (std::size_t a = 0; a < 4; ++a) {
        for (double p : probabilities(set.states[a])) EXPECT_NEAR(p, 0.25, kExactTol);
        for (std::size_t b = 0; b < 4; ++b) {
            EXPECT_EQ(phase_equivalent(set.states[a], set.states[b], kExactTol), a == b);
        }
        EXPECT_EQ(set.match(set.states[a].scaled(C(0, 1))), static_cast<int>(a));
    }
}

TEST(SuperpositionSet, SuperSuperpositionFixedByEveryPermutation) {
    const auto set = SuperpositionSetS::build();
    for (const auto& p : enumerate_s4()) {
        EXPECT_EQ(apply(perm_to_unitary(p), set.states[0]), set.states[0]) << p.to_string();
    }
}

TEST(SuperpositionSet, PhaseReassignmentDichotomy) {
    const auto set = SuperpositionSetS::build();
    const auto cycled = apply(perm_to_unitary(Perm4::from_map({1, 2, 3, 0})), set.states[1]);
    EXPECT_EQ(set.match(cycled), -1);
    const auto swapped = apply(perm_to_unitary(Perm4::from_map({2, 3, 0, 1})), set.states[1]);
    EXPECT_LT(max_abs_diff(swapped, set.states[1].scaled(-1.0)), kExactTol);
}
