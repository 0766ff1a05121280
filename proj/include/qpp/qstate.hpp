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

// Two-qubit statevector and 4x4 unitary arithmetic.
//
// Basis index v encodes |b1 b0> as v = 2*b1 + b0. Operators are stored
// row-major and act on column vectors: (U psi)[r] = sum_c U[r][c] psi[c].

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>

#include "qpp/error.hpp"
#include "qpp/mixer.hpp"

namespace qpp {

using Amplitude = std::complex<double>;
using BasisIndex = unsigned;

inline constexpr std::size_t kDim = 4;

/// Tolerance for exact algebraic identities (a handful of 4x4 products).
inline constexpr double kExactTol = 1e-12;
/// Tolerance for accumulated pipelines and stored-state normalization.
inline constexpr double kPipelineTol = 1e-9;

/// |a|^2 evaluated as re*re + im*im so results do not depend on the
/// standard library's std::norm strategy.
constexpr double modulus_squared(const Amplitude& a) noexcept {
    return a.real() * a.real() + a.imag() * a.imag();
}

inline bool is_finite(const Amplitude& a) noexcept {
    return std::isfinite(a.real()) && std::isfinite(a.imag());
}

class Unitary4;

class Statevector4 {
public:
    using Amplitudes = std::array<Amplitude, kDim>;

    /// Throws NormViolation unless every amplitude is finite and the squared
    /// norm is within `tol` of one.
    static Statevector4 from_amplitudes(const Amplitudes& amps, double tol = kPipelineTol) {
        for (const auto& a : amps) {
            if (!is_finite(a)) {
                throw Error(ErrorCode::NormViolation, "non-finite amplitude");
            }
        }
        Statevector4 s(amps);
        if (std::abs(s.norm_squared() - 1.0) > tol) {
            throw Error(ErrorCode::NormViolation,
                        "squared norm " + std::to_string(s.norm_squared()) + " is not 1");
        }
        return s;
    }

    static Statevector4 basis(BasisIndex v) {
        if (v >= kDim) {
            throw Error(ErrorCode::InvalidArgument, "basis index out of range");
        }
        Amplitudes a{};
        a[v] = Amplitude{1.0, 0.0};
        return Statevector4(a);
    }

    const Amplitude& operator[](std::size_t v) const { return amps_[v]; }
    const Amplitudes& amplitudes() const noexcept { return amps_; }

    double norm_squared() const noexcept {
        double s = 0.0;
        for (const auto& a : amps_) s += modulus_squared(a);
        return s;
    }
    double norm() const noexcept { return std::sqrt(norm_squared()); }

    /// Multiply by a global phase. `phase` must have unit modulus.
    Statevector4 scaled(Amplitude phase) const {
        if (std::abs(std::abs(phase) - 1.0) > kExactTol) {
            throw Error(ErrorCode::InvalidArgument, "global phase must have unit modulus");
        }
        Amplitudes out;
        for (std::size_t v = 0; v < kDim; ++v) out[v] = phase * amps_[v];
        return Statevector4(out);
    }

    friend bool operator==(const Statevector4&, const Statevector4&) = default;

private:
    explicit Statevector4(const Amplitudes& amps) : amps_(amps) {}

    friend Statevector4 apply(const Unitary4& u, const Statevector4& psi);

    Amplitudes amps_;
};

class Unitary4 {
public:
    using Matrix = std::array<std::array<Amplitude, kDim>, kDim>;

    /// Throws NotUnitary unless entries are finite and U^dagger U = I to `tol`.
    static Unitary4 from_rows(const Matrix& m, double tol = kExactTol) {
        for (const auto& row : m) {
            for (const auto& a : row) {
                if (!is_finite(a)) throw Error(ErrorCode::NotUnitary, "non-finite entry");
            }
        }
        Unitary4 u(m);
        if (u.unitarity_defect() > tol) {
            throw Error(ErrorCode::NotUnitary,
                        "max |U^dagger U - I| = " + std::to_string(u.unitarity_defect()));
        }
        return u;
    }

    static Unitary4 identity() {
        Matrix m{};
        for (std::size_t k = 0; k < kDim; ++k) m[k][k] = Amplitude{1.0, 0.0};
        return Unitary4(m);
    }

    const Amplitude& operator()(std::size_t r, std::size_t c) const { return m_[r][c]; }
    const Matrix& rows() const noexcept { return m_; }

    /// Largest elementwise modulus of U^dagger U - I.
    double unitarity_defect() const noexcept {
        double worst = 0.0;
        for (std::size_t i = 0; i < kDim; ++i) {
            for (std::size_t j = 0; j < kDim; ++j) {
                Amplitude acc{0.0, 0.0};
                for (std::size_t k = 0; k < kDim; ++k) acc += std::conj(m_[k][i]) * m_[k][j];
                if (i == j) acc -= 1.0;
                worst = std::max(worst, std::abs(acc));
            }
        }
        return worst;
    }

    friend bool operator==(const Unitary4&, const Unitary4&) = default;

private:
    explicit Unitary4(const Matrix& m) : m_(m) {}

    friend Unitary4 dagger(const Unitary4& u);
    friend Unitary4 compose(const Unitary4& a, const Unitary4& b);

    Matrix m_;
};

inline Statevector4 apply(const Unitary4& u, const Statevector4& psi) {
    Statevector4::Amplitudes out;
    for (std::size_t r = 0; r < kDim; ++r) {
        Amplitude acc{0.0, 0.0};
        for (std::size_t c = 0; c < kDim; ++c) acc += u(r, c) * psi[c];
        out[r] = acc;
    }
    return Statevector4(out);
}

/// Conjugate transpose. Exact, so dagger(dagger(U)) == U bit for bit.
inline Unitary4 dagger(const Unitary4& u) {
    Unitary4::Matrix m;
    for (std::size_t r = 0; r < kDim; ++r) {
        for (std::size_t c = 0; c < kDim; ++c) m[r][c] = std::conj(u(c, r));
    }
    return Unitary4(m);
}

/// Matrix product a*b: b acts first.
inline Unitary4 compose(const Unitary4& a, const Unitary4& b) {
    Unitary4::Matrix m;
    for (std::size_t r = 0; r < kDim; ++r) {
        for (std::size_t c = 0; c < kDim; ++c) {
            Amplitude acc{0.0, 0.0};
            for (std::size_t k = 0; k < kDim; ++k) acc += a(r, k) * b(k, c);
            m[r][c] = acc;
        }
    }
    return Unitary4(m);
}

inline std::array<double, kDim> probabilities(const Statevector4& psi) noexcept {
    std::array<double, kDim> p;
    for (std::size_t v = 0; v < kDim; ++v) p[v] = modulus_squared(psi[v]);
    return p;
}

inline double max_abs_diff(const Statevector4& a, const Statevector4& b) noexcept {
    double worst = 0.0;
    for (std::size_t v = 0; v < kDim; ++v) worst = std::max(worst, std::abs(a[v] - b[v]));
    return worst;
}

inline double max_abs_diff(const Unitary4& a, const Unitary4& b) noexcept {
    double worst = 0.0;
    for (std::size_t r = 0; r < kDim; ++r) {
        for (std::size_t c = 0; c < kDim; ++c) worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
    }
    return worst;
}

/// Per-shot measurement randomness. Single owner; do not share across threads.
class ShotRng {
public:
    explicit constexpr ShotRng(std::uint64_t seed) noexcept : gen_(seed) {}

    /// Independent stream for one state of a batch: seeded at
    /// mix64(global_seed ^ index) so batches can be sampled in any order.
    static constexpr ShotRng for_state(std::uint64_t global_seed, std::uint64_t index) noexcept {
        return ShotRng(mix64(global_seed ^ index));
    }

    constexpr double next_unit() noexcept { return gen_.next_unit(); }
    constexpr std::uint64_t state() const noexcept { return gen_.state(); }

private:
    SplitMix64 gen_;
};

/// One Born-rule shot. Consumes exactly one word from `rng`.
inline BasisIndex measure_shot(const Statevector4& psi, ShotRng& rng) noexcept {
    const double u = rng.next_unit();
    const auto p = probabilities(psi);
    double acc = 0.0;
    for (BasisIndex v = 0; v < kDim; ++v) {
        acc += p[v];
        if (u < acc) return v;
    }
    // Rounding left the cumulative sum just under u: take the last reachable outcome.
    BasisIndex last = 0;
    for (BasisIndex v = 0; v < kDim; ++v) {
        if (p[v] > 0.0) last = v;
    }
    return last;
}

/// Outcome of measuring a state that should be (numerically) a basis state.
/// Throws NotBasisState when the dominant probability is below 1 - tol.
inline BasisIndex collapse_expect_basis(const Statevector4& psi, double tol) {
    const auto p = probabilities(psi);
    BasisIndex best = 0;
    for (BasisIndex v = 1; v < kDim; ++v) {
        if (p[v] > p[best]) best = v;
    }
    if (p[best] < 1.0 - tol) {
        throw Error(ErrorCode::NotBasisState,
                    "max outcome probability " + std::to_string(p[best]));
    }
    return best;
}

/// True iff psi = e^{i theta} phi within `tol` per amplitude. The phase is
/// read from the first amplitude of phi with modulus above `tol`.
inline bool phase_equivalent(const Statevector4& psi, const Statevector4& phi, double tol) {
    std::size_t pivot = kDim;
    for (std::size_t v = 0; v < kDim; ++v) {
        if (std::abs(phi[v]) > tol) {
            pivot = v;
            break;
        }
    }
    if (pivot == kDim) return false;
    Amplitude phase = psi[pivot] / phi[pivot];
    const double mag = std::abs(phase);
    if (mag == 0.0) return false;
    phase /= mag;
    for (std::size_t v = 0; v < kDim; ++v) {
        if (std::abs(psi[v] - phase * phi[v]) > tol) return false;
    }
    return true;
}

}  // namespace qpp
