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

// Byte-level randomness battery in the style of Walker's ENT: entropy,
// chi-square (255 degrees of freedom), arithmetic mean, Monte-Carlo pi from
// 24-bit coordinate pairs, and wraparound serial correlation.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "qpp/error.hpp"

namespace qpp::ent {

struct EntReport {
    double entropy = 0.0;      ///< bits per byte
    double chi_square = 0.0;
    double mean = 0.0;
    double mc_pi = 0.0;
    double serial_corr = 0.0;
    std::size_t n_bytes = 0;
};

inline constexpr std::size_t kMinBytes = 6;

inline EntReport analyze(std::span<const std::uint8_t> data) {
    const std::size_t n = data.size();
    if (n < kMinBytes) {
        throw Error(ErrorCode::InputTooShort,
                    "need at least 6 bytes, got " + std::to_string(n));
    }
    std::array<std::uint64_t, 256> counts{};
    for (auto b : data) ++counts[b];

    const double total = static_cast<double>(n);
    const double expected = total / 256.0;
    EntReport r;
    r.n_bytes = n;
    double sum = 0.0;
    for (std::size_t i = 0; i < 256; ++i) {
        const double c = static_cast<double>(counts[i]);
        if (counts[i] > 0) {
            const double p = c / total;
            r.entropy -= p * std::log2(p);
        }
        r.chi_square += (c - expected) * (c - expected) / expected;
        sum += c * static_cast<double>(i);
    }
    r.mean = sum / total;

    std::size_t inside = 0;
    const std::size_t points = n / 6;
    for (std::size_t g = 0; g < points; ++g) {
        const auto* p = data.data() + 6 * g;
        const double x = static_cast<double>((p[0] << 16) | (p[1] << 8) | p[2]) / 16777216.0;
        const double y = static_cast<double>((p[3] << 16) | (p[4] << 8) | p[5]) / 16777216.0;
        if (x * x + y * y < 1.0) ++inside;
    }
    r.mc_pi = 4.0 * static_cast<double>(inside) / static_cast<double>(points);

    // Integer accumulation keeps the serial-correlation numerator exact.
    std::uint64_t s1 = 0, s2 = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t x = data[i];
        s1 += x;
        s2 += x * x;
        sxy += x * data[(i + 1) % n];
    }
    const double num = total * static_cast<double>(sxy) - static_cast<double>(s1) * static_cast<double>(s1);
    const double den = total * static_cast<double>(s2) - static_cast<double>(s1) * static_cast<double>(s1);
    r.serial_corr = den == 0.0 ? 0.0 : std::clamp(num / den, -1.0, 1.0);
    return r;
}

/// The values a perfectly random stream would score.
inline EntReport optimal() {
    return {8.0, 256.0, 127.5, std::numbers::pi, 0.0, 0};
}

struct NamedReport {
    std::string name;
    EntReport report;
};

namespace detail {

inline std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

}  // namespace detail

/// Fixed-width table with statistics as rows, stages as columns, and an
/// "Optimal values" column first.
inline std::string report_table(const std::vector<NamedReport>& reports) {
    struct Row {
        const char* label;
        const char* spec;
        double EntReport::*field;
    };
    static constexpr Row rows[] = {
        {"Entropy", "%.6f", &EntReport::entropy},
        {"Chi-square", "%.2f", &EntReport::chi_square},
        {"Arithmetic Mean", "%.4f", &EntReport::mean},
        {"Monte-Carlo Pi", "%.9f", &EntReport::mc_pi},
        {"Serial Correlation Coefficient", "%.6f", &EntReport::serial_corr},
    };

    std::vector<NamedReport> cols;
    cols.push_back({"Optimal values", optimal()});
    cols.insert(cols.end(), reports.begin(), reports.end());

    std::vector<std::vector<std::string>> cells;
    cells.push_back({"Parameters"});
    for (const auto& c : cols) cells[0].push_back(c.name);
    for (const auto& row : rows) {
        std::vector<std::string> line{row.label};
        for (const auto& c : cols) line.push_back(detail::fmt(row.spec, c.report.*(row.field)));
        cells.push_back(std::move(line));
    }

    std::vector<std::size_t> width(cells[0].size(), 0);
    for (const auto& line : cells) {
        for (std::size_t k = 0; k < line.size(); ++k) width[k] = std::max(width[k], line[k].size());
    }
    std::string out;
    auto rule = [&] {
        std::size_t len = 0;
        for (auto w : width) len += w + 2;
        out += std::string(len - 2, '-') + "\n";
    };
    for (std::size_t l = 0; l < cells.size(); ++l) {
        if (l <= 1) rule();
        for (std::size_t k = 0; k < cells[l].size(); ++k) {
            const auto& s = cells[l][k];
            const std::string padding(width[k] - s.size(), ' ');
            out += k == 0 ? s + padding : padding + s;
            if (k + 1 < cells[l].size()) out += "  ";
        }
        out += "\n";
    }
    rule();
    return out;
}

/// One `name=value` line per statistic. Multiple reports are prefixed with
/// their stage name: `ciphertext.entropy=...`.
inline std::string report_kv(const std::vector<NamedReport>& reports) {
    std::string out;
    for (const auto& nr : reports) {
        const std::string prefix = reports.size() == 1 ? "" : nr.name + ".";
        const auto& r = nr.report;
        out += prefix + "n_bytes=" + std::to_string(r.n_bytes) + "\n";
        out += prefix + "entropy=" + detail::fmt("%.17g", r.entropy) + "\n";
        out += prefix + "chi_square=" + detail::fmt("%.17g", r.chi_square) + "\n";
        out += prefix + "mean=" + detail::fmt("%.17g", r.mean) + "\n";
        out += prefix + "mc_pi=" + detail::fmt("%.17g", r.mc_pi) + "\n";
        out += prefix + "serial_corr=" + detail::fmt("%.17g", r.serial_corr) + "\n";
    }
    return out;
}

}  // namespace qpp::ent
