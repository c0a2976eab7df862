/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 The edgeldpc Authors. All rights reserved.
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "edgeldpc/phychain/qam.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "edgeldpc/common/error.hpp"

namespace edgeldpc::phychain {

namespace {

const double kInvSqrt10 = 1.0 / std::sqrt(10.0);

/// One axis of the constellation: amplitude for (sign bit, amplitude bit).
constexpr double axis_level(unsigned sign_bit, unsigned amp_bit) {
    return (1.0 - 2.0 * sign_bit) * (2.0 - (1.0 - 2.0 * amp_bit));
}

struct AxisLlr {
    double sign;
    double amp;
};

double log_sum_exp(double a, double b) {
    const double m = std::max(a, b);
    return m + std::log(std::exp(a - m) + std::exp(b - m));
}

/// The I/Q axes are independent, so every bit LLR reduces to a
/// four-point problem on its own axis.
AxisLlr demap_axis(double y, double n0, Demapper kind) {
    double metric[2][2];  // [sign][amp] = -|y - s|^2 / n0
    for (unsigned s = 0; s < 2; ++s) {
        for (unsigned a = 0; a < 2; ++a) {
            const double d = y - axis_level(s, a) * kInvSqrt10;
            metric[s][a] = -(d * d) / n0;
        }
    }
    if (kind == Demapper::max_log) {
        return {std::max(metric[0][0], metric[0][1]) - std::max(metric[1][0], metric[1][1]),
                std::max(metric[0][0], metric[1][0]) - std::max(metric[0][1], metric[1][1])};
    }
    return {log_sum_exp(metric[0][0], metric[0][1]) - log_sum_exp(metric[1][0], metric[1][1]),
            log_sum_exp(metric[0][0], metric[1][0]) - log_sum_exp(metric[0][1], metric[1][1])};
}

}  // namespace

std::vector<Symbol> map_16qam(std::span<const std::uint8_t> bits) {
    std::vector<Symbol> out(bits.size() / kBitsPerSymbol);
    map_16qam_into(bits, out);
    return out;
}

void map_16qam_into(std::span<const std::uint8_t> bits, std::span<Symbol> out) {
    if (bits.size() % kBitsPerSymbol != 0) {
        throw InputError("map_16qam: bit count " + std::to_string(bits.size()) +
                         " is not a multiple of 4");
    }
    if (out.size() != bits.size() / kBitsPerSymbol) {
        throw InputError("map_16qam: output must hold " +
                         std::to_string(bits.size() / kBitsPerSymbol) + " symbols");
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
        const auto* b = bits.data() + i * kBitsPerSymbol;
        out[i] = Symbol(static_cast<float>(axis_level(b[0] & 1U, b[2] & 1U) * kInvSqrt10),
                        static_cast<float>(axis_level(b[1] & 1U, b[3] & 1U) * kInvSqrt10));
    }
}

std::string to_string(Demapper d) { return d == Demapper::max_log ? "max_log" : "exact"; }

std::optional<Demapper> parse_demapper(std::string_view text) {
    if (text == "max_log" || text == "maxlog") {
        return Demapper::max_log;
    }
    if (text == "exact" || text == "app") {
        return Demapper::exact;
    }
    return std::nullopt;
}

std::vector<float> demap_16qam(std::span<const Symbol> received, double n0, Demapper kind) {
    std::vector<float> out(received.size() * kBitsPerSymbol);
    demap_16qam_into(received, n0, kind, out);
    return out;
}

void demap_16qam_into(std::span<const Symbol> received, double n0, Demapper kind,
                      std::span<float> out) {
    if (!(n0 > 0.0) || !std::isfinite(n0)) {
        throw InputError("demap_16qam: N0 must be positive and finite");
    }
    if (out.size() != received.size() * kBitsPerSymbol) {
        throw InputError("demap_16qam: output must hold 4 LLRs per symbol");
    }
    for (std::size_t i = 0; i < received.size(); ++i) {
        const auto re = demap_axis(received[i].real(), n0, kind);
        const auto im = demap_axis(received[i].imag(), n0, kind);
        float* o = out.data() + i * kBitsPerSymbol;
        o[0] = static_cast<float>(re.sign);
        o[1] = static_cast<float>(im.sign);
        o[2] = static_cast<float>(re.amp);
        o[3] = static_cast<float>(im.amp);
    }
}

}  // namespace edgeldpc::phychain
