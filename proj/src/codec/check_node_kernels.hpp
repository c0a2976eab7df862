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

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>

#include "edgeldpc/codec/check_node.hpp"
#include "edgeldpc/codec/llr.hpp"

namespace edgeldpc::codec::detail {

// Check-node kernels over W interleaved codewords ("lanes"). Every lane
// executes the same sequence of float operations, so a codeword decodes to
// the same bits whether it runs alone (W = 1) or inside a wider group. The
// exp/log below are plain polynomial code for that reason: they vectorise
// and give identical results in scalar and vector form.

inline constexpr std::size_t kGroupLanes = 16;

/// exp(x) for x in [-kLlrSat, 0]; about 2 ulp.
inline float exp_nonpositive(float x) {
    constexpr float kLog2e = 1.44269504088896341F;
    constexpr float kLn2Hi = 0.693359375F;
    constexpr float kLn2Lo = -2.12194440e-4F;
    constexpr float kRound = 12582912.0F;  // 1.5 * 2^23
    const float n = (x * kLog2e + kRound) - kRound;
    const float r = (x - n * kLn2Hi) - n * kLn2Lo;
    float p = 1.0F / 720.0F;
    p = p * r + 1.0F / 120.0F;
    p = p * r + 1.0F / 24.0F;
    p = p * r + 1.0F / 6.0F;
    p = p * r + 0.5F;
    p = p * r + 1.0F;
    p = p * r + 1.0F;
    const auto bits = static_cast<std::uint32_t>(static_cast<std::int32_t>(n) + 127) << 23;
    return p * std::bit_cast<float>(bits);
}

/// log(y) for finite y >= 1.
inline float log_ge_one(float y) {
    constexpr float kLn2 = 0.693147180559945309F;
    constexpr float kSqrt2 = 1.41421356237309505F;
    const auto bits = std::bit_cast<std::uint32_t>(y);
    float k = static_cast<float>(static_cast<std::int32_t>(bits >> 23) - 127);
    float m = std::bit_cast<float>((bits & 0x007FFFFFU) | 0x3F800000U);
    const bool high = m > kSqrt2;
    m = high ? m * 0.5F : m;
    k = high ? k + 1.0F : k;
    const float s = (m - 1.0F) / (m + 1.0F);
    const float s2 = s * s;
    float p = 1.0F / 9.0F;
    p = p * s2 + 1.0F / 7.0F;
    p = p * s2 + 1.0F / 5.0F;
    p = p * s2 + 1.0F / 3.0F;
    p = p * s2 + 1.0F;
    return k * kLn2 + 2.0F * s * p;
}

inline float magnitude_abs(float x) { return x < 0.0F ? -x : x; }

/// Sum-product update without tanh/atanh.
///
/// With e_i = exp(-|x_i|) we have |tanh(x_i/2)| = (1 - e_i) / (1 + e_i). For
/// a set S, write the even- and odd-degree elementary symmetric sums of
/// {e_i} as E_S and O_S; then prod(1 + e_i) = E_S + O_S and
/// prod(1 - e_i) = E_S - O_S, which gives
///   2 atanh(prod |tanh(x_i/2)|) = log(E_S / O_S).
/// E_S and O_S are sums of non-negative terms, so nothing cancels near
/// saturation, and an erased input (e_i = 1) yields E_S = O_S, i.e. zero.
/// Exclusive sets come from forward/backward partial sums.
template <std::size_t W>
inline void sum_product_lanes(const float (*in)[W], float (*out)[W], std::size_t d) {
    float e[kMaxCheckDegree][W];
    float fe[kMaxCheckDegree][W];
    float fo[kMaxCheckDegree][W];
    float neg_all[W];
    float even[W];
    float odd[W];
    for (std::size_t l = 0; l < W; ++l) {
        neg_all[l] = 0.0F;
        even[l] = 1.0F;
        odd[l] = 0.0F;
    }
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t l = 0; l < W; ++l) {
            const float x = in[k][l];
            e[k][l] = exp_nonpositive(-magnitude_abs(x));
            neg_all[l] = x < 0.0F ? 1.0F - neg_all[l] : neg_all[l];
            fe[k][l] = even[l];
            fo[k][l] = odd[l];
            const float ne = even[l] + odd[l] * e[k][l];
            odd[l] = odd[l] + even[l] * e[k][l];
            even[l] = ne;
        }
    }
    for (std::size_t l = 0; l < W; ++l) {
        even[l] = 1.0F;
        odd[l] = 0.0F;
    }
    for (std::size_t k = d; k-- > 0;) {
        for (std::size_t l = 0; l < W; ++l) {
            const float num = fe[k][l] * even[l] + fo[k][l] * odd[l];
            const float den = fe[k][l] * odd[l] + fo[k][l] * even[l];
            const float ratio = den > 0.0F ? num / den : 1.0e30F;
            float mag = log_ge_one(ratio < 1.0F ? 1.0F : ratio);
            mag = mag < kLlrSat ? mag : kLlrSat;
            const bool neg = (neg_all[l] != 0.0F) != (in[k][l] < 0.0F);
            out[k][l] = neg ? -mag : mag;
            const float ne = even[l] + odd[l] * e[k][l];
            odd[l] = odd[l] + even[l] * e[k][l];
            even[l] = ne;
        }
    }
}

template <std::size_t W>
inline void min_sum_lanes(const float (*in)[W], float (*out)[W], std::size_t d, float alpha) {
    float min1[W];
    float min2[W];
    float neg_all[W];
    for (std::size_t l = 0; l < W; ++l) {
        min1[l] = kLlrSat;
        min2[l] = kLlrSat;
        neg_all[l] = 0.0F;
    }
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t l = 0; l < W; ++l) {
            const float x = in[k][l];
            const float m = magnitude_abs(x);
            neg_all[l] = x < 0.0F ? 1.0F - neg_all[l] : neg_all[l];
            const float lo = m < min1[l] ? m : min1[l];
            const float hi = m < min1[l] ? min1[l] : m;
            min1[l] = lo;
            min2[l] = hi < min2[l] ? hi : min2[l];
        }
    }
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t l = 0; l < W; ++l) {
            const float m = magnitude_abs(in[k][l]);
            const float mag = alpha * (m == min1[l] ? min2[l] : min1[l]);
            const bool neg = (neg_all[l] != 0.0F) != (in[k][l] < 0.0F);
            out[k][l] = neg ? -mag : mag;
        }
    }
}

}  // namespace edgeldpc::codec::detail
