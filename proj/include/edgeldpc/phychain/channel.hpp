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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "edgeldpc/phychain/qam.hpp"

namespace edgeldpc::phychain {

/// AWGN operating point with unit average symbol energy.
struct ChannelConfig {
    double es_over_n0_db = 10.0;
    double n0 = 0.1;
    std::uint64_t seed = 1;
    /// Skips the noise draw entirely; the demapper still uses n0.
    bool noiseless = false;

    /// n0 = 10^(-es_over_n0_db / 10).
    static ChannelConfig from_db(double es_over_n0_db, std::uint64_t seed, bool noiseless = false);

    /// Throws InputError unless n0 > 0.
    void validate() const;
    std::string describe() const;
};

/// Counter-stream tags separating the independent draws of one codeword.
enum class Stream : std::uint32_t { info_bits = 0, noise = 1 };

/// y = x + w with w ~ CN(0, n0): per-component variance n0/2. Each symbol's
/// draw is keyed by (seed, codeword, symbol index), so the result does not
/// depend on generation order or thread count.
std::vector<Symbol> awgn(std::span<const Symbol> symbols, const ChannelConfig& cfg,
                         std::uint64_t codeword = 0);
void awgn_into(std::span<const Symbol> symbols, const ChannelConfig& cfg, std::uint64_t codeword,
               std::span<Symbol> out);

}  // namespace edgeldpc::phychain
