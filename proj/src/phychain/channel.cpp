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

#include "edgeldpc/phychain/channel.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "edgeldpc/common/error.hpp"
#include "edgeldpc/phychain/philox.hpp"

namespace edgeldpc::phychain {

ChannelConfig ChannelConfig::from_db(double es_over_n0_db, std::uint64_t seed, bool noiseless) {
    ChannelConfig c;
    c.es_over_n0_db = es_over_n0_db;
    c.n0 = std::pow(10.0, -es_over_n0_db / 10.0);
    c.seed = seed;
    c.noiseless = noiseless;
    c.validate();
    return c;
}

void ChannelConfig::validate() const {
    if (!(n0 > 0.0) || !std::isfinite(n0)) {
        throw InputError("channel: N0 must be positive and finite");
    }
}

std::string ChannelConfig::describe() const {
    char buf[160];
    std::snprintf(buf, sizeof buf, "esn0_db=%.17g n0=%.17g seed=%llu noiseless=%d", es_over_n0_db,
                  n0, static_cast<unsigned long long>(seed), noiseless ? 1 : 0);
    return buf;
}

std::vector<Symbol> awgn(std::span<const Symbol> symbols, const ChannelConfig& cfg,
                         std::uint64_t codeword) {
    std::vector<Symbol> out(symbols.size());
    awgn_into(symbols, cfg, codeword, out);
    return out;
}

void awgn_into(std::span<const Symbol> symbols, const ChannelConfig& cfg, std::uint64_t codeword,
               std::span<Symbol> out) {
    cfg.validate();
    if (out.size() != symbols.size()) {
        throw InputError("awgn: output size must match input size");
    }
    if (cfg.noiseless) {
        std::copy(symbols.begin(), symbols.end(), out.begin());
        return;
    }
    const Philox4x32 gen(cfg.seed);
    const double sigma = std::sqrt(cfg.n0 / 2.0);
    const auto cw_lo = static_cast<std::uint32_t>(codeword);
    const auto cw_hi = static_cast<std::uint32_t>(codeword >> 32);
    for (std::size_t j = 0; j < symbols.size(); ++j) {
        const auto r = gen({static_cast<std::uint32_t>(j), cw_lo, cw_hi,
                            static_cast<std::uint32_t>(Stream::noise)});
        // Box-Muller on two of the four words.
        const double radius = sigma * std::sqrt(-2.0 * std::log(to_unit_open0(r[0])));
        const double angle = 2.0 * std::numbers::pi * (r[1] * 0x1.0p-32);
        out[j] = Symbol(static_cast<float>(symbols[j].real() + radius * std::cos(angle)),
                        static_cast<float>(symbols[j].imag() + radius * std::sin(angle)));
    }
}

}  // namespace edgeldpc::phychain
