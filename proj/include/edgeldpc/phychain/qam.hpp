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

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace edgeldpc::phychain {

using Symbol = std::complex<float>;

inline constexpr std::size_t kBitsPerSymbol = 4;

/// NR 16-QAM: bits (b0,b1,b2,b3) map to
///   ((1-2b0)(2-(1-2b2)) + j (1-2b1)(2-(1-2b3))) / sqrt(10).
/// Throws InputError unless bits.size() is a multiple of 4.
std::vector<Symbol> map_16qam(std::span<const std::uint8_t> bits);
void map_16qam_into(std::span<const std::uint8_t> bits, std::span<Symbol> out);

enum class Demapper { max_log, exact };

std::string to_string(Demapper d);
std::optional<Demapper> parse_demapper(std::string_view text);

/// Four LLRs per symbol, positive favouring bit 0.
///   max_log: (min_{s:b=1} |y-s|^2 - min_{s:b=0} |y-s|^2) / N0
///   exact:   log sum_{s:b=0} exp(-|y-s|^2/N0) - log sum_{s:b=1} exp(-|y-s|^2/N0)
/// Throws InputError unless n0 > 0.
std::vector<float> demap_16qam(std::span<const Symbol> received, double n0,
                               Demapper kind = Demapper::max_log);
void demap_16qam_into(std::span<const Symbol> received, double n0, Demapper kind,
                      std::span<float> out);

}  // namespace edgeldpc::phychain
