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
#include <vector>

#include "edgeldpc/construction/code_config.hpp"
#include "edgeldpc/construction/parity_check.hpp"

namespace edgeldpc::codec {

/// Lifted codeword before rate matching: cols*Z bits, one 0/1 byte per bit.
/// Positions [0, K) carry information, [K, K_lifted) are zero fillers.
struct Codeword {
    std::vector<std::uint8_t> bits;
};

/// Systematic encoder for double-diagonal QC-LDPC codes.
///
/// The first min(4, rows) base rows form the core: their parity columns are
/// solved jointly through a precomputed GF(2) inverse. Every later base row
/// owns exactly one degree-1 extension parity column and is back-substituted.
class Encoder {
public:
    /// Throws ConstructionError when H lacks the double-diagonal layout or
    /// its core is singular.
    Encoder(const construction::ParityCheckMatrix& h, std::uint32_t info_cols, std::uint32_t z,
            std::uint32_t k_info);
    explicit Encoder(const construction::CodeInstance& code);

    std::uint32_t k_info() const { return k_info_; }
    std::uint32_t k_lifted() const { return k_lifted_; }
    std::size_t length() const { return n_; }

    Codeword encode(std::span<const std::uint8_t> info) const;
    /// Allocation-free variant; `out` must hold length() bytes.
    void encode_into(std::span<const std::uint8_t> info, std::span<std::uint8_t> out) const;

private:
    const construction::ParityCheckMatrix* h_;
    std::uint32_t k_info_;
    std::uint32_t k_lifted_;
    std::size_t n_;
    std::size_t core_bits_;
    std::size_t words_per_row_;
    std::vector<std::uint64_t> core_inverse_;       // core_bits_ rows, bit-packed
    std::vector<std::uint32_t> extension_column_;   // per lifted row past the core
};

}  // namespace edgeldpc::codec
