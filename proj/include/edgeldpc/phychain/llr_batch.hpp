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
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "edgeldpc/codec/decoder.hpp"
#include "edgeldpc/common/sha256.hpp"
#include "edgeldpc/construction/code_config.hpp"
#include "edgeldpc/phychain/channel.hpp"
#include "edgeldpc/phychain/qam.hpp"

namespace edgeldpc::phychain {

/// Transmit-side view of one codeword: x = M(c) and y = x + w.
struct SymbolBlock {
    std::vector<Symbol> symbols;
    std::vector<Symbol> received;
};

/// The frozen decoder input L (N_cw x E) and the info bits it encodes.
struct LlrBatch {
    std::uint32_t n_cw = 0;
    std::uint32_t e = 0;
    std::uint32_t k_info = 0;
    std::vector<float> llrs;
    std::vector<std::uint8_t> truth_info;
    /// Hash of (CodeConfig, ChannelConfig, demapper); independent of N_cw.
    Digest fingerprint{};

    codec::SoftMatrixView view() const { return {llrs, n_cw, e}; }
    std::span<const std::uint8_t> truth_row(std::size_t i) const {
        return std::span(truth_info).subspan(i * k_info, k_info);
    }

    friend bool operator==(const LlrBatch&, const LlrBatch&) = default;
};

Digest batch_fingerprint(const construction::CodeConfig& code, const ChannelConfig& chan,
                         Demapper demapper);

/// SHA-256 over dims, fingerprint, LLR bytes and truth bits.
Digest content_hash(const LlrBatch& batch);

struct BuildOptions {
    Demapper demapper = Demapper::max_log;
    /// Generation threads; 0 means one per logical core. Output never depends on it.
    unsigned lanes = 1;
};

/// Runs b -> E -> rate match -> 16-QAM -> AWGN -> demap for N_cw codewords.
/// Codeword i draws its info bits and noise from counter streams keyed by
/// (seed, i), so batches with a common seed share their leading rows.
LlrBatch build_llr_batch(std::uint32_t n_cw, const construction::CodeInstance& code,
                         const ChannelConfig& chan, const BuildOptions& options = {});

/// Single-codeword chain with the intermediate symbols exposed.
SymbolBlock transmit_codeword(std::span<const std::uint8_t> rate_matched_bits,
                              const ChannelConfig& chan, std::uint64_t codeword);

/// Binary layout (little-endian): "LLRB", u16 version, 32-byte fingerprint,
/// u32 N_cw, u32 E, u32 K, N_cw*E f32 row-major, then the truth bits packed
/// MSB-first, 8 per byte, row-major.
void write_llr_batch(const std::filesystem::path& path, const LlrBatch& batch);
/// Throws IoError on a missing, truncated or foreign file.
LlrBatch read_llr_batch(const std::filesystem::path& path);

inline constexpr std::uint16_t kLlrFileVersion = 1;

}  // namespace edgeldpc::phychain
