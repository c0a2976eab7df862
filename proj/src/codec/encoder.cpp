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

#include "edgeldpc/codec/encoder.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "edgeldpc/common/error.hpp"

namespace edgeldpc::codec {

namespace {

/// In-place Gauss-Jordan inversion of a dense square GF(2) matrix stored as
/// bit-packed rows. Returns false if singular.
bool invert_gf2(std::vector<std::uint64_t>& a, std::size_t n, std::size_t words,
                std::vector<std::uint64_t>& inv) {
    inv.assign(n * words, 0);
    for (std::size_t i = 0; i < n; ++i) {
        inv[i * words + i / 64] |= std::uint64_t{1} << (i % 64);
    }
    auto bit = [&](const std::vector<std::uint64_t>& m, std::size_t r, std::size_t c) {
        return (m[r * words + c / 64] >> (c % 64)) & 1U;
    };
    auto xor_row = [&](std::vector<std::uint64_t>& m, std::size_t dst, std::size_t src) {
        for (std::size_t w = 0; w < words; ++w) {
            m[dst * words + w] ^= m[src * words + w];
        }
    };
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && bit(a, pivot, col) == 0) {
            ++pivot;
        }
        if (pivot == n) {
            return false;
        }
        if (pivot != col) {
            std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(pivot * words),
                             a.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * words),
                             a.begin() + static_cast<std::ptrdiff_t>(col * words));
            std::swap_ranges(inv.begin() + static_cast<std::ptrdiff_t>(pivot * words),
                             inv.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * words),
                             inv.begin() + static_cast<std::ptrdiff_t>(col * words));
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r != col && bit(a, r, col) != 0) {
                xor_row(a, r, col);
                xor_row(inv, r, col);
            }
        }
    }
    return true;
}

}  // namespace

Encoder::Encoder(const construction::ParityCheckMatrix& h, std::uint32_t info_cols,
                 std::uint32_t z, std::uint32_t k_info)
    : h_(&h), k_info_(k_info), k_lifted_(info_cols * z), n_(h.cols()) {
    if (z == 0 || h.rows() % z != 0 || h.cols() % z != 0) {
        throw ConstructionError("encoder: H dimensions are not multiples of Z");
    }
    const std::size_t base_rows = h.rows() / z;
    if (h.cols() / z != info_cols + base_rows) {
        throw ConstructionError("encoder: expected cols = info_cols + rows in the base graph");
    }
    if (k_info > k_lifted_) {
        throw ConstructionError("encoder: K exceeds info_cols * Z");
    }
    core_bits_ = std::min<std::size_t>(4, base_rows) * z;
    words_per_row_ = (core_bits_ + 63) / 64;
    const std::size_t ext_begin = k_lifted_ + core_bits_;

    std::vector<std::uint64_t> core(core_bits_ * words_per_row_, 0);
    for (std::size_t r = 0; r < core_bits_; ++r) {
        for (auto c : h.row(r)) {
            if (c >= ext_begin) {
                throw ConstructionError("encoder: core row " + std::to_string(r) +
                                        " touches an extension parity column");
            }
            if (c >= k_lifted_) {
                const auto j = c - k_lifted_;
                core[r * words_per_row_ + j / 64] ^= std::uint64_t{1} << (j % 64);
            }
        }
    }
    if (!invert_gf2(core, core_bits_, words_per_row_, core_inverse_)) {
        throw ConstructionError("encoder: parity core is singular");
    }

    std::vector<std::uint8_t> owned(n_ - ext_begin, 0);
    extension_column_.reserve(h.rows() - core_bits_);
    for (std::size_t r = core_bits_; r < h.rows(); ++r) {
        std::size_t hits = 0;
        std::uint32_t col = 0;
        for (auto c : h.row(r)) {
            if (c >= ext_begin) {
                ++hits;
                col = c;
            }
        }
        if (hits != 1 || owned[col - ext_begin]++ != 0) {
            throw ConstructionError("encoder: extension row " + std::to_string(r) +
                                    " does not own a single degree-1 parity column");
        }
        extension_column_.push_back(col);
    }
}

Encoder::Encoder(const construction::CodeInstance& code)
    : Encoder(code.h, code.config.info_cols, code.config.z(), code.config.k_info) {}

Codeword Encoder::encode(std::span<const std::uint8_t> info) const {
    Codeword cw;
    cw.bits.resize(n_);
    encode_into(info, cw.bits);
    return cw;
}

void Encoder::encode_into(std::span<const std::uint8_t> info, std::span<std::uint8_t> out) const {
    if (info.size() != k_info_) {
        throw InputError("encode: expected " + std::to_string(k_info_) + " info bits, got " +
                         std::to_string(info.size()));
    }
    if (out.size() != n_) {
        throw InputError("encode: output must hold " + std::to_string(n_) + " bits");
    }
    std::fill(out.begin(), out.end(), std::uint8_t{0});
    for (std::size_t i = 0; i < k_info_; ++i) {
        out[i] = info[i] & 1U;
    }

    // Syndrome of the systematic part over the core rows.
    std::vector<std::uint64_t> syndrome(words_per_row_, 0);
    for (std::size_t r = 0; r < core_bits_; ++r) {
        std::uint8_t s = 0;
        for (auto c : h_->row(r)) {
            if (c < k_lifted_) {
                s ^= out[c];
            }
        }
        syndrome[r / 64] |= std::uint64_t{s} << (r % 64);
    }
    for (std::size_t j = 0; j < core_bits_; ++j) {
        const auto* row = core_inverse_.data() + j * words_per_row_;
        unsigned parity = 0;
        for (std::size_t w = 0; w < words_per_row_; ++w) {
            parity += static_cast<unsigned>(std::popcount(row[w] & syndrome[w]));
        }
        out[k_lifted_ + j] = static_cast<std::uint8_t>(parity & 1U);
    }

    for (std::size_t r = core_bits_; r < h_->rows(); ++r) {
        const auto own = extension_column_[r - core_bits_];
        std::uint8_t s = 0;
        for (auto c : h_->row(r)) {
            if (c != own) {
                s ^= out[c];
            }
        }
        out[own] = s;
    }
}

}  // namespace edgeldpc::codec
