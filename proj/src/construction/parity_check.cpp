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

#include "edgeldpc/construction/parity_check.hpp"

#include <string>

#include "edgeldpc/common/error.hpp"

namespace edgeldpc::construction {

ParityCheckMatrix::ParityCheckMatrix(std::size_t n_cols, std::vector<std::uint32_t> row_ptr,
                                     std::vector<std::uint32_t> col_idx)
    : n_cols_(n_cols), row_ptr_(std::move(row_ptr)), col_idx_(std::move(col_idx)) {
    if (row_ptr_.empty() || row_ptr_.front() != 0 || row_ptr_.back() != col_idx_.size()) {
        throw InputError("ParityCheckMatrix: inconsistent row pointers");
    }
    for (auto c : col_idx_) {
        if (c >= n_cols_) {
            throw InputError("ParityCheckMatrix: column index out of range");
        }
    }
}

std::vector<std::size_t> ParityCheckMatrix::column_degrees() const {
    std::vector<std::size_t> deg(n_cols_, 0);
    for (auto c : col_idx_) {
        ++deg[c];
    }
    return deg;
}

bool ParityCheckMatrix::satisfied_by(std::span<const std::uint8_t> bits) const {
    if (bits.size() != n_cols_) {
        throw InputError("satisfied_by: expected " + std::to_string(n_cols_) + " bits, got " +
                         std::to_string(bits.size()));
    }
    for (std::size_t r = 0; r < rows(); ++r) {
        std::uint8_t parity = 0;
        for (auto c : row(r)) {
            parity ^= bits[c];
        }
        if ((parity & 1U) != 0) {
            return false;
        }
    }
    return true;
}

ParityCheckMatrix expand(const BaseGraph& bg, Lifting lifting) {
    const std::uint32_t z = lifting.z;
    if (z == 0) {
        throw InputError("expand: lifting size must be positive");
    }
    // Entries are sorted by (row, col), so each base row is a contiguous run.
    std::vector<std::size_t> row_begin(bg.rows + 1, bg.entries.size());
    for (std::size_t i = bg.entries.size(); i-- > 0;) {
        row_begin[bg.entries[i].row] = i;
    }
    for (std::size_t r = bg.rows; r-- > 0;) {
        row_begin[r] = std::min(row_begin[r], row_begin[r + 1]);
    }

    std::vector<std::uint32_t> row_ptr;
    std::vector<std::uint32_t> col_idx;
    row_ptr.reserve(static_cast<std::size_t>(bg.rows) * z + 1);
    col_idx.reserve(bg.entries.size() * z);
    row_ptr.push_back(0);
    for (std::uint32_t r = 0; r < bg.rows; ++r) {
        for (std::uint32_t i = 0; i < z; ++i) {
            for (std::size_t k = row_begin[r]; k < row_begin[r + 1]; ++k) {
                const auto& e = bg.entries[k];
                if (lifting.set_index >= e.shifts.size()) {
                    throw DataFileError("base graph entry (" + std::to_string(e.row) + ", " +
                                        std::to_string(e.col) + ") has no shift for lifting set " +
                                        std::to_string(lifting.set_index));
                }
                const auto shift = e.shifts[lifting.set_index] % z;
                col_idx.push_back(e.col * z + (i + shift) % z);
            }
            row_ptr.push_back(static_cast<std::uint32_t>(col_idx.size()));
        }
    }
    return ParityCheckMatrix(static_cast<std::size_t>(bg.cols) * z, std::move(row_ptr),
                             std::move(col_idx));
}

}  // namespace edgeldpc::construction
