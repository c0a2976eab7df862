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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "edgeldpc/construction/base_graph.hpp"
#include "edgeldpc/construction/lifting.hpp"

namespace edgeldpc::construction {

/// Lifted sparse parity-check matrix, one ascending column list per row (CSR).
/// Immutable once built.
class ParityCheckMatrix {
public:
    ParityCheckMatrix(std::size_t n_cols, std::vector<std::uint32_t> row_ptr,
                      std::vector<std::uint32_t> col_idx);

    std::size_t rows() const { return row_ptr_.size() - 1; }
    std::size_t cols() const { return n_cols_; }
    std::size_t ones() const { return col_idx_.size(); }

    std::span<const std::uint32_t> row(std::size_t r) const {
        return {col_idx_.data() + row_ptr_[r], col_idx_.data() + row_ptr_[r + 1]};
    }
    std::span<const std::uint32_t> row_ptr() const { return row_ptr_; }
    std::span<const std::uint32_t> col_idx() const { return col_idx_; }

    std::vector<std::size_t> column_degrees() const;

    /// True when H * bits^T == 0 over GF(2); `bits` holds one 0/1 byte per column.
    bool satisfied_by(std::span<const std::uint8_t> bits) const;

    friend bool operator==(const ParityCheckMatrix&, const ParityCheckMatrix&) = default;

private:
    std::size_t n_cols_;
    std::vector<std::uint32_t> row_ptr_;
    std::vector<std::uint32_t> col_idx_;
};

/// QC lifting: base entry (r, c, shift) places ones at
/// (r*Z + i, c*Z + (i + shift) mod Z) for i in [0, Z).
/// Throws DataFileError if an entry has no shift for `lifting.set_index`.
ParityCheckMatrix expand(const BaseGraph& bg, Lifting lifting);

}  // namespace edgeldpc::construction
