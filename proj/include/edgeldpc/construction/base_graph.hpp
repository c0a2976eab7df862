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
#include <filesystem>
#include <string>
#include <vector>

namespace edgeldpc::construction {

enum class BaseGraphId : std::uint8_t { bg1 = 1, bg2 = 2, custom = 0 };

std::string to_string(BaseGraphId id);

/// One non-zero base-graph position. `shifts[i_ls]` is the cyclic shift used
/// when the lifting size belongs to lifting set `i_ls`.
struct BaseGraphEntry {
    std::uint32_t row = 0;
    std::uint32_t col = 0;
    std::vector<std::uint32_t> shifts;
};

/// Protograph of a QC-LDPC code. Entries are kept sorted by (row, col).
/// The first `info_cols` columns are systematic; the remaining `rows`
/// columns are parity (double-diagonal core followed by a degree-1 extension).
struct BaseGraph {
    BaseGraphId id = BaseGraphId::custom;
    std::uint32_t rows = 0;
    std::uint32_t cols = 0;
    std::uint32_t info_cols = 0;
    std::vector<BaseGraphEntry> entries;

    /// Throws DataFileError when an invariant does not hold (duplicate
    /// positions, out-of-range indices, wrong NR dimensions).
    void validate() const;

    std::size_t row_degree(std::uint32_t row) const;
    std::size_t col_degree(std::uint32_t col) const;
};

/// Number of systematic base-graph columns for the two NR graphs.
std::uint32_t nr_info_cols(BaseGraphId id);

/// Parses the plain-text base-graph format:
///   `BG <1|2> rows=<r> cols=<c>` header, then `r c s0 ... s7` entry lines.
/// '#' starts a comment. Errors carry the offending line number.
BaseGraph load_base_graph(const std::filesystem::path& path);

/// Location of the vendored tables; `EDGELDPC_DATA_DIR` in the environment
/// overrides the compiled-in default.
std::filesystem::path default_data_dir();

BaseGraph load_nr_base_graph(BaseGraphId id,
                             const std::filesystem::path& data_dir = default_data_dir());

}  // namespace edgeldpc::construction
