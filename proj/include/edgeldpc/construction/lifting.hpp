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
#include <optional>
#include <vector>

#include "edgeldpc/construction/base_graph.hpp"

namespace edgeldpc::construction {

/// A lifting size together with the lifting set it belongs to.
struct Lifting {
    std::uint32_t z = 0;
    std::uint32_t set_index = 0;

    friend bool operator==(const Lifting&, const Lifting&) = default;
};

/// The ordered set of permitted lifting sizes and their set-index mapping.
class LiftingSizeTable {
public:
    explicit LiftingSizeTable(std::vector<Lifting> sizes);

    const std::vector<Lifting>& sizes() const { return sizes_; }
    std::optional<Lifting> find(std::uint32_t z) const;
    std::uint32_t max_z() const { return sizes_.back().z; }

private:
    std::vector<Lifting> sizes_;
};

/// Parses `Z i_LS` lines; Z strictly increasing, i_LS in 0..7.
LiftingSizeTable load_lifting_sizes(const std::filesystem::path& path);
LiftingSizeTable load_nr_lifting_sizes(const std::filesystem::path& data_dir = default_data_dir());

struct LiftingChoice {
    Lifting lifting;
    std::uint32_t k_lifted = 0;
    std::uint32_t num_filler = 0;
};

/// Smallest Z in the table with info_cols * Z >= k_info.
/// Throws ConstructionError naming the largest supported K otherwise.
LiftingChoice select_lifting_size(std::uint32_t k_info, std::uint32_t info_cols,
                                  const LiftingSizeTable& table);
LiftingChoice select_lifting_size(std::uint32_t k_info, BaseGraphId id,
                                  const LiftingSizeTable& table);

}  // namespace edgeldpc::construction
