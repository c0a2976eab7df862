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

#include "edgeldpc/construction/lifting.hpp"

#include <algorithm>
#include <string>

#include "edgeldpc/common/error.hpp"
#include "text_lines.hpp"

namespace edgeldpc::construction {

LiftingSizeTable::LiftingSizeTable(std::vector<Lifting> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty()) {
        throw DataFileError("lifting-size table is empty");
    }
    for (std::size_t i = 1; i < sizes_.size(); ++i) {
        if (sizes_[i].z <= sizes_[i - 1].z) {
            throw DataFileError("lifting sizes must be strictly increasing");
        }
    }
}

std::optional<Lifting> LiftingSizeTable::find(std::uint32_t z) const {
    auto it = std::lower_bound(sizes_.begin(), sizes_.end(), z,
                               [](const Lifting& l, std::uint32_t v) { return l.z < v; });
    if (it == sizes_.end() || it->z != z) {
        return std::nullopt;
    }
    return *it;
}

LiftingSizeTable load_lifting_sizes(const std::filesystem::path& path) {
    detail::LineReader reader(path);
    std::vector<Lifting> sizes;
    std::vector<std::string> tokens;
    while (reader.next(tokens)) {
        if (tokens.size() != 2) {
            reader.fail("expected 'Z i_LS'");
        }
        Lifting l{reader.parse_u32(tokens[0]), reader.parse_u32(tokens[1])};
        if (l.z == 0) {
            reader.fail("lifting size must be positive");
        }
        if (l.set_index > 7) {
            reader.fail("lifting-set index must be in 0..7");
        }
        if (!sizes.empty() && l.z <= sizes.back().z) {
            reader.fail("lifting sizes must be strictly increasing");
        }
        sizes.push_back(l);
    }
    if (sizes.empty()) {
        reader.fail("no lifting sizes");
    }
    return LiftingSizeTable(std::move(sizes));
}

LiftingSizeTable load_nr_lifting_sizes(const std::filesystem::path& data_dir) {
    return load_lifting_sizes(data_dir / "lifting_sizes.txt");
}

LiftingChoice select_lifting_size(std::uint32_t k_info, std::uint32_t info_cols,
                                  const LiftingSizeTable& table) {
    if (info_cols == 0) {
        throw InputError("select_lifting_size: info_cols must be positive");
    }
    for (const auto& l : table.sizes()) {
        const auto k_lifted = info_cols * l.z;
        if (k_lifted >= k_info) {
            return {l, k_lifted, k_lifted - k_info};
        }
    }
    throw ConstructionError("K=" + std::to_string(k_info) +
                            " exceeds the maximum supported K=" +
                            std::to_string(info_cols * table.max_z()) + " for this base graph");
}

LiftingChoice select_lifting_size(std::uint32_t k_info, BaseGraphId id,
                                  const LiftingSizeTable& table) {
    return select_lifting_size(k_info, nr_info_cols(id), table);
}

}  // namespace edgeldpc::construction
