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
#include <string>

#include "edgeldpc/construction/base_graph.hpp"
#include "edgeldpc/construction/lifting.hpp"
#include "edgeldpc/construction/parity_check.hpp"

namespace edgeldpc::construction {

/// Everything defining one NR-like code instance.
struct CodeConfig {
    std::uint32_t k_info = 0;    // information bits
    std::uint32_t n_coded = 0;   // transmitted bits, equal to the rate-match length E
    BaseGraphId bg_id = BaseGraphId::bg2;
    Lifting lifting;
    std::uint32_t info_cols = 0;
    std::uint32_t cols = 0;
    std::uint32_t k_lifted = 0;  // info_cols * Z
    std::uint32_t num_filler = 0;
    std::uint32_t punctured_cols = 2;  // leading systematic columns never transmitted

    std::uint32_t z() const { return lifting.z; }
    double code_rate() const { return static_cast<double>(k_info) / n_coded; }
    std::uint32_t lifted_length() const { return cols * lifting.z; }

    /// "K=512 N=1024 BG2 Z=52 iLS=6 filler=8"
    std::string describe() const;

    friend bool operator==(const CodeConfig&, const CodeConfig&) = default;
};

/// NR base-graph selection: BG2 when K <= 292, or K <= 3824 with R <= 0.67,
/// or R <= 0.25; BG1 otherwise.
BaseGraphId select_base_graph(std::uint32_t k_info, double code_rate);

/// Smallest K accepted with BG2; the reduced-K_b variants for tiny blocks
/// are not implemented.
inline constexpr std::uint32_t kMinBg2Info = 200;

CodeConfig make_code_config(std::uint32_t k_info, std::uint32_t n_coded,
                            const LiftingSizeTable& table);

/// A fully built code: parameters, protograph and lifted H.
struct CodeInstance {
    CodeConfig config;
    BaseGraph base_graph;
    ParityCheckMatrix h;
};

CodeInstance make_code(std::uint32_t k_info, std::uint32_t n_coded,
                       const std::filesystem::path& data_dir = default_data_dir());

}  // namespace edgeldpc::construction
