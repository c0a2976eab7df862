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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace edgeldpc::bench {

enum class Preset { baseline, dense, full, custom };

std::string to_string(Preset p);
/// Throws ConfigError on an unknown name.
Preset parse_preset(std::string_view text);

/// Batch-size regime: powers of two up to 1024, multiples of 2048 up to 20480.
enum class Regime { baseline, dense, custom };

std::string to_string(Regime r);
std::optional<Regime> parse_regime(std::string_view text);
Regime classify_batch(std::uint32_t n_cw);

std::vector<std::uint32_t> baseline_batches();  // 1, 2, 4, ..., 1024
std::vector<std::uint32_t> dense_batches();     // 2048, 4096, ..., 20480
std::vector<std::uint32_t> default_iterations(); // 4, 6, ..., 22

struct SweepPlan {
    std::vector<std::uint32_t> batch_sizes;
    std::vector<std::uint32_t> iteration_budgets;
    std::vector<Regime> regimes;  // one per batch size
    std::uint32_t inner_reps = 10;
    std::uint32_t trial_count = 10;
    std::vector<std::string> backends;

    /// (N_cw, I) pairs per backend.
    std::size_t configurations() const { return batch_sizes.size() * iteration_budgets.size(); }
    std::size_t total_trials() const {
        return configurations() * trial_count * backends.size();
    }
};

struct SweepOverrides {
    std::optional<std::vector<std::uint32_t>> batch_sizes;
    std::optional<std::vector<std::uint32_t>> iteration_budgets;
    std::optional<std::uint32_t> inner_reps;
    std::optional<std::uint32_t> trial_count;
    std::optional<std::vector<std::string>> backends;
};

/// Preset lists with overrides applied. Override lists must be positive;
/// they are sorted and deduplicated. `custom` requires explicit batch sizes.
/// Throws ConfigError on empty lists, zeros or zero counts.
SweepPlan build_sweep(Preset preset, const SweepOverrides& overrides = {});

/// "4:22:2" (inclusive) or "4,6,8"; throws ConfigError when malformed.
std::vector<std::uint32_t> parse_u32_list(std::string_view text);
std::vector<std::string> parse_name_list(std::string_view text);

}  // namespace edgeldpc::bench
