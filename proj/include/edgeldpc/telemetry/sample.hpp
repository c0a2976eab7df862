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
#include <span>
#include <string>
#include <vector>

namespace edgeldpc::telemetry {

/// The (backend, N_cw, I, trial) point a sample was taken during.
struct TrialTag {
    std::string backend;
    std::uint32_t n_cw = 0;
    std::uint32_t iters = 0;
    std::uint32_t trial = 0;

    friend bool operator==(const TrialTag&, const TrialTag&) = default;
};

struct GpuReading {
    double util_pct = 0.0;
    double power_w = 0.0;
};

struct TelemetrySample {
    std::string timestamp_utc;
    std::int64_t mono_ns = 0;
    /// U_cpu: process CPU time over wall time, 100 = one core fully busy.
    double cpu_util_pct = 0.0;
    /// C_cpu = U_cpu / 100.
    double active_cores = 0.0;
    std::optional<double> gpu_util_pct;
    std::optional<double> gpu_power_w;
    std::optional<TrialTag> tag;
};

/// Builds a sample with active_cores derived from cpu_util_pct.
TelemetrySample make_sample(std::string timestamp_utc, std::int64_t mono_ns, double cpu_util_pct,
                            std::optional<GpuReading> gpu = std::nullopt);

/// Thresholds from the utilization histograms: active > 5 %, high > 80 %.
inline constexpr double kGpuActivePct = 5.0;
inline constexpr double kGpuHighPct = 80.0;

struct TelemetrySummary {
    std::size_t count = 0;
    std::optional<double> mean_active_cores;
    std::optional<double> max_active_cores;
    std::size_t gpu_samples = 0;
    std::size_t gpu_active_count = 0;
    std::size_t gpu_high_count = 0;
    std::optional<double> mean_gpu_util_active;
    std::optional<double> mean_gpu_power_active;
    std::optional<double> mean_gpu_power_high;
};

/// Aggregates one trial window; an empty window yields count 0 and no aggregates.
TelemetrySummary summarize(std::span<const TelemetrySample> samples);

/// Samples whose mono_ns lies in [begin_ns, end_ns].
std::vector<TelemetrySample> samples_in_window(std::span<const TelemetrySample> samples,
                                               std::int64_t begin_ns, std::int64_t end_ns);

}  // namespace edgeldpc::telemetry
