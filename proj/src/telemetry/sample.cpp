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

#include "edgeldpc/telemetry/sample.hpp"

#include <algorithm>

namespace edgeldpc::telemetry {

TelemetrySample make_sample(std::string timestamp_utc, std::int64_t mono_ns, double cpu_util_pct,
                            std::optional<GpuReading> gpu) {
    TelemetrySample s;
    s.timestamp_utc = std::move(timestamp_utc);
    s.mono_ns = mono_ns;
    s.cpu_util_pct = cpu_util_pct;
    s.active_cores = cpu_util_pct / 100.0;
    if (gpu) {
        s.gpu_util_pct = gpu->util_pct;
        s.gpu_power_w = gpu->power_w;
    }
    return s;
}

namespace {

std::optional<double> mean_of(double sum, std::size_t n) {
    if (n == 0) {
        return std::nullopt;
    }
    return sum / static_cast<double>(n);
}

}  // namespace

TelemetrySummary summarize(std::span<const TelemetrySample> samples) {
    TelemetrySummary out;
    out.count = samples.size();
    double cores = 0.0;
    double util_active = 0.0;
    double power_active = 0.0;
    double power_high = 0.0;
    std::size_t power_active_n = 0;
    std::size_t power_high_n = 0;
    for (const auto& s : samples) {
        cores += s.active_cores;
        out.max_active_cores = std::max(out.max_active_cores.value_or(s.active_cores),
                                        s.active_cores);
        if (!s.gpu_util_pct) {
            continue;
        }
        ++out.gpu_samples;
        const double u = *s.gpu_util_pct;
        if (u > kGpuActivePct) {
            ++out.gpu_active_count;
            util_active += u;
            if (s.gpu_power_w) {
                power_active += *s.gpu_power_w;
                ++power_active_n;
            }
        }
        if (u > kGpuHighPct) {
            ++out.gpu_high_count;
            if (s.gpu_power_w) {
                power_high += *s.gpu_power_w;
                ++power_high_n;
            }
        }
    }
    out.mean_active_cores = mean_of(cores, out.count);
    out.mean_gpu_util_active = mean_of(util_active, out.gpu_active_count);
    out.mean_gpu_power_active = mean_of(power_active, power_active_n);
    out.mean_gpu_power_high = mean_of(power_high, power_high_n);
    return out;
}

std::vector<TelemetrySample> samples_in_window(std::span<const TelemetrySample> samples,
                                               std::int64_t begin_ns, std::int64_t end_ns) {
    std::vector<TelemetrySample> out;
    std::copy_if(samples.begin(), samples.end(), std::back_inserter(out), [&](const auto& s) {
        return s.mono_ns >= begin_ns && s.mono_ns <= end_ns;
    });
    return out;
}

}  // namespace edgeldpc::telemetry
