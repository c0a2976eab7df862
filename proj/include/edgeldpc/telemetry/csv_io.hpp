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

#include <filesystem>
#include <fstream>
#include <span>
#include <vector>

#include "edgeldpc/telemetry/sample.hpp"

namespace edgeldpc::telemetry {

inline constexpr const char* kTelemetryHeader =
    "timestamp_utc,mono_ns,cpu_util_pct,active_cores,gpu_util_pct,gpu_power_w,backend,n_cw,"
    "iters,trial";

/// One CSV row (no newline); absent values are empty fields. Doubles use
/// the shortest exact form, so active_cores = cpu_util_pct/100 survives a
/// round trip.
std::string to_csv_row(const TelemetrySample& s);

/// Appends rows, writing the header when the file is new or empty.
class TelemetryWriter {
public:
    explicit TelemetryWriter(const std::filesystem::path& path);
    void write(std::span<const TelemetrySample> samples);

private:
    std::filesystem::path path_;
    std::ofstream out_;
};

/// Throws InputError naming any missing column.
std::vector<TelemetrySample> read_telemetry_csv(const std::filesystem::path& path);

}  // namespace edgeldpc::telemetry
