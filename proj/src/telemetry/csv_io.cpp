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

#include "edgeldpc/telemetry/csv_io.hpp"

#include "edgeldpc/common/csv.hpp"
#include "edgeldpc/common/error.hpp"

namespace edgeldpc::telemetry {

std::string to_csv_row(const TelemetrySample& s) {
    std::vector<std::string> f = {s.timestamp_utc,
                                  std::to_string(s.mono_ns),
                                  csv::format_exact(s.cpu_util_pct),
                                  csv::format_exact(s.active_cores),
                                  csv::format_exact(s.gpu_util_pct),
                                  csv::format_exact(s.gpu_power_w)};
    if (s.tag) {
        f.push_back(s.tag->backend);
        f.push_back(std::to_string(s.tag->n_cw));
        f.push_back(std::to_string(s.tag->iters));
        f.push_back(std::to_string(s.tag->trial));
    } else {
        f.insert(f.end(), 4, std::string());
    }
    return csv::join(f);
}

TelemetryWriter::TelemetryWriter(const std::filesystem::path& path) : path_(path) {
    const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
    out_.open(path, std::ios::binary | std::ios::app);
    if (!out_) {
        throw IoError("telemetry: cannot open " + path.string());
    }
    if (fresh) {
        out_ << kTelemetryHeader << '\n';
    }
    out_.flush();
}

void TelemetryWriter::write(std::span<const TelemetrySample> samples) {
    for (const auto& s : samples) {
        out_ << to_csv_row(s) << '\n';
    }
    out_.flush();
    if (!out_) {
        throw IoError("telemetry: write failed for " + path_.string());
    }
}

std::vector<TelemetrySample> read_telemetry_csv(const std::filesystem::path& path) {
    const auto t = csv::Table::read(path);
    const auto c_ts = t.column("timestamp_utc");
    const auto c_mono = t.column("mono_ns");
    const auto c_cpu = t.column("cpu_util_pct");
    const auto c_cores = t.column("active_cores");
    const auto c_gu = t.column("gpu_util_pct");
    const auto c_gp = t.column("gpu_power_w");
    const auto c_b = t.column("backend");
    const auto c_n = t.column("n_cw");
    const auto c_i = t.column("iters");
    const auto c_t = t.column("trial");
    std::vector<TelemetrySample> out;
    out.reserve(t.rows());
    for (std::size_t r = 0; r < t.rows(); ++r) {
        TelemetrySample s;
        s.timestamp_utc = t.at(r, c_ts);
        s.mono_ns = static_cast<std::int64_t>(t.integer(r, c_mono));
        s.cpu_util_pct = t.number(r, c_cpu);
        s.active_cores = t.number(r, c_cores);
        s.gpu_util_pct = t.optional_number(r, c_gu);
        s.gpu_power_w = t.optional_number(r, c_gp);
        if (!t.at(r, c_b).empty()) {
            s.tag = TrialTag{t.at(r, c_b), static_cast<std::uint32_t>(t.integer(r, c_n)),
                             static_cast<std::uint32_t>(t.integer(r, c_i)),
                             static_cast<std::uint32_t>(t.integer(r, c_t))};
        }
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace edgeldpc::telemetry
