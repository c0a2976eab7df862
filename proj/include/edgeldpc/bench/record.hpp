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
#include <fstream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "edgeldpc/telemetry/sample.hpp"

namespace edgeldpc::bench {

/// Timing metrics of one trial.
struct TrialMetrics {
    std::vector<double> inner_ms;  // snapped to the exact grid, see derive_metrics
    double t_dec_ms = 0.0;
    double t_cb_ms = 0.0;
    double thr_bps = 0.0;
    double median_ms = 0.0;
};

/// Plain arithmetic mean of the samples in order.
double mean_ms(std::span<const double> samples);
double median(std::vector<double> samples);

/// Derives the trial metrics from raw nanosecond samples:
///   t_dec = (1/M) sum t_m,  t_cb = t_dec / N_cw,  T_thr = N_cw K / (t_dec / 1000).
/// Each sample is first rounded to a grid of odd(M)*odd(N_cw)*2^-e ms (e as
/// large as the 53-bit mantissa allows, far below timer resolution). On that
/// grid the sum, the division by M and the division by N_cw are all exact,
/// so t_dec equals the mean of inner_ms and t_cb * N_cw equals t_dec bit for bit.
/// Throws InputError on an empty sample list, N_cw = 0 or a negative sample.
TrialMetrics derive_metrics(std::span<const std::int64_t> inner_ns, std::uint32_t n_cw,
                            std::uint32_t k_info);

/// One (backend, N_cw, I, trial) measurement.
struct BenchRecord {
    std::string backend;
    std::uint32_t n_cw = 0;
    std::uint32_t iters = 0;
    std::uint32_t trial = 0;
    std::string regime;
    std::vector<std::int64_t> inner_ns;
    std::vector<double> inner_ms;
    std::optional<double> warmup_ms;
    std::optional<double> t_dec_ms;
    std::optional<double> t_cb_ms;
    std::optional<double> thr_bps;
    std::optional<double> median_ms;
    std::string llr_hash;
    std::string cn_rule;
    double esn0_db = 0.0;
    std::string timestamp_utc;
    std::int64_t window_begin_ns = 0;
    std::int64_t window_end_ns = 0;
    std::optional<std::string> error;
    telemetry::TelemetrySummary telemetry;

    bool failed() const { return !t_dec_ms.has_value(); }
};

inline constexpr const char* kResultsHeader =
    "backend,n_cw,iters,trial,t_dec_ms,t_cb_ms,thr_bps,regime,llr_hash,cn_rule,esn0_db,"
    "timestamp_utc";

/// Floats with 9 significant digits; metric fields empty for failed trials.
std::string to_csv_row(const BenchRecord& r);

/// Appends rows and flushes after each, so a crash loses at most one row.
class ResultsWriter {
public:
    explicit ResultsWriter(const std::filesystem::path& path);
    void write(const BenchRecord& r);

private:
    std::filesystem::path path_;
    std::ofstream out_;
};

/// Throws InputError naming a missing column; a torn final line is ignored.
std::vector<BenchRecord> read_results_csv(const std::filesystem::path& path);

}  // namespace edgeldpc::bench
