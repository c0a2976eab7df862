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
#include <span>
#include <string>
#include <vector>

#include "edgeldpc/bench/record.hpp"
#include "edgeldpc/telemetry/sample.hpp"

namespace edgeldpc::report {

inline constexpr double kDefaultSlotMs = 0.5;

/// t_cb / slot. Throws InputError if t_cb_ms < 0 or slot_ms <= 0.
double slot_fraction(double t_cb_ms, double slot_ms = kDefaultSlotMs);

/// "%.3f / %.2f" of a per-codeword time and its slot fraction.
std::string format_service_time(double t_cb_ms, double fraction);

struct Stats {
    std::size_t count = 0;
    double mean = 0.0;
    double median = 0.0;
    double min = 0.0;
    double max = 0.0;
};

/// Throws InputError on an empty list.
Stats stats_of(std::span<const double> values);

/// Ratio of mean throughputs, accelerated over reference.
double speedup_ratio(std::span<const double> accel_thr, std::span<const double> reference_thr);

enum class SpeedupKey { point, dense_iters };

struct SpeedupRow {
    SpeedupKey key = SpeedupKey::point;
    std::string accel_backend;
    std::string reference_backend;
    std::optional<std::uint32_t> n_cw;  // absent for dense aggregates
    std::uint32_t iters = 0;
    std::optional<double> accel_mean_thr;
    std::optional<double> reference_mean_thr;
    std::optional<double> speedup;  // absent when the pair is incomparable

    bool comparable() const { return speedup.has_value(); }
};

/// Pairs `accel` with `reference` at matched (N_cw, I) or, for dense_iters,
/// at matched I over all dense records. Keys present on only one side are
/// kept as incomparable rows.
std::vector<SpeedupRow> paired_speedup(std::span<const bench::BenchRecord> accel,
                                       std::span<const bench::BenchRecord> reference,
                                       SpeedupKey key);

struct BatchRow {
    std::string backend;
    std::uint32_t n_cw = 0;
    double log2_n_cw = 0.0;
    std::string regime;
    Stats thr;
};

struct Crossover {
    std::string backend;
    std::string reference_backend;
    /// Smallest N_cw where the backend's mean throughput exceeds the reference's.
    std::optional<std::uint32_t> n_cw;
    std::optional<double> backend_mean_thr;
    std::optional<double> reference_mean_thr;
};

struct BatchTable {
    std::vector<BatchRow> rows;        // sorted by (backend, N_cw)
    std::vector<Crossover> crossovers; // one per non-reference backend
};

/// Per (backend, N_cw): throughput over every I and trial.
BatchTable throughput_vs_batch(std::span<const bench::BenchRecord> records,
                               const std::string& reference_backend = "ref-st");

struct ItersRow {
    std::string backend;
    std::uint32_t iters = 0;
    Stats thr;
    std::optional<double> speedup_vs_reference;
};

struct ItersTable {
    std::vector<ItersRow> rows;  // empty when no dense records exist
    std::string reference_backend;
    bool empty() const { return rows.empty(); }
};

/// Per (backend, I): throughput over the dense regime only.
ItersTable throughput_vs_iters_dense(std::span<const bench::BenchRecord> records,
                                     const std::string& reference_backend = "ref-st");

struct ServiceRow {
    std::string backend;
    std::uint32_t iters = 0;
    Stats t_cb_ms;
    double slot_ms = kDefaultSlotMs;
    double fraction = 0.0;
    std::string display;  // "0.064 / 0.13"
};

/// Per (backend, I in picks): mean dense-regime t_cb and its slot fraction.
/// Throws ConfigError if a pick was never swept.
std::vector<ServiceRow> service_time_table(std::span<const bench::BenchRecord> records,
                                           double slot_ms, std::span<const std::uint32_t> picks);

struct HistogramBin {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t count = 0;
};

struct Histograms {
    std::vector<HistogramBin> cpu_cores;  // width 1 core, all samples
    std::vector<HistogramBin> gpu_util;   // width 5 %, samples with util > 5 %
    std::size_t cpu_samples = 0;
    std::size_t gpu_active_samples = 0;
};

Histograms utilization_histograms(std::span<const telemetry::TelemetrySample> samples);

/// Median t_dec over trials must not fall by more than `tolerance` between
/// adjacent iteration budgets. Returns one message per violating pair.
std::vector<std::string> iteration_monotonicity(std::span<const bench::BenchRecord> records,
                                                double tolerance = 0.05);

struct ReportOptions {
    double slot_ms = kDefaultSlotMs;
    std::vector<std::uint32_t> picks = {4, 10, 20};
    std::string reference_backend = "ref-st";
};

inline constexpr const char* kReportFiles[] = {"thr_vs_batch.csv", "thr_vs_iters_dense.csv",
                                               "service_time_table.csv", "speedup.csv",
                                               "cpu_hist.csv", "gpu_hist.csv"};
inline constexpr const char* kReportManifest = "report_manifest.json";

/// Reads results.csv (and telemetry.csv when present) from `in_dir` and
/// writes the six tables plus report_manifest.json to `out_dir`. Output
/// depends only on the input files and options.
void write_report(const std::filesystem::path& in_dir, const std::filesystem::path& out_dir,
                  const ReportOptions& options = {});

}  // namespace edgeldpc::report
