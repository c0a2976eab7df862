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

#include "edgeldpc/report/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "edgeldpc/common/csv.hpp"
#include "edgeldpc/common/error.hpp"
#include "edgeldpc/common/sha256.hpp"
#include "edgeldpc/telemetry/csv_io.hpp"

namespace edgeldpc::report {

namespace fs = std::filesystem;
using bench::BenchRecord;

namespace {

constexpr const char* kDense = "dense";

double mean_of(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) {
        s += x;
    }
    return s / static_cast<double>(v.size());
}

template <class Key, class Pick>
std::map<Key, std::vector<double>> group_by(std::span<const BenchRecord> records, Pick pick,
                                            bool dense_only) {
    std::map<Key, std::vector<double>> groups;
    for (const auto& r : records) {
        if (r.failed() || (dense_only && r.regime != kDense)) {
            continue;
        }
        groups[pick(r)].push_back(*r.thr_bps);
    }
    return groups;
}

std::string opt_g9(const std::optional<double>& v) { return csv::format_g9(v); }

std::string stats_fields(const Stats& s) {
    return std::to_string(s.count) + "," + csv::format_g9(s.mean) + "," +
           csv::format_g9(s.median) + "," + csv::format_g9(s.min) + "," + csv::format_g9(s.max);
}

std::set<std::string> backends_of(std::span<const BenchRecord> records) {
    std::set<std::string> out;
    for (const auto& r : records) {
        out.insert(r.backend);
    }
    return out;
}

std::vector<BenchRecord> of_backend(std::span<const BenchRecord> records,
                                    const std::string& backend) {
    std::vector<BenchRecord> out;
    for (const auto& r : records) {
        if (r.backend == backend) {
            out.push_back(r);
        }
    }
    return out;
}

}  // namespace

double slot_fraction(double t_cb_ms, double slot_ms) {
    if (!(t_cb_ms >= 0.0)) {
        throw InputError("slot fraction: t_cb must be >= 0, got " + csv::format_g9(t_cb_ms));
    }
    if (!(slot_ms > 0.0)) {
        throw InputError("slot fraction: slot length must be > 0, got " + csv::format_g9(slot_ms));
    }
    return t_cb_ms / slot_ms;
}

std::string format_service_time(double t_cb_ms, double fraction) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f / %.2f", t_cb_ms, fraction);
    return buf;
}

Stats stats_of(std::span<const double> values) {
    if (values.empty()) {
        throw InputError("stats: empty sample");
    }
    Stats s;
    s.count = values.size();
    s.mean = mean_of(values);
    s.median = bench::median({values.begin(), values.end()});
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    s.min = *lo;
    s.max = *hi;
    return s;
}

double speedup_ratio(std::span<const double> accel_thr, std::span<const double> reference_thr) {
    if (accel_thr.empty() || reference_thr.empty()) {
        throw InputError("speedup: both sides need at least one throughput value");
    }
    const double ref = mean_of(reference_thr);
    if (!(ref > 0.0)) {
        throw InputError("speedup: reference throughput must be > 0");
    }
    return mean_of(accel_thr) / ref;
}

std::vector<SpeedupRow> paired_speedup(std::span<const BenchRecord> accel,
                                       std::span<const BenchRecord> reference, SpeedupKey key) {
    using Key = std::pair<std::uint32_t, std::uint32_t>;  // (n_cw or 0, iters)
    const bool dense = key == SpeedupKey::dense_iters;
    auto pick = [dense](const BenchRecord& r) { return Key{dense ? 0U : r.n_cw, r.iters}; };
    const auto a = group_by<Key>(accel, pick, dense);
    const auto b = group_by<Key>(reference, pick, dense);
    const std::string a_name = accel.empty() ? "" : accel.front().backend;
    const std::string b_name = reference.empty() ? "" : reference.front().backend;

    std::set<Key> keys;
    for (const auto& kv : a) {
        keys.insert(kv.first);
    }
    for (const auto& kv : b) {
        keys.insert(kv.first);
    }
    std::vector<SpeedupRow> rows;
    for (const auto& k : keys) {
        SpeedupRow row;
        row.key = key;
        row.accel_backend = a_name;
        row.reference_backend = b_name;
        if (!dense) {
            row.n_cw = k.first;
        }
        row.iters = k.second;
        const auto ia = a.find(k);
        const auto ib = b.find(k);
        if (ia != a.end()) {
            row.accel_mean_thr = mean_of(ia->second);
        }
        if (ib != b.end()) {
            row.reference_mean_thr = mean_of(ib->second);
        }
        if (ia != a.end() && ib != b.end() && *row.reference_mean_thr > 0.0) {
            row.speedup = speedup_ratio(ia->second, ib->second);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

BatchTable throughput_vs_batch(std::span<const BenchRecord> records,
                               const std::string& reference_backend) {
    using Key = std::pair<std::string, std::uint32_t>;
    std::map<Key, std::string> regime;
    for (const auto& r : records) {
        regime.emplace(Key{r.backend, r.n_cw}, r.regime);
    }
    const auto groups = group_by<Key>(
        records, [](const BenchRecord& r) { return Key{r.backend, r.n_cw}; }, false);

    BatchTable table;
    for (const auto& [k, thr] : groups) {
        table.rows.push_back(BatchRow{k.first, k.second, std::log2(static_cast<double>(k.second)),
                                      regime[k], stats_of(thr)});
    }
    for (const auto& backend : backends_of(records)) {
        if (backend == reference_backend) {
            continue;
        }
        Crossover c;
        c.backend = backend;
        c.reference_backend = reference_backend;
        for (const auto& row : table.rows) {
            if (row.backend != backend) {
                continue;
            }
            const auto ref = groups.find(Key{reference_backend, row.n_cw});
            if (ref == groups.end()) {
                continue;
            }
            const double ref_mean = mean_of(ref->second);
            if (row.thr.mean > ref_mean) {
                c.n_cw = row.n_cw;
                c.backend_mean_thr = row.thr.mean;
                c.reference_mean_thr = ref_mean;
                break;
            }
        }
        table.crossovers.push_back(std::move(c));
    }
    return table;
}

ItersTable throughput_vs_iters_dense(std::span<const BenchRecord> records,
                                     const std::string& reference_backend) {
    using Key = std::pair<std::string, std::uint32_t>;
    const auto groups = group_by<Key>(
        records, [](const BenchRecord& r) { return Key{r.backend, r.iters}; }, true);
    ItersTable table;
    table.reference_backend = reference_backend;
    for (const auto& [k, thr] : groups) {
        ItersRow row{k.first, k.second, stats_of(thr), std::nullopt};
        const auto ref = groups.find(Key{reference_backend, k.second});
        if (ref != groups.end()) {
            row.speedup_vs_reference = speedup_ratio(thr, ref->second);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::vector<ServiceRow> service_time_table(std::span<const BenchRecord> records, double slot_ms,
                                           std::span<const std::uint32_t> picks) {
    if (!(slot_ms > 0.0)) {
        throw ConfigError("service table: slot length must be > 0");
    }
    std::set<std::uint32_t> swept;
    for (const auto& r : records) {
        swept.insert(r.iters);
    }
    for (auto p : picks) {
        if (swept.count(p) == 0) {
            throw ConfigError("service table: iteration budget " + std::to_string(p) +
                              " was not swept");
        }
    }
    const std::set<std::uint32_t> wanted(picks.begin(), picks.end());
    using Key = std::pair<std::string, std::uint32_t>;
    std::map<Key, std::vector<double>> groups;
    for (const auto& r : records) {
        if (!r.failed() && r.regime == kDense && wanted.count(r.iters) != 0) {
            groups[Key{r.backend, r.iters}].push_back(*r.t_cb_ms);
        }
    }
    std::vector<ServiceRow> rows;
    for (const auto& [k, t_cb] : groups) {
        ServiceRow row;
        row.backend = k.first;
        row.iters = k.second;
        row.t_cb_ms = stats_of(t_cb);
        row.slot_ms = slot_ms;
        row.fraction = slot_fraction(row.t_cb_ms.mean, slot_ms);
        row.display = format_service_time(row.t_cb_ms.mean, row.fraction);
        rows.push_back(std::move(row));
    }
    return rows;
}

Histograms utilization_histograms(std::span<const telemetry::TelemetrySample> samples) {
    Histograms h;
    double max_cores = 0.0;
    for (const auto& s : samples) {
        max_cores = std::max(max_cores, s.active_cores);
    }
    if (!samples.empty()) {
        const auto n_bins = static_cast<std::size_t>(std::floor(max_cores)) + 1;
        for (std::size_t i = 0; i < n_bins; ++i) {
            h.cpu_cores.push_back({static_cast<double>(i), static_cast<double>(i + 1), 0});
        }
        for (const auto& s : samples) {
            const auto bin = static_cast<std::size_t>(std::floor(std::max(0.0, s.active_cores)));
            ++h.cpu_cores[std::min(bin, n_bins - 1)].count;
        }
        h.cpu_samples = samples.size();
    }
    for (int i = 0; i < 20; ++i) {
        h.gpu_util.push_back({5.0 * i, 5.0 * (i + 1), 0});
    }
    for (const auto& s : samples) {
        if (!s.gpu_util_pct || *s.gpu_util_pct <= telemetry::kGpuActivePct) {
            continue;
        }
        const auto bin = std::min<std::size_t>(
            static_cast<std::size_t>(std::floor(*s.gpu_util_pct / 5.0)), 19);
        ++h.gpu_util[bin].count;
        ++h.gpu_active_samples;
    }
    return h;
}

std::vector<std::string> iteration_monotonicity(std::span<const BenchRecord> records,
                                                double tolerance) {
    std::map<std::tuple<std::string, std::uint32_t, std::uint32_t>, std::vector<double>> t_dec;
    for (const auto& r : records) {
        if (!r.failed()) {
            t_dec[{r.backend, r.n_cw, r.iters}].push_back(*r.t_dec_ms);
        }
    }
    std::vector<std::string> violations;
    const std::tuple<std::string, std::uint32_t, std::uint32_t>* prev_key = nullptr;
    double prev = 0.0;
    for (const auto& [k, v] : t_dec) {
        const double med = bench::median(v);
        if (prev_key != nullptr && std::get<0>(*prev_key) == std::get<0>(k) &&
            std::get<1>(*prev_key) == std::get<1>(k) && med < prev * (1.0 - tolerance)) {
            violations.push_back(std::get<0>(k) + " N_cw=" + std::to_string(std::get<1>(k)) +
                                 ": median t_dec " + csv::format_g9(prev) + " ms at I=" +
                                 std::to_string(std::get<2>(*prev_key)) + " > " +
                                 csv::format_g9(med) + " ms at I=" +
                                 std::to_string(std::get<2>(k)));
        }
        prev_key = &k;
        prev = med;
    }
    return violations;
}

namespace {

std::string batch_csv(const BatchTable& t) {
    std::ostringstream o;
    o << "row_kind,backend,reference_backend,n_cw,log2_n_cw,regime,count,mean_thr_bps,"
         "median_thr_bps,min_thr_bps,max_thr_bps\n";
    for (const auto& r : t.rows) {
        o << "series," << r.backend << ",," << r.n_cw << "," << csv::format_g9(r.log2_n_cw) << ","
          << r.regime << "," << stats_fields(r.thr) << "\n";
    }
    for (const auto& c : t.crossovers) {
        o << "crossover," << c.backend << "," << c.reference_backend << ","
          << (c.n_cw ? std::to_string(*c.n_cw) : "") << ","
          << (c.n_cw ? csv::format_g9(std::log2(static_cast<double>(*c.n_cw))) : "") << ",,,"
          << opt_g9(c.backend_mean_thr) << ",,,\n";
    }
    return o.str();
}

std::string iters_csv(const ItersTable& t) {
    std::ostringstream o;
    o << "row_kind,backend,iters,count,mean_thr_bps,median_thr_bps,min_thr_bps,max_thr_bps,"
         "speedup_vs_reference,reference_backend\n";
    if (t.empty()) {
        o << "empty,,,0,,,,,," << t.reference_backend << "\n";
    }
    for (const auto& r : t.rows) {
        o << "series," << r.backend << "," << r.iters << "," << stats_fields(r.thr) << ","
          << opt_g9(r.speedup_vs_reference) << "," << t.reference_backend << "\n";
    }
    return o.str();
}

std::string service_csv(const std::vector<ServiceRow>& rows, double slot_ms) {
    std::ostringstream o;
    o << "row_kind,backend,iters,count,mean_t_cb_ms,median_t_cb_ms,slot_ms,slot_fraction,"
         "display\n";
    if (rows.empty()) {
        o << "empty,,,0,,," << csv::format_g9(slot_ms) << ",,\n";
    }
    for (const auto& r : rows) {
        o << "series," << r.backend << "," << r.iters << "," << r.t_cb_ms.count << ","
          << csv::format_g9(r.t_cb_ms.mean) << "," << csv::format_g9(r.t_cb_ms.median) << ","
          << csv::format_g9(r.slot_ms) << "," << csv::format_g9(r.fraction) << "," << r.display
          << "\n";
    }
    return o.str();
}

std::string speedup_csv(const std::vector<SpeedupRow>& rows) {
    std::ostringstream o;
    o << "key_kind,accel_backend,reference_backend,n_cw,iters,accel_mean_thr_bps,"
         "reference_mean_thr_bps,speedup,comparable\n";
    for (const auto& r : rows) {
        o << (r.key == SpeedupKey::point ? "point" : "dense_iters") << "," << r.accel_backend << ","
          << r.reference_backend << "," << (r.n_cw ? std::to_string(*r.n_cw) : "") << ","
          << r.iters << "," << opt_g9(r.accel_mean_thr) << "," << opt_g9(r.reference_mean_thr)
          << "," << opt_g9(r.speedup) << "," << (r.comparable() ? 1 : 0) << "\n";
    }
    return o.str();
}

std::string hist_csv(const std::vector<HistogramBin>& bins) {
    std::ostringstream o;
    o << "bin_lo,bin_hi,count\n";
    for (const auto& b : bins) {
        o << csv::format_g9(b.lo) << "," << csv::format_g9(b.hi) << "," << b.count << "\n";
    }
    return o.str();
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) {
        throw IoError("cannot read " + p.string());
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void put(const fs::path& p, const std::string& text) {
    const fs::path tmp = p.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << text;
        if (!out.flush()) {
            throw IoError("cannot write " + tmp.string());
        }
    }
    fs::rename(tmp, p);
}

}  // namespace

void write_report(const fs::path& in_dir, const fs::path& out_dir, const ReportOptions& options) {
    const fs::path results_path = in_dir / "results.csv";
    const fs::path telemetry_path = in_dir / "telemetry.csv";
    if (!fs::exists(results_path)) {
        throw IoError("report: " + results_path.string() + " does not exist");
    }
    const std::string results_text = slurp(results_path);
    const auto records = bench::read_results_csv(results_path);
    std::vector<telemetry::TelemetrySample> samples;
    std::optional<std::string> telemetry_text;
    if (fs::exists(telemetry_path)) {
        telemetry_text = slurp(telemetry_path);
        samples = telemetry::read_telemetry_csv(telemetry_path);
    }

    const auto batch = throughput_vs_batch(records, options.reference_backend);
    const auto iters = throughput_vs_iters_dense(records, options.reference_backend);
    const auto service = service_time_table(records, options.slot_ms, options.picks);
    const auto reference = of_backend(records, options.reference_backend);
    std::vector<SpeedupRow> speedups;
    for (const auto& backend : backends_of(records)) {
        if (backend == options.reference_backend) {
            continue;
        }
        const auto accel = of_backend(records, backend);
        for (auto key : {SpeedupKey::point, SpeedupKey::dense_iters}) {
            auto rows = paired_speedup(accel, reference, key);
            for (auto& r : rows) {
                r.reference_backend = options.reference_backend;
            }
            speedups.insert(speedups.end(), rows.begin(), rows.end());
        }
    }
    const auto hist = utilization_histograms(samples);

    fs::create_directories(out_dir);
    const std::map<std::string, std::string> outputs = {
        {"thr_vs_batch.csv", batch_csv(batch)},
        {"thr_vs_iters_dense.csv", iters_csv(iters)},
        {"service_time_table.csv", service_csv(service, options.slot_ms)},
        {"speedup.csv", speedup_csv(speedups)},
        {"cpu_hist.csv", hist_csv(hist.cpu_cores)},
        {"gpu_hist.csv", hist_csv(hist.gpu_util)},
    };

    nlohmann::json m;
    m["format"] = "edgeldpc-report v1";
    m["options"] = {{"slot_ms", options.slot_ms},
                    {"picks", options.picks},
                    {"reference_backend", options.reference_backend}};
    std::set<std::string> hashes;
    std::set<std::string> rules;
    std::set<double> esn0;
    std::size_t failed = 0;
    for (const auto& r : records) {
        hashes.insert(r.llr_hash);
        rules.insert(r.cn_rule);
        esn0.insert(r.esn0_db);
        failed += r.failed() ? 1 : 0;
    }
    m["inputs"]["results.csv"] = {{"sha256", to_hex(sha256(results_text))},
                                  {"records", records.size()},
                                  {"failed", failed}};
    m["inputs"]["telemetry.csv"] =
        telemetry_text ? nlohmann::json{{"sha256", to_hex(sha256(*telemetry_text))},
                                        {"samples", samples.size()}}
                       : nlohmann::json(nullptr);
    m["backends"] = backends_of(records);
    m["llr_hashes"] = hashes;
    m["cn_rules"] = rules;
    m["esn0_db"] = esn0;
    nlohmann::json cross = nlohmann::json::array();
    for (const auto& c : batch.crossovers) {
        cross.push_back({{"backend", c.backend},
                         {"reference_backend", c.reference_backend},
                         {"n_cw", c.n_cw ? nlohmann::json(*c.n_cw) : nlohmann::json(nullptr)}});
    }
    m["crossovers"] = cross;
    m["dense_empty"] = iters.empty();
    m["histograms"] = {{"cpu_samples", hist.cpu_samples},
                       {"gpu_active_samples", hist.gpu_active_samples}};
    for (const auto& [name, text] : outputs) {
        put(out_dir / name, text);
        m["outputs"][name] = to_hex(sha256(text));
    }
    put(out_dir / kReportManifest, m.dump(2) + "\n");
}

}  // namespace edgeldpc::report
