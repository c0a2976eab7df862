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

#include "edgeldpc/bench/record.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "edgeldpc/common/csv.hpp"
#include "edgeldpc/common/error.hpp"

namespace edgeldpc::bench {

namespace {

using u128 = unsigned __int128;

std::uint64_t odd_part(std::uint64_t x) {
    while (x != 0 && x % 2 == 0) {
        x /= 2;
    }
    return x;
}

constexpr std::uint64_t kMantissa = std::uint64_t{1} << 53;

}  // namespace

double mean_ms(std::span<const double> samples) {
    if (samples.empty()) {
        throw InputError("mean of an empty sample list");
    }
    double sum = 0.0;
    for (double s : samples) {
        sum += s;
    }
    return sum / static_cast<double>(samples.size());
}

double median(std::vector<double> samples) {
    if (samples.empty()) {
        throw InputError("median of an empty sample list");
    }
    std::sort(samples.begin(), samples.end());
    const auto n = samples.size();
    return n % 2 == 1 ? samples[n / 2] : (samples[n / 2 - 1] + samples[n / 2]) / 2.0;
}

TrialMetrics derive_metrics(std::span<const std::int64_t> inner_ns, std::uint32_t n_cw,
                            std::uint32_t k_info) {
    if (inner_ns.empty()) {
        throw InputError("derive_metrics: no inner samples");
    }
    if (n_cw == 0) {
        throw InputError("derive_metrics: N_cw must be positive");
    }
    for (auto ns : inner_ns) {
        if (ns < 0) {
            throw InputError("derive_metrics: negative duration");
        }
    }
    const std::uint64_t g = odd_part(inner_ns.size()) * odd_part(n_cw);
    const u128 den = u128{1'000'000} * g;

    // Finest grid q = g * 2^-e ms whose summed multiples stay below 2^53.
    std::vector<std::uint64_t> a(inner_ns.size());
    int e = 80;
    for (;; --e) {
        u128 total = 0;
        for (std::size_t m = 0; m < inner_ns.size(); ++m) {
            const u128 num = u128(static_cast<std::uint64_t>(inner_ns[m])) << e;
            const u128 q = (num + den / 2) / den;
            a[m] = static_cast<std::uint64_t>(q);
            total += q;
        }
        if (total * g < kMantissa || e == 0) {
            break;
        }
    }

    TrialMetrics out;
    out.inner_ms.reserve(a.size());
    for (auto v : a) {
        out.inner_ms.push_back(std::ldexp(static_cast<double>(v * g), -e));
    }
    out.t_dec_ms = mean_ms(out.inner_ms);
    out.t_cb_ms = out.t_dec_ms / n_cw;
    out.thr_bps = static_cast<double>(std::uint64_t{n_cw} * k_info) / (out.t_dec_ms / 1000.0);
    out.median_ms = median(out.inner_ms);
    if (out.t_cb_ms * n_cw != out.t_dec_ms) {
        throw std::logic_error("derive_metrics: amortization identity broken");
    }
    return out;
}

std::string to_csv_row(const BenchRecord& r) {
    return csv::join({r.backend, std::to_string(r.n_cw), std::to_string(r.iters),
                      std::to_string(r.trial), csv::format_g9(r.t_dec_ms),
                      csv::format_g9(r.t_cb_ms), csv::format_g9(r.thr_bps), r.regime, r.llr_hash,
                      r.cn_rule, csv::format_g9(r.esn0_db), r.timestamp_utc});
}

ResultsWriter::ResultsWriter(const std::filesystem::path& path) : path_(path) {
    const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
    out_.open(path, std::ios::binary | std::ios::app);
    if (!out_) {
        throw IoError("results: cannot open " + path.string());
    }
    if (fresh) {
        out_ << kResultsHeader << '\n';
        out_.flush();
    }
}

void ResultsWriter::write(const BenchRecord& r) {
    out_ << to_csv_row(r) << '\n';
    out_.flush();
    if (!out_) {
        throw IoError("results: write failed for " + path_.string());
    }
}

std::vector<BenchRecord> read_results_csv(const std::filesystem::path& path) {
    const auto t = csv::Table::read(path);
    const auto c_b = t.column("backend");
    const auto c_n = t.column("n_cw");
    const auto c_i = t.column("iters");
    const auto c_t = t.column("trial");
    const auto c_dec = t.column("t_dec_ms");
    const auto c_cb = t.column("t_cb_ms");
    const auto c_thr = t.column("thr_bps");
    const auto c_reg = t.column("regime");
    const auto c_hash = t.column("llr_hash");
    const auto c_rule = t.column("cn_rule");
    const auto c_snr = t.column("esn0_db");
    const auto c_ts = t.column("timestamp_utc");
    std::vector<BenchRecord> out;
    out.reserve(t.rows());
    for (std::size_t r = 0; r < t.rows(); ++r) {
        BenchRecord rec;
        rec.backend = t.at(r, c_b);
        rec.n_cw = static_cast<std::uint32_t>(t.integer(r, c_n));
        rec.iters = static_cast<std::uint32_t>(t.integer(r, c_i));
        rec.trial = static_cast<std::uint32_t>(t.integer(r, c_t));
        rec.t_dec_ms = t.optional_number(r, c_dec);
        rec.t_cb_ms = t.optional_number(r, c_cb);
        rec.thr_bps = t.optional_number(r, c_thr);
        rec.regime = t.at(r, c_reg);
        rec.llr_hash = t.at(r, c_hash);
        rec.cn_rule = t.at(r, c_rule);
        rec.esn0_db = t.number(r, c_snr);
        rec.timestamp_utc = t.at(r, c_ts);
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace edgeldpc::bench
