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

#include <chrono>
#include <fstream>
#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "edgeldpc/common/error.hpp"
#include "edgeldpc/common/time.hpp"
#include "edgeldpc/telemetry/csv_io.hpp"
#include "edgeldpc/telemetry/sample.hpp"
#include "edgeldpc/telemetry/sampler.hpp"
#include "test_support.hpp"

// NOLINTBEGIN(cppcoreguidelines-avoid-magic-numbers,readability-magic-numbers)

namespace {

using namespace edgeldpc::telemetry;
using namespace std::chrono_literals;

TelemetrySample cpu(std::int64_t t, double pct) { return make_sample("t", t, pct); }
TelemetrySample gpu(std::int64_t t, double util, double power) {
    return make_sample("t", t, 100.0, GpuReading{util, power});
}

TEST(Sample, ActiveCoresIsUtilOverHundred) {
    EXPECT_DOUBLE_EQ(make_sample("t", 0, 1150.0).active_cores, 11.5);
    EXPECT_EQ(make_sample("t", 0, 0.0).active_cores, 0.0);
    EXPECT_FALSE(make_sample("t", 0, 50.0).gpu_util_pct.has_value());
}

TEST(Summary, MeanOfCoresOverWindow) {
    const std::vector<TelemetrySample> s = {cpu(0, 1080.0), cpu(1, 1120.0), cpu(2, 1200.0)};
    const auto sum = summarize(s);
    EXPECT_EQ(sum.count, 3U);
    EXPECT_NEAR(*sum.mean_active_cores, (10.8 + 11.2 + 12.0) / 3.0, 1e-12);
    EXPECT_DOUBLE_EQ(*sum.max_active_cores, 12.0);
}

TEST(Summary, GpuThresholdsSplitActiveAndHigh) {
    const std::vector<TelemetrySample> s = {gpu(0, 0.0, 10.0), gpu(1, 3.0, 11.0),
                                            gpu(2, 50.0, 20.0), gpu(3, 95.0, 30.0)};
    const auto sum = summarize(s);
    EXPECT_EQ(sum.gpu_samples, 4U);
    EXPECT_EQ(sum.gpu_active_count, 2U);
    EXPECT_EQ(sum.gpu_high_count, 1U);
    EXPECT_DOUBLE_EQ(*sum.mean_gpu_util_active, 72.5);
    EXPECT_DOUBLE_EQ(*sum.mean_gpu_power_active, 25.0);
    EXPECT_DOUBLE_EQ(*sum.mean_gpu_power_high, 30.0);
}

TEST(Summary, ExactlyFivePercentIsNotActive) {
    const std::vector<TelemetrySample> s = {gpu(0, 5.0, 10.0), gpu(1, 80.0, 10.0)};
    const auto sum = summarize(s);
    EXPECT_EQ(sum.gpu_active_count, 1U);
    EXPECT_EQ(sum.gpu_high_count, 0U);
}

TEST(Summary, CpuOnlyRunHasNoGpuAggregates) {
    const std::vector<TelemetrySample> s = {cpu(0, 100.0), cpu(1, 90.0)};
    const auto sum = summarize(s);
    EXPECT_EQ(sum.gpu_samples, 0U);
    EXPECT_FALSE(sum.mean_gpu_util_active.has_value());
    EXPECT_FALSE(sum.mean_gpu_power_active.has_value());
    EXPECT_FALSE(sum.mean_gpu_power_high.has_value());
}

TEST(Summary, EmptyWindow) {
    const auto sum = summarize({});
    EXPECT_EQ(sum.count, 0U);
    EXPECT_FALSE(sum.mean_active_cores.has_value());
    EXPECT_FALSE(sum.max_active_cores.has_value());
}

TEST(Summary, WindowIsInclusiveAndDisjoint) {
    const std::vector<TelemetrySample> s = {cpu(5, 1.0), cpu(10, 1.0), cpu(15, 1.0),
                                            cpu(20, 1.0), cpu(25, 1.0)};
    EXPECT_EQ(samples_in_window(s, 10, 20).size(), 3U);
    EXPECT_EQ(samples_in_window(s, 11, 19).size(), 1U);
    EXPECT_EQ(samples_in_window(s, 26, 30).size(), 0U);
    // adjacent trials never share a sample when windows do not overlap
    EXPECT_EQ(samples_in_window(s, 0, 12).size() + samples_in_window(s, 13, 30).size(), s.size());
}

TEST(GpuLine, Parses) {
    auto r = parse_gpu_line("42, 100.5");
    ASSERT_TRUE(r.has_value());
    EXPECT_DOUBLE_EQ(r->util_pct, 42.0);
    EXPECT_DOUBLE_EQ(r->power_w, 100.5);
    EXPECT_TRUE(parse_gpu_line("42,7\n").has_value());
    EXPECT_FALSE(parse_gpu_line("").has_value());
    EXPECT_FALSE(parse_gpu_line("[N/A], 3").has_value());
    EXPECT_FALSE(parse_gpu_line("42").has_value());
}

TEST(GpuLine, CommandAdapter) {
    CommandGpuAdapter ok("echo 42,100");
    auto r = ok.query();
    ASSERT_TRUE(r.has_value());
    EXPECT_DOUBLE_EQ(r->util_pct, 42.0);
    EXPECT_DOUBLE_EQ(r->power_w, 100.0);
    CommandGpuAdapter bad("echo nothing-useful");
    EXPECT_FALSE(bad.query().has_value());
}

TEST(Queue, DropsWhenFullAndCounts) {
    SampleQueue q(2);
    EXPECT_TRUE(q.try_push(cpu(0, 1.0)));
    EXPECT_TRUE(q.try_push(cpu(1, 1.0)));
    EXPECT_FALSE(q.try_push(cpu(2, 1.0)));
    EXPECT_FALSE(q.try_push(cpu(3, 1.0)));
    EXPECT_EQ(q.dropped(), 2U);
    const auto got = q.drain();
    ASSERT_EQ(got.size(), 2U);
    EXPECT_EQ(got[0].mono_ns, 0);
    EXPECT_EQ(got[1].mono_ns, 1);
    EXPECT_TRUE(q.try_push(cpu(4, 1.0)));
}

class FixedGpu final : public GpuAdapter {
public:
    std::optional<GpuReading> query() override { return GpuReading{60.0, 20.0}; }
};

TEST(Sampler, PeriodicSamplesWithTags) {
    SamplerOptions opts;
    opts.period = 20ms;
    opts.gpu = std::make_shared<FixedGpu>();
    Sampler s(opts);
    s.set_tag(TrialTag{"ref-st", 4, 6, 1});
    s.start();
    EXPECT_TRUE(s.running());
    std::this_thread::sleep_for(300ms);
    s.stop();
    EXPECT_FALSE(s.running());
    s.stop();
    const auto got = s.drain();
    // nominally 15 ticks; allow generous scheduling jitter
    EXPECT_GE(got.size(), 5U);
    EXPECT_LE(got.size(), 17U);
    for (std::size_t i = 0; i < got.size(); ++i) {
        EXPECT_DOUBLE_EQ(got[i].active_cores, got[i].cpu_util_pct / 100.0);
        EXPECT_GE(got[i].cpu_util_pct, 0.0);
        ASSERT_TRUE(got[i].tag.has_value());
        EXPECT_EQ(*got[i].tag, (TrialTag{"ref-st", 4, 6, 1}));
        EXPECT_DOUBLE_EQ(*got[i].gpu_util_pct, 60.0);
        if (i > 0) {
            EXPECT_GT(got[i].mono_ns, got[i - 1].mono_ns);
        }
    }
}

TEST(Sampler, BusyThreadShowsUp) {
    SamplerOptions opts;
    opts.period = 50ms;
    Sampler s(opts);
    s.start();
    const auto until = std::chrono::steady_clock::now() + 400ms;
    volatile double sink = 0.0;
    while (std::chrono::steady_clock::now() < until) {
        sink = sink + 1.0;
    }
    s.stop();
    const auto got = s.drain();
    ASSERT_FALSE(got.empty());
    double best = 0.0;
    for (const auto& x : got) {
        best = std::max(best, x.cpu_util_pct);
    }
    EXPECT_GT(best, 30.0);
}

TEST(Sampler, TinyQueueCountsDrops) {
    SamplerOptions opts;
    opts.period = 5ms;
    opts.queue_capacity = 1;
    Sampler s(opts);
    s.start();
    std::this_thread::sleep_for(150ms);
    s.stop();
    EXPECT_EQ(s.drain().size(), 1U);
    EXPECT_GT(s.dropped(), 0U);
}

TEST(TelemetryCsv, RoundTripKeepsCoreIdentity) {
    const auto dir = edgeldpc::test::scratch_dir("telemetry_csv");
    const auto path = dir / "telemetry.csv";
    std::vector<TelemetrySample> in = {make_sample("2026-01-01T00:00:00.000000Z", 1, 1234.5678),
                                       make_sample("b", 2, 33.3, GpuReading{7.5, 99.25})};
    in[1].tag = TrialTag{"par-cpu", 2048, 10, 3};
    {
        TelemetryWriter w(path);
        w.write(std::span(in).first(1));
    }
    {
        TelemetryWriter w(path);
        w.write(std::span(in).subspan(1));
    }
    const auto out = read_telemetry_csv(path);
    ASSERT_EQ(out.size(), 2U);
    for (std::size_t i = 0; i < 2; ++i) {
        EXPECT_EQ(out[i].timestamp_utc, in[i].timestamp_utc);
        EXPECT_EQ(out[i].mono_ns, in[i].mono_ns);
        EXPECT_EQ(out[i].cpu_util_pct, in[i].cpu_util_pct);
        EXPECT_EQ(out[i].active_cores, out[i].cpu_util_pct / 100.0);
        EXPECT_EQ(out[i].gpu_util_pct, in[i].gpu_util_pct);
        EXPECT_EQ(out[i].gpu_power_w, in[i].gpu_power_w);
        EXPECT_EQ(out[i].tag, in[i].tag);
    }
    std::ifstream f(path);
    std::string header;
    std::getline(f, header);
    EXPECT_EQ(header, kTelemetryHeader);
    int lines = 1;
    for (std::string l; std::getline(f, l);) {
        ++lines;
    }
    EXPECT_EQ(lines, 3);
}

TEST(TelemetryCsv, MissingColumnIsNamed) {
    const auto dir = edgeldpc::test::scratch_dir("telemetry_csv_bad");
    const auto path = dir / "telemetry.csv";
    std::ofstream(path) << "timestamp_utc,mono_ns,active_cores\nx,1,2\n";
    try {
        read_telemetry_csv(path);
        FAIL() << "expected InputError";
    } catch (const edgeldpc::InputError& e) {
        EXPECT_NE(std::string(e.what()).find("cpu_util_pct"), std::string::npos);
    }
}

TEST(Time, UtcFormat) {
    const auto s = edgeldpc::utc_now();
    ASSERT_EQ(s.size(), 27U);
    EXPECT_EQ(s[4], '-');
    EXPECT_EQ(s[10], 'T');
    EXPECT_EQ(s[19], '.');
    EXPECT_EQ(s.back(), 'Z');
}

}  // namespace

// NOLINTEND(cppcoreguidelines-avoid-magic-numbers,readability-magic-numbers)
