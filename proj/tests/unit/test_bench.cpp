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

#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "edgeldpc/bench/record.hpp"
#include "edgeldpc/bench/runner.hpp"
#include "edgeldpc/bench/sweep.hpp"
#include "edgeldpc/common/error.hpp"
#include "test_support.hpp"

// NOLINTBEGIN(cppcoreguidelines-avoid-magic-numbers,readability-magic-numbers)

namespace {

using namespace edgeldpc::bench;
using edgeldpc::ConfigError;
using edgeldpc::InputError;
namespace fs = std::filesystem;

TEST(Sweep, PresetSizes) {
    const auto dense = build_sweep(Preset::dense);
    EXPECT_EQ(dense.batch_sizes.size(), 10U);
    EXPECT_EQ(dense.batch_sizes.front(), 2048U);
    EXPECT_EQ(dense.batch_sizes.back(), 20480U);
    EXPECT_EQ(dense.iteration_budgets, (std::vector<std::uint32_t>{4, 6, 8, 10, 12, 14, 16, 18,
                                                                   20, 22}));
    EXPECT_EQ(dense.total_trials(), 2000U);

    const auto base = build_sweep(Preset::baseline);
    EXPECT_EQ(base.batch_sizes.size(), 11U);
    EXPECT_EQ(base.batch_sizes.front(), 1U);
    EXPECT_EQ(base.batch_sizes.back(), 1024U);

    const auto full = build_sweep(Preset::full);
    EXPECT_EQ(full.configurations(), 210U);
    EXPECT_EQ(full.inner_reps, 10U);
    EXPECT_EQ(full.trial_count, 10U);
    EXPECT_EQ(full.backends, (std::vector<std::string>{"ref-st", "par-cpu"}));
    EXPECT_EQ(full.total_trials(), 4200U);
    for (std::size_t i = 0; i < full.batch_sizes.size(); ++i) {
        EXPECT_EQ(full.regimes[i], i < 11 ? Regime::baseline : Regime::dense);
    }
}

TEST(Sweep, Classification) {
    EXPECT_EQ(classify_batch(1), Regime::baseline);
    EXPECT_EQ(classify_batch(1024), Regime::baseline);
    EXPECT_EQ(classify_batch(2048), Regime::dense);
    EXPECT_EQ(classify_batch(20480), Regime::dense);
    EXPECT_EQ(classify_batch(3), Regime::custom);
    EXPECT_EQ(classify_batch(22528), Regime::custom);
    EXPECT_EQ(classify_batch(0), Regime::custom);
}

TEST(Sweep, OverridesAreSortedAndDeduplicated) {
    SweepOverrides o;
    o.iteration_budgets = std::vector<std::uint32_t>{10, 4, 10};
    o.trial_count = 3;
    o.backends = std::vector<std::string>{"par-cpu"};
    const auto p = build_sweep(Preset::baseline, o);
    EXPECT_EQ(p.iteration_budgets, (std::vector<std::uint32_t>{4, 10}));
    EXPECT_EQ(p.total_trials(), 11U * 2U * 3U);
}

TEST(Sweep, Rejections) {
    EXPECT_THROW(build_sweep(Preset::custom), ConfigError);
    SweepOverrides empty;
    empty.iteration_budgets = std::vector<std::uint32_t>{};
    EXPECT_THROW(build_sweep(Preset::dense, empty), ConfigError);
    SweepOverrides zero;
    zero.batch_sizes = std::vector<std::uint32_t>{0, 4};
    EXPECT_THROW(build_sweep(Preset::custom, zero), ConfigError);
    SweepOverrides reps;
    reps.inner_reps = 0;
    EXPECT_THROW(build_sweep(Preset::dense, reps), ConfigError);
    SweepOverrides dup;
    dup.backends = std::vector<std::string>{"ref-st", "ref-st"};
    EXPECT_THROW(build_sweep(Preset::dense, dup), ConfigError);
    EXPECT_THROW(parse_preset("everything"), ConfigError);
}

TEST(Sweep, ListParsing) {
    EXPECT_EQ(parse_u32_list("4:22:2"), default_iterations());
    EXPECT_EQ(parse_u32_list("1:3"), (std::vector<std::uint32_t>{1, 2, 3}));
    EXPECT_EQ(parse_u32_list("8,2,5"), (std::vector<std::uint32_t>{8, 2, 5}));
    EXPECT_THROW(parse_u32_list("4:2"), ConfigError);
    EXPECT_THROW(parse_u32_list("4:8:0"), ConfigError);
    EXPECT_THROW(parse_u32_list("4,,5"), ConfigError);
    EXPECT_THROW(parse_u32_list("-1"), ConfigError);
    EXPECT_THROW(parse_u32_list("x"), ConfigError);
    EXPECT_EQ(parse_name_list("ref-st,par-cpu"), (std::vector<std::string>{"ref-st", "par-cpu"}));
    EXPECT_THROW(parse_name_list("a,"), ConfigError);
}

TEST(Metrics, MeanAndMedian) {
    const std::vector<double> v = {1.0, 2.0, 3.0};
    EXPECT_EQ(mean_ms(v), 2.0);
    EXPECT_EQ(median({3.0, 1.0, 2.0, 10.0}), 2.5);
    EXPECT_THROW(mean_ms({}), InputError);
}

TEST(Metrics, ReferencePoint) {
    // 313.3 ms per batch of 2048 codewords of 512 bits
    const std::vector<std::int64_t> ns(10, 313'300'000);
    const auto m = derive_metrics(ns, 2048, 512);
    EXPECT_NEAR(m.t_dec_ms, 313.3, 1e-9);
    EXPECT_NEAR(m.t_cb_ms, 0.153, 5e-4);
    EXPECT_NEAR(m.thr_bps / 1e6, 3.3468, 1e-4);
    EXPECT_NEAR(m.median_ms, 313.3, 1e-9);
}

// The three identities must hold bit for bit for arbitrary sample sets.
TEST(Metrics, IdentitiesExact) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> dur(1, 5'000'000'000);
    const std::uint32_t batches[] = {1, 3, 7, 1000, 2048, 6144, 20480};
    for (int rep = 0; rep < 300; ++rep) {
        const std::size_t m_count = 1 + rep % 13;
        std::vector<std::int64_t> ns(m_count);
        for (auto& x : ns) {
            x = dur(rng);
        }
        const auto n = batches[rep % 7];
        const auto m = derive_metrics(ns, n, 512);
        double sum = 0.0;
        long double raw = 0.0L;
        for (std::size_t i = 0; i < m_count; ++i) {
            sum += m.inner_ms[i];
            raw += static_cast<long double>(ns[i]) / 1e6L;
            EXPECT_NEAR(m.inner_ms[i], ns[i] / 1e6, 1e-9 * (1 + ns[i] / 1e6));
        }
        ASSERT_EQ(m.t_dec_ms, sum / static_cast<double>(m_count));
        ASSERT_EQ(m.t_cb_ms * n, m.t_dec_ms);
        ASSERT_EQ(m.thr_bps, static_cast<double>(n) * 512.0 / (m.t_dec_ms / 1000.0));
        EXPECT_NEAR(m.t_dec_ms, static_cast<double>(raw / m_count), 1e-9 * m.t_dec_ms);
        EXPECT_NEAR(m.thr_bps * m.t_cb_ms, 512.0 * 1000.0, 512.0 * 1000.0 * 4e-16);
    }
}

TEST(Metrics, Rejections) {
    EXPECT_THROW(derive_metrics({}, 4, 512), InputError);
    const std::vector<std::int64_t> one = {5};
    EXPECT_THROW(derive_metrics(one, 0, 512), InputError);
    const std::vector<std::int64_t> neg = {-5};
    EXPECT_THROW(derive_metrics(neg, 1, 512), InputError);
}

TEST(ResultsCsv, RoundTripAndFailedRows) {
    const auto dir = edgeldpc::test::scratch_dir("results_csv");
    BenchRecord ok;
    ok.backend = "ref-st";
    ok.n_cw = 16;
    ok.iters = 6;
    ok.trial = 2;
    ok.regime = "baseline";
    ok.t_dec_ms = 1.25;
    ok.t_cb_ms = 1.25 / 16;
    ok.thr_bps = 16 * 512 / 1.25e-3;
    ok.llr_hash = std::string(64, 'a');
    ok.cn_rule = "sum_product";
    ok.esn0_db = 10.0;
    ok.timestamp_utc = "2026-01-01T00:00:00.000000Z";
    BenchRecord bad = ok;
    bad.trial = 3;
    bad.t_dec_ms.reset();
    bad.t_cb_ms.reset();
    bad.thr_bps.reset();
    bad.error = "boom";
    {
        ResultsWriter w(dir / "results.csv");
        w.write(ok);
        w.write(bad);
    }
    std::ifstream f(dir / "results.csv");
    std::string header;
    std::getline(f, header);
    EXPECT_EQ(header, kResultsHeader);
    const auto back = read_results_csv(dir / "results.csv");
    ASSERT_EQ(back.size(), 2U);
    EXPECT_EQ(back[0].backend, "ref-st");
    EXPECT_EQ(back[0].n_cw, 16U);
    EXPECT_EQ(back[0].trial, 2U);
    EXPECT_EQ(*back[0].t_dec_ms, 1.25);
    EXPECT_EQ(*back[0].thr_bps, ok.thr_bps);
    EXPECT_EQ(back[0].llr_hash, ok.llr_hash);
    EXPECT_FALSE(back[0].failed());
    EXPECT_TRUE(back[1].failed());
}

TEST(ResultsCsv, TornLastLineIgnored) {
    const auto dir = edgeldpc::test::scratch_dir("results_torn");
    std::ofstream(dir / "results.csv")
        << kResultsHeader << "\n"
        << "ref-st,1,4,0,1,1,512000,baseline,h,sum_product,10,t\n"
        << "ref-st,1,4,1,1,1,5";
    EXPECT_EQ(read_results_csv(dir / "results.csv").size(), 1U);
}

TEST(ResultsCsv, MissingColumnIsNamed) {
    const auto dir = edgeldpc::test::scratch_dir("results_bad");
    std::ofstream(dir / "results.csv") << "backend,n_cw,iters,trial\nref-st,1,4,0\n";
    try {
        read_results_csv(dir / "results.csv");
        FAIL() << "expected InputError";
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("t_dec_ms"), std::string::npos);
    }
}

class CountingBackend final : public edgeldpc::codec::DecodeBackend {
public:
    explicit CountingBackend(bool fail) : fail_(fail) {}
    std::string_view name() const override { return fail_ ? "broken" : "counting"; }
    edgeldpc::codec::BackendCapabilities capabilities() const override { return {}; }
    void decode(const edgeldpc::codec::Decoder& d, edgeldpc::codec::SoftMatrixView llrs,
                edgeldpc::codec::DecodeOutcome& out) override {
        ++calls;
        if (fail_) {
            throw std::runtime_error("device lost");
        }
        inner_->decode(d, llrs, out);
    }
    int calls = 0;

private:
    bool fail_;
    std::unique_ptr<edgeldpc::codec::DecodeBackend> inner_ = edgeldpc::codec::make_ref_st_backend();
};

const edgeldpc::construction::CodeInstance& k512_code() {
    static const auto code =
        edgeldpc::construction::make_code(512, 1024, edgeldpc::test::data_dir());
    return code;
}

TEST(Trial, WarmupExcludedFromSamples) {
    const auto batch = edgeldpc::phychain::build_llr_batch(
        3, k512_code(), edgeldpc::phychain::ChannelConfig::from_db(10.0, 1));
    const edgeldpc::codec::Decoder dec(k512_code(), {4});
    CountingBackend be(false);
    edgeldpc::codec::DecodeOutcome scratch;
    const auto rec = run_trial(TrialSpec{5, 4, 1}, TrialInputs{&dec, &be, &batch, "h", 10.0},
                               scratch);
    EXPECT_EQ(be.calls, 5);
    EXPECT_EQ(rec.inner_ns.size(), 4U);
    EXPECT_EQ(rec.inner_ms.size(), 4U);
    EXPECT_TRUE(rec.warmup_ms.has_value());
    EXPECT_FALSE(rec.failed());
    EXPECT_EQ(rec.trial, 5U);
    EXPECT_EQ(rec.iters, 4U);
    EXPECT_EQ(rec.n_cw, 3U);
    EXPECT_EQ(rec.regime, "custom");
    EXPECT_EQ(rec.backend, "counting");
    EXPECT_EQ(*rec.t_dec_ms, mean_ms(rec.inner_ms));
    EXPECT_EQ(*rec.t_cb_ms * 3, *rec.t_dec_ms);
    EXPECT_LE(rec.window_begin_ns, rec.window_end_ns);
}

TEST(Trial, BackendFailureBecomesFailedRecord) {
    const auto batch = edgeldpc::phychain::build_llr_batch(
        2, k512_code(), edgeldpc::phychain::ChannelConfig::from_db(10.0, 1));
    const edgeldpc::codec::Decoder dec(k512_code(), {4});
    CountingBackend be(true);
    edgeldpc::codec::DecodeOutcome scratch;
    const auto rec = run_trial(TrialSpec{0, 3, 1}, TrialInputs{&dec, &be, &batch, "h", 10.0},
                               scratch);
    EXPECT_TRUE(rec.failed());
    ASSERT_TRUE(rec.error.has_value());
    EXPECT_NE(rec.error->find("device lost"), std::string::npos);
    EXPECT_EQ(be.calls, 1);
}

CampaignConfig small_campaign(const fs::path& dir) {
    SweepOverrides o;
    o.batch_sizes = std::vector<std::uint32_t>{1, 3};
    o.iteration_budgets = std::vector<std::uint32_t>{2, 3};
    o.trial_count = 2;
    o.inner_reps = 2;
    CampaignConfig cfg;
    cfg.plan = build_sweep(Preset::custom, o);
    cfg.out_dir = dir;
    cfg.data_dir = edgeldpc::test::data_dir();
    cfg.sampler.period = std::chrono::milliseconds(5);
    cfg.backend_options.lanes = 2;
    return cfg;
}

std::vector<std::string> lines_of(const fs::path& p) {
    std::ifstream in(p);
    std::vector<std::string> out;
    for (std::string l; std::getline(in, l);) {
        out.push_back(l);
    }
    return out;
}

TEST(Campaign, RunsFullSweepAndWritesArtifacts) {
    const auto dir = edgeldpc::test::scratch_dir("campaign_full");
    const auto cfg = small_campaign(dir);
    std::size_t last_done = 0;
    auto with_progress = cfg;
    with_progress.on_progress = [&](const BenchRecord*, std::size_t done, std::size_t total) {
        EXPECT_EQ(done, last_done + 1);
        EXPECT_EQ(total, 16U);
        last_done = done;
    };
    const auto res = run_campaign(with_progress);
    EXPECT_EQ(res.records.size(), 16U);
    EXPECT_EQ(res.failed, 0U);
    EXPECT_EQ(last_done, 16U);

    const auto rows = read_results_csv(dir / kResultsFile);
    ASSERT_EQ(rows.size(), 16U);
    std::map<std::uint32_t, std::set<std::string>> hashes;
    std::set<std::tuple<std::string, std::uint32_t, std::uint32_t, std::uint32_t>> keys;
    for (const auto& r : rows) {
        hashes[r.n_cw].insert(r.llr_hash);
        keys.emplace(r.backend, r.n_cw, r.iters, r.trial);
        EXPECT_EQ(r.cn_rule, "sum_product");
        EXPECT_EQ(r.esn0_db, 10.0);
        EXPECT_EQ(r.regime, r.n_cw == 1 ? "baseline" : "custom");
    }
    EXPECT_EQ(keys.size(), 16U);
    ASSERT_EQ(hashes.size(), 2U);
    EXPECT_EQ(hashes[1].size(), 1U);
    EXPECT_EQ(hashes[3].size(), 1U);
    EXPECT_NE(*hashes[1].begin(), *hashes[3].begin());
    for (const auto& r : res.records) {
        EXPECT_EQ(r.inner_ns.size(), 2U);
        EXPECT_TRUE(r.warmup_ms.has_value());
        EXPECT_EQ(*r.t_cb_ms * r.n_cw, *r.t_dec_ms);
    }
    EXPECT_EQ(lines_of(dir / kStateFile), (std::vector<std::string>{"complete"}));
    EXPECT_TRUE(fs::exists(dir / kManifestFile));
    EXPECT_TRUE(fs::exists(dir / kTelemetryFile));
}

TEST(Campaign, ResumeSkipsCompletedTrials) {
    const auto dir = edgeldpc::test::scratch_dir("campaign_resume");
    auto cfg = small_campaign(dir);
    cfg.telemetry = false;
    run_campaign(cfg);
    const auto full = lines_of(dir / kResultsFile);
    ASSERT_EQ(full.size(), 17U);
    const auto first_hash = read_results_csv(dir / kResultsFile).front().llr_hash;

    // keep the header and five rows, as if the run had been interrupted
    {
        std::ofstream out(dir / kResultsFile, std::ios::trunc);
        for (std::size_t i = 0; i < 6; ++i) {
            out << full[i] << "\n";
        }
    }
    EXPECT_THROW(run_campaign(cfg), ConfigError);
    cfg.resume = true;
    const auto res = run_campaign(cfg);
    EXPECT_EQ(res.skipped, 5U);
    EXPECT_EQ(res.records.size(), 11U);
    const auto rows = read_results_csv(dir / kResultsFile);
    EXPECT_EQ(rows.size(), 16U);
    EXPECT_EQ(rows.back().llr_hash.empty(), false);
    EXPECT_EQ(rows.front().llr_hash, first_hash);

    const auto again = run_campaign(cfg);
    EXPECT_EQ(again.skipped, 16U);
    EXPECT_TRUE(again.records.empty());
}

TEST(Campaign, ResumeRefusesDifferentCampaign) {
    const auto dir = edgeldpc::test::scratch_dir("campaign_mismatch");
    auto cfg = small_campaign(dir);
    cfg.telemetry = false;
    run_campaign(cfg);
    cfg.resume = true;
    cfg.channel = edgeldpc::phychain::ChannelConfig::from_db(10.0, 2);
    EXPECT_THROW(run_campaign(cfg), ConfigError);
}

TEST(Campaign, UnknownBackendRejectedUpFront) {
    const auto dir = edgeldpc::test::scratch_dir("campaign_unknown");
    auto cfg = small_campaign(dir);
    cfg.plan.backends = {"ref-st", "warp-drive"};
    EXPECT_THROW(run_campaign(cfg), edgeldpc::BackendError);
    EXPECT_FALSE(fs::exists(dir / kResultsFile));
}

TEST(Campaign, DryRunDescription) {
    const auto text = describe_plan(build_sweep(Preset::full));
    EXPECT_NE(text.find("configurations per backend: 210"), std::string::npos);
    EXPECT_NE(text.find("timed decodes per trial: 10 (+1 warm-up)"), std::string::npos);
    EXPECT_NE(text.find("records: 4200"), std::string::npos);
}

}  // namespace

// NOLINTEND(cppcoreguidelines-avoid-magic-numbers,readability-magic-numbers)
