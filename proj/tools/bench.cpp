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

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "edgeldpc/bench/runner.hpp"
#include "edgeldpc/bench/sweep.hpp"
#include "edgeldpc/common/error.hpp"
#include "edgeldpc/construction/base_graph.hpp"
#include "edgeldpc/report/report.hpp"

namespace {

using namespace edgeldpc;

struct RunArgs {
    std::string preset = "full";
    std::string backends;
    std::string iters;
    std::string batches;
    std::uint64_t seed = 1;
    double esn0_db = 10.0;
    std::string out = "campaign";
    std::string telemetry = "on";
    double telemetry_period = 1.0;
    std::string gpu_cmd;
    bool resume = false;
    std::uint32_t trials = 0;
    std::uint32_t reps = 0;
    unsigned lanes = 0;
    std::string cn_rule = "sum_product";
    float nms_alpha = 0.75F;
    std::string demapper = "max_log";
    std::string data_dir;
    bool dry_run = false;
    bool quiet = false;
};

struct ReportArgs {
    std::string in = "campaign";
    std::string out;
    double slot_ms = report::kDefaultSlotMs;
    std::string picks = "4,10,20";
    std::string reference = "ref-st";
};

int do_run(const RunArgs& a) {
    bench::SweepOverrides o;
    if (!a.batches.empty()) {
        o.batch_sizes = bench::parse_u32_list(a.batches);
    }
    if (!a.iters.empty()) {
        o.iteration_budgets = bench::parse_u32_list(a.iters);
    }
    if (!a.backends.empty()) {
        o.backends = bench::parse_name_list(a.backends);
    }
    if (a.trials != 0) {
        o.trial_count = a.trials;
    }
    if (a.reps != 0) {
        o.inner_reps = a.reps;
    }
    bench::CampaignConfig cfg;
    cfg.plan = bench::build_sweep(bench::parse_preset(a.preset), o);
    if (a.dry_run) {
        std::cout << bench::describe_plan(cfg.plan);
        return 0;
    }
    const auto rule = codec::parse_cn_rule(a.cn_rule);
    if (!rule) {
        throw ConfigError("unknown check-node rule '" + a.cn_rule + "'");
    }
    const auto demapper = phychain::parse_demapper(a.demapper);
    if (!demapper) {
        throw ConfigError("unknown demapper '" + a.demapper + "'");
    }
    if (a.telemetry != "on" && a.telemetry != "off") {
        throw ConfigError("--telemetry expects on or off");
    }
    cfg.channel = phychain::ChannelConfig::from_db(a.esn0_db, a.seed);
    cfg.demapper = *demapper;
    cfg.cn_rule = *rule;
    cfg.nms_alpha = a.nms_alpha;
    cfg.backend_options.lanes = a.lanes;
    cfg.out_dir = a.out;
    cfg.data_dir = a.data_dir.empty() ? construction::default_data_dir()
                                      : std::filesystem::path(a.data_dir);
    cfg.resume = a.resume;
    cfg.telemetry = a.telemetry == "on";
    cfg.sampler.period = std::chrono::duration<double>(a.telemetry_period);
    cfg.gpu_command = a.gpu_cmd;
    if (!a.quiet) {
        cfg.on_progress = [](const bench::BenchRecord* r, std::size_t done, std::size_t total) {
            if (r == nullptr) {
                return;
            }
            if (r->failed()) {
                std::fprintf(stderr, "[%zu/%zu] %s N_cw=%u I=%u trial=%u FAILED: %s\n", done, total,
                             r->backend.c_str(), r->n_cw, r->iters, r->trial,
                             r->error.value_or("").c_str());
            } else {
                std::fprintf(stderr, "[%zu/%zu] %s N_cw=%u I=%u trial=%u t_dec=%.3f ms\n", done,
                             total, r->backend.c_str(), r->n_cw, r->iters, r->trial, *r->t_dec_ms);
            }
        };
    }
    const auto res = bench::run_campaign(cfg);
    std::printf("ran %zu trials, skipped %zu, failed %zu, telemetry samples dropped %llu\n",
                res.records.size(), res.skipped, res.failed,
                static_cast<unsigned long long>(res.telemetry_dropped));
    std::printf("results in %s\n", a.out.c_str());
    return res.failed == 0 ? 0 : 3;
}

int do_report(const ReportArgs& a) {
    report::ReportOptions opts;
    opts.slot_ms = a.slot_ms;
    opts.picks = bench::parse_u32_list(a.picks);
    opts.reference_backend = a.reference;
    const auto out = a.out.empty() ? std::filesystem::path(a.in) / "report"
                                   : std::filesystem::path(a.out);
    report::write_report(a.in, out, opts);
    std::printf("report written to %s\n", out.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"LDPC decode throughput benchmark"};
    app.require_subcommand(1);

    RunArgs run;
    auto* r = app.add_subcommand("run", "Run a benchmark campaign");
    r->add_option("--preset", run.preset, "baseline, dense, full or custom")
        ->capture_default_str();
    r->add_option("--backends", run.backends, "Comma list (default ref-st,par-cpu)");
    r->add_option("--iters", run.iters, "Iteration budgets, 4:22:2 or 4,10,20");
    r->add_option("--batches", run.batches, "Batch sizes, overrides the preset list");
    r->add_option("--seed", run.seed, "Channel and message seed")->capture_default_str();
    r->add_option("--esn0-db", run.esn0_db, "Es/N0 in dB")->capture_default_str();
    r->add_option("--out", run.out, "Output directory")->capture_default_str();
    r->add_option("--telemetry", run.telemetry, "on or off")->capture_default_str();
    r->add_option("--telemetry-period", run.telemetry_period, "Sampling period in seconds")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    r->add_option("--gpu-cmd", run.gpu_cmd,
                  std::string("Command printing 'util,power' per query, e.g. ") +
                      telemetry::kNvidiaSmiQuery);
    r->add_flag("--resume", run.resume, "Skip trials already in results.csv");
    r->add_option("--trials", run.trials, "Trials per configuration (default 10)");
    r->add_option("--reps", run.reps, "Timed decodes per trial (default 10)");
    r->add_option("--lanes", run.lanes, "Worker lanes for par-cpu (0 = all cores)")
        ->capture_default_str();
    r->add_option("--cn-rule", run.cn_rule, "sum_product or normalized_min_sum")
        ->capture_default_str();
    r->add_option("--nms-alpha", run.nms_alpha, "Min-sum scaling")->capture_default_str();
    r->add_option("--demapper", run.demapper, "max_log or exact")->capture_default_str();
    r->add_option("--data-dir", run.data_dir, "Directory with base-graph tables");
    r->add_flag("--dry-run", run.dry_run, "Print the plan and exit");
    r->add_flag("-q,--quiet", run.quiet, "No per-trial progress");

    ReportArgs rep;
    auto* p = app.add_subcommand("report", "Aggregate a campaign into report tables");
    p->add_option("--in", rep.in, "Campaign directory")->capture_default_str();
    p->add_option("--out", rep.out, "Report directory (default <in>/report)");
    p->add_option("--slot-ms", rep.slot_ms, "Slot length in ms")->capture_default_str();
    p->add_option("--picks", rep.picks, "Iteration budgets for the service-time table")
        ->capture_default_str();
    p->add_option("--reference", rep.reference, "Reference backend for speedups")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);
    try {
        if (r->parsed()) {
            return do_run(run);
        }
        return do_report(rep);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "bench: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "bench: %s\n", e.what());
        return 1;
    }
}
