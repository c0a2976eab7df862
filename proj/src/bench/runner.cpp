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

#include "edgeldpc/bench/runner.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "edgeldpc/common/error.hpp"
#include "edgeldpc/common/time.hpp"
#include "edgeldpc/construction/code_config.hpp"
#include "edgeldpc/telemetry/csv_io.hpp"
#include "json.hpp"

namespace edgeldpc::bench {

namespace fs = std::filesystem;
using nlohmann::json;

BenchRecord run_trial(const TrialSpec& spec, const TrialInputs& in, codec::DecodeOutcome& scratch) {
    if (in.decoder == nullptr || in.backend == nullptr || in.batch == nullptr) {
        throw InputError("run_trial: decoder, backend and batch are required");
    }
    if (spec.inner_reps == 0) {
        throw InputError("run_trial: inner repetitions must be >= 1");
    }
    BenchRecord rec;
    rec.backend = std::string(in.backend->name());
    rec.n_cw = in.batch->n_cw;
    rec.iters = in.decoder->params().iterations;
    rec.trial = spec.trial;
    rec.regime = to_string(classify_batch(rec.n_cw));
    rec.llr_hash = in.llr_hash;
    rec.cn_rule = codec::to_string(in.decoder->params().cn_rule);
    rec.esn0_db = in.esn0_db;
    rec.timestamp_utc = utc_now();
    rec.inner_ns.reserve(spec.inner_reps);

    if (in.sampler != nullptr) {
        in.sampler->set_tag(telemetry::TrialTag{rec.backend, rec.n_cw, rec.iters, rec.trial});
    }
    const auto view = in.batch->view();
    rec.window_begin_ns = mono_now_ns();
    try {
        for (std::uint32_t w = 0; w < spec.warmups; ++w) {
            const auto t0 = MonoClock::now();
            codec::decode_batch_into(view, *in.decoder, *in.backend, scratch);
            const auto t1 = MonoClock::now();
            rec.warmup_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        }
        for (std::uint32_t m = 0; m < spec.inner_reps; ++m) {
            const auto t0 = MonoClock::now();
            codec::decode_batch_into(view, *in.decoder, *in.backend, scratch);
            const auto t1 = MonoClock::now();
            rec.inner_ns.push_back(
                std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
        }
        auto m = derive_metrics(rec.inner_ns, rec.n_cw, in.decoder->config().k_info);
        rec.inner_ms = std::move(m.inner_ms);
        rec.t_dec_ms = m.t_dec_ms;
        rec.t_cb_ms = m.t_cb_ms;
        rec.thr_bps = m.thr_bps;
        rec.median_ms = m.median_ms;
    } catch (const std::exception& e) {
        rec.error = e.what();
    }
    rec.window_end_ns = mono_now_ns();
    if (in.sampler != nullptr) {
        in.sampler->set_tag(std::nullopt);
    }
    return rec;
}

std::string describe_plan(const SweepPlan& plan) {
    std::ostringstream ss;
    auto list = [&](const auto& v) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            ss << (i ? "," : "") << v[i];
        }
    };
    ss << "batch sizes (" << plan.batch_sizes.size() << "): ";
    list(plan.batch_sizes);
    ss << "\niteration budgets (" << plan.iteration_budgets.size() << "): ";
    list(plan.iteration_budgets);
    ss << "\nbackends: ";
    list(plan.backends);
    ss << "\nconfigurations per backend: " << plan.configurations()
       << "\ntrials per configuration: " << plan.trial_count
       << "\ntimed decodes per trial: " << plan.inner_reps << " (+1 warm-up)"
       << "\nrecords: " << plan.total_trials() << '\n';
    return ss.str();
}

namespace {

json plan_json(const SweepPlan& plan) {
    std::vector<std::string> regimes;
    for (auto r : plan.regimes) {
        regimes.push_back(to_string(r));
    }
    return json{{"batch_sizes", plan.batch_sizes},
                {"regimes", regimes},
                {"iteration_budgets", plan.iteration_budgets},
                {"inner_reps", plan.inner_reps},
                {"warmups_per_trial", 1},
                {"trial_count", plan.trial_count},
                {"backends", plan.backends}};
}

json identity_json(const CampaignConfig& cfg, const construction::CodeConfig& code,
                   const std::string& fingerprint) {
    return json{
        {"code",
         {{"k_info", code.k_info},
          {"n_coded", code.n_coded},
          {"base_graph", construction::to_string(code.bg_id)},
          {"z", code.z()},
          {"i_ls", code.lifting.set_index},
          {"k_lifted", code.k_lifted},
          {"num_filler", code.num_filler},
          {"punctured_cols", code.punctured_cols},
          {"describe", code.describe()}}},
        {"channel",
         {{"esn0_db", cfg.channel.es_over_n0_db},
          {"n0", cfg.channel.n0},
          {"seed", cfg.channel.seed},
          {"noiseless", cfg.channel.noiseless},
          {"modulation", "16-QAM"}}},
        {"demapper", phychain::to_string(cfg.demapper)},
        {"decoder",
         {{"cn_rule", codec::to_string(cfg.cn_rule)},
          {"nms_alpha", cfg.nms_alpha},
          {"schedule", "flooding"},
          {"early_stop", false}}},
        {"plan", plan_json(cfg.plan)},
        {"llr_fingerprint", fingerprint}};
}

void write_text(const fs::path& path, const std::string& text) {
    const auto tmp = fs::path(path.string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << text;
        out.flush();
        if (!out) {
            throw IoError("cannot write " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        throw IoError("cannot replace " + path.string() + ": " + ec.message());
    }
}

using TrialKey = std::tuple<std::string, std::uint32_t, std::uint32_t, std::uint32_t>;

}  // namespace

CampaignResult run_campaign(const CampaignConfig& cfg, const codec::BackendRegistry& registry) {
    const auto& plan = cfg.plan;
    for (const auto& b : plan.backends) {
        if (!registry.contains(b)) {
            throw BackendError("backend '" + b + "' is not registered");
        }
    }
    if (cfg.out_dir.empty()) {
        throw ConfigError("campaign: output directory is required");
    }
    std::error_code ec;
    fs::create_directories(cfg.out_dir, ec);
    if (ec) {
        throw IoError("cannot create " + cfg.out_dir.string() + ": " + ec.message());
    }

    const auto code = construction::make_code(
        cfg.k_info, cfg.n_coded,
        cfg.data_dir.empty() ? construction::default_data_dir() : cfg.data_dir);
    const auto fingerprint =
        to_hex(phychain::batch_fingerprint(code.config, cfg.channel, cfg.demapper));
    const auto identity = identity_json(cfg, code.config, fingerprint);

    const auto results_path = cfg.out_dir / kResultsFile;
    const auto manifest_path = cfg.out_dir / kManifestFile;
    std::set<TrialKey> done;
    std::map<std::string, std::string> known_hashes;
    json manifest;
    const bool have_results = fs::exists(results_path) && fs::file_size(results_path) > 0;
    if (have_results && !cfg.resume) {
        throw ConfigError(results_path.string() +
                          " already exists; pass --resume or choose another output directory");
    }
    if (cfg.resume && fs::exists(manifest_path)) {
        std::ifstream in(manifest_path);
        json old;
        try {
            old = json::parse(in);
        } catch (const json::exception& e) {
            throw ConfigError("cannot parse " + manifest_path.string() + ": " + e.what());
        }
        if (old.value("identity", json{}) != identity) {
            throw ConfigError(manifest_path.string() +
                              " describes a different campaign; refusing to resume");
        }
        if (old.contains("llr_batches")) {
            known_hashes = old["llr_batches"].get<std::map<std::string, std::string>>();
        }
    }
    if (cfg.resume && have_results) {
        for (const auto& r : read_results_csv(results_path)) {
            if (!r.failed()) {
                done.emplace(r.backend, r.n_cw, r.iters, r.trial);
                known_hashes.emplace(std::to_string(r.n_cw), r.llr_hash);
            }
        }
    }

    std::map<std::string, std::unique_ptr<codec::DecodeBackend>> backends;
    json lanes = json::object();
    for (const auto& b : plan.backends) {
        backends[b] = registry.create(b, cfg.backend_options);
        lanes[b] = backends[b]->capabilities().max_parallel_lanes;
    }

    auto save_manifest = [&](const char* state) {
        manifest = json{{"identity", identity},
                        {"backend_lanes", lanes},
                        {"host_logical_cores", std::thread::hardware_concurrency()},
                        {"telemetry",
                         {{"enabled", cfg.telemetry},
                          {"period_s", cfg.sampler.period.count()},
                          {"gpu_command", cfg.gpu_command}}},
                        {"llr_batches", known_hashes},
                        {"state", state}};
        write_text(manifest_path, manifest.dump(2) + "\n");
        write_text(cfg.out_dir / kStateFile, std::string(state) + "\n");
    };
    save_manifest("in_progress");

    std::unique_ptr<telemetry::Sampler> sampler;
    std::unique_ptr<telemetry::TelemetryWriter> tele_out;
    if (cfg.telemetry) {
        auto opts = cfg.sampler;
        if (!cfg.gpu_command.empty()) {
            opts.gpu = std::make_shared<telemetry::CommandGpuAdapter>(cfg.gpu_command);
        }
        sampler = std::make_unique<telemetry::Sampler>(std::move(opts));
        tele_out = std::make_unique<telemetry::TelemetryWriter>(cfg.out_dir / kTelemetryFile);
        sampler->start();
    }
    ResultsWriter results(results_path);

    CampaignResult result;
    const std::size_t total = plan.total_trials();
    std::size_t progress = 0;
    auto flush_telemetry = [&]() -> std::vector<telemetry::TelemetrySample> {
        if (!sampler) {
            return {};
        }
        auto samples = sampler->drain();
        tele_out->write(samples);
        return samples;
    };

    codec::DecodeOutcome scratch;
    for (auto n_cw : plan.batch_sizes) {
        std::size_t pending = 0;
        for (auto iters : plan.iteration_budgets) {
            for (const auto& b : plan.backends) {
                for (std::uint32_t t = 0; t < plan.trial_count; ++t) {
                    pending += done.count({b, n_cw, iters, t}) == 0 ? 1 : 0;
                }
            }
        }
        if (pending == 0) {
            const auto skipped = plan.iteration_budgets.size() * plan.backends.size() *
                                 plan.trial_count;
            result.skipped += skipped;
            progress += skipped;
            if (cfg.on_progress) {
                cfg.on_progress(nullptr, progress, total);
            }
            continue;
        }

        const auto batch = phychain::build_llr_batch(n_cw, code, cfg.channel,
                                                     {cfg.demapper, cfg.generation_lanes});
        const auto hash = to_hex(phychain::content_hash(batch));
        const auto key = std::to_string(n_cw);
        if (auto it = known_hashes.find(key); it != known_hashes.end() && it->second != hash) {
            throw ConfigError("regenerated LLR batch for N_cw=" + key +
                              " does not match the hash stored with earlier results");
        }
        known_hashes[key] = hash;
        save_manifest("in_progress");

        for (auto iters : plan.iteration_budgets) {
            const codec::Decoder decoder(
                code, codec::DecodeParams{iters, cfg.cn_rule, cfg.nms_alpha, false});
            for (const auto& b : plan.backends) {
                for (std::uint32_t t = 0; t < plan.trial_count; ++t) {
                    ++progress;
                    if (done.count({b, n_cw, iters, t}) != 0) {
                        ++result.skipped;
                        if (cfg.on_progress) {
                            cfg.on_progress(nullptr, progress, total);
                        }
                        continue;
                    }
                    TrialInputs in{&decoder, backends[b].get(), &batch, hash,
                                   cfg.channel.es_over_n0_db, sampler.get()};
                    auto rec = run_trial(TrialSpec{t, plan.inner_reps, 1}, in, scratch);
                    const auto samples = flush_telemetry();
                    rec.telemetry = telemetry::summarize(
                        telemetry::samples_in_window(samples, rec.window_begin_ns,
                                                     rec.window_end_ns));
                    results.write(rec);
                    result.failed += rec.failed() ? 1 : 0;
                    if (cfg.on_progress) {
                        cfg.on_progress(&rec, progress, total);
                    }
                    result.records.push_back(std::move(rec));
                }
            }
        }
        if (to_hex(phychain::content_hash(batch)) != hash) {
            throw std::logic_error("LLR batch for N_cw=" + key + " changed during its trials");
        }
    }

    if (sampler) {
        sampler->stop();
        flush_telemetry();
        result.telemetry_dropped = sampler->dropped();
    }
    save_manifest("complete");
    return result;
}

}  // namespace edgeldpc::bench
