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
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "edgeldpc/bench/record.hpp"
#include "edgeldpc/bench/sweep.hpp"
#include "edgeldpc/codec/backend.hpp"
#include "edgeldpc/codec/decoder.hpp"
#include "edgeldpc/phychain/llr_batch.hpp"
#include "edgeldpc/telemetry/sampler.hpp"

namespace edgeldpc::bench {

struct TrialSpec {
    std::uint32_t trial = 0;
    std::uint32_t inner_reps = 10;
    std::uint32_t warmups = 1;
};

/// Everything one trial reads; nothing here is modified by the trial.
struct TrialInputs {
    const codec::Decoder* decoder = nullptr;
    codec::DecodeBackend* backend = nullptr;
    const phychain::LlrBatch* batch = nullptr;
    std::string llr_hash;
    double esn0_db = 0.0;
    telemetry::Sampler* sampler = nullptr;  // optional
};

/// Untimed warm-up decode(s), then M timed decodes. Each timed region spans
/// exactly one decode_batch call, which returns only after the backend has
/// finished the whole batch. A backend failure yields a failed record
/// (error set, metrics absent) instead of an exception.
BenchRecord run_trial(const TrialSpec& spec, const TrialInputs& in, codec::DecodeOutcome& scratch);

struct CampaignConfig {
    SweepPlan plan;
    std::uint32_t k_info = 512;
    std::uint32_t n_coded = 1024;
    phychain::ChannelConfig channel = phychain::ChannelConfig::from_db(10.0, 1);
    phychain::Demapper demapper = phychain::Demapper::max_log;
    codec::CnRule cn_rule = codec::CnRule::sum_product;
    float nms_alpha = 0.75F;
    codec::BackendOptions backend_options;
    /// Threads for LLR generation (0 = all cores); results never depend on it.
    unsigned generation_lanes = 0;
    std::filesystem::path out_dir;
    std::filesystem::path data_dir;
    bool resume = false;
    bool telemetry = true;
    telemetry::SamplerOptions sampler;
    std::string gpu_command;
    /// Progress hook, called after every trial (including skipped ones: record null).
    std::function<void(const BenchRecord*, std::size_t done, std::size_t total)> on_progress;
};

struct CampaignResult {
    std::vector<BenchRecord> records;  // trials executed by this invocation
    std::size_t skipped = 0;           // already present when resuming
    std::size_t failed = 0;
    std::uint64_t telemetry_dropped = 0;
};

inline constexpr const char* kResultsFile = "results.csv";
inline constexpr const char* kTelemetryFile = "telemetry.csv";
inline constexpr const char* kStateFile = "campaign.state";
inline constexpr const char* kManifestFile = "run_manifest.json";

/// Loop order: N_cw, then I, then backend, then trial. One LlrBatch per N_cw
/// is generated up front and reused for every I, backend and trial; its
/// content hash is re-checked after the last trial. Rows are appended to
/// results.csv as they finish. campaign.state reads "in_progress" until the
/// sweep completes; with resume, rows already present are skipped.
/// Throws ConfigError if the directory holds results but resume is off, or
/// the stored run manifest describes a different campaign.
CampaignResult run_campaign(const CampaignConfig& cfg,
                            const codec::BackendRegistry& registry =
                                codec::BackendRegistry::with_builtins());

/// Human-readable plan summary used by --dry-run.
std::string describe_plan(const SweepPlan& plan);

}  // namespace edgeldpc::bench
