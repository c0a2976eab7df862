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

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "edgeldpc/telemetry/sample.hpp"

namespace edgeldpc::telemetry {

/// Source of accelerator readings; nullopt means "no reading this time".
class GpuAdapter {
public:
    virtual ~GpuAdapter() = default;
    virtual std::optional<GpuReading> query() = 0;
};

/// Query understood by the stock accelerator tool; prints "util, power".
inline constexpr const char* kNvidiaSmiQuery =
    "nvidia-smi --query-gpu=utilization.gpu,power.draw --format=csv,noheader,nounits";

/// Runs a shell command per query and parses the first line as "util_pct,power_w".
class CommandGpuAdapter final : public GpuAdapter {
public:
    explicit CommandGpuAdapter(std::string command) : command_(std::move(command)) {}
    std::optional<GpuReading> query() override;
    const std::string& command() const { return command_; }

private:
    std::string command_;
};

/// "util,power" with optional whitespace; nullopt if malformed.
std::optional<GpuReading> parse_gpu_line(const std::string& line);

/// Process CPU time in seconds, summed over all threads.
double process_cpu_seconds();

/// Bounded FIFO that drops and counts pushes when full instead of blocking.
class SampleQueue {
public:
    explicit SampleQueue(std::size_t capacity);
    bool try_push(TelemetrySample s);
    std::vector<TelemetrySample> drain();
    std::uint64_t dropped() const;

private:
    mutable std::mutex mu_;
    std::deque<TelemetrySample> items_;
    std::size_t capacity_;
    std::uint64_t dropped_ = 0;
};

struct SamplerOptions {
    std::chrono::duration<double> period{1.0};
    std::size_t queue_capacity = 4096;
    std::shared_ptr<GpuAdapter> gpu;
};

/// Background sampler: one sample per period, tagged with the trial that is
/// running when it is taken. Ticks follow an absolute schedule, so jitter
/// does not accumulate.
class Sampler {
public:
    explicit Sampler(SamplerOptions options);
    ~Sampler();
    Sampler(const Sampler&) = delete;
    Sampler& operator=(const Sampler&) = delete;

    void start();
    /// Stops and joins the sampling thread; idempotent.
    void stop();
    bool running() const { return thread_.joinable(); }

    void set_tag(std::optional<TrialTag> tag);
    std::vector<TelemetrySample> drain() { return queue_.drain(); }
    std::uint64_t dropped() const { return queue_.dropped(); }
    const SamplerOptions& options() const { return options_; }

private:
    void loop(std::stop_token st);

    SamplerOptions options_;
    SampleQueue queue_;
    std::mutex tag_mu_;
    std::optional<TrialTag> tag_;
    std::mutex wake_mu_;
    std::condition_variable_any wake_;
    std::jthread thread_;
};

}  // namespace edgeldpc::telemetry
