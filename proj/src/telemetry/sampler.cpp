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

#include "edgeldpc/telemetry/sampler.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <ctime>

#include "edgeldpc/common/error.hpp"
#include "edgeldpc/common/time.hpp"

namespace edgeldpc::telemetry {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' ||
                          s.back() == '\n')) {
        s.remove_suffix(1);
    }
    return s;
}

std::optional<double> parse_double(std::string_view s) {
    s = trim(s);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return v;
}

}  // namespace

std::optional<GpuReading> parse_gpu_line(const std::string& line) {
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
        return std::nullopt;
    }
    const auto util = parse_double(std::string_view(line).substr(0, comma));
    const auto power = parse_double(std::string_view(line).substr(comma + 1));
    if (!util || !power) {
        return std::nullopt;
    }
    return GpuReading{*util, *power};
}

std::optional<GpuReading> CommandGpuAdapter::query() {
    FILE* pipe = ::popen(command_.c_str(), "r");
    if (pipe == nullptr) {
        return std::nullopt;
    }
    std::array<char, 256> buf{};
    std::string line;
    if (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe) != nullptr) {
        line = buf.data();
    }
    // drain so the child never blocks on a full pipe
    while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe) != nullptr) {
    }
    const int status = ::pclose(pipe);
    if (status != 0) {
        return std::nullopt;
    }
    return parse_gpu_line(line);
}

double process_cpu_seconds() {
    return static_cast<double>(std::clock()) / static_cast<double>(CLOCKS_PER_SEC);
}

SampleQueue::SampleQueue(std::size_t capacity) : capacity_(capacity) {
    if (capacity_ == 0) {
        throw ConfigError("telemetry: queue capacity must be positive");
    }
}

bool SampleQueue::try_push(TelemetrySample s) {
    std::lock_guard lock(mu_);
    if (items_.size() >= capacity_) {
        ++dropped_;
        return false;
    }
    items_.push_back(std::move(s));
    return true;
}

std::vector<TelemetrySample> SampleQueue::drain() {
    std::lock_guard lock(mu_);
    std::vector<TelemetrySample> out(std::make_move_iterator(items_.begin()),
                                     std::make_move_iterator(items_.end()));
    items_.clear();
    return out;
}

std::uint64_t SampleQueue::dropped() const {
    std::lock_guard lock(mu_);
    return dropped_;
}

Sampler::Sampler(SamplerOptions options)
    : options_(std::move(options)), queue_(options_.queue_capacity) {
    if (!(options_.period.count() > 0.0)) {
        throw ConfigError("telemetry: sampling period must be positive");
    }
}

Sampler::~Sampler() { stop(); }

void Sampler::start() {
    if (thread_.joinable()) {
        return;
    }
    thread_ = std::jthread([this](std::stop_token st) { loop(st); });
}

void Sampler::stop() {
    if (!thread_.joinable()) {
        return;
    }
    thread_.request_stop();
    wake_.notify_all();
    thread_.join();
}

void Sampler::set_tag(std::optional<TrialTag> tag) {
    std::lock_guard lock(tag_mu_);
    tag_ = std::move(tag);
}

void Sampler::loop(std::stop_token st) {
    const auto period = std::chrono::duration_cast<MonoClock::duration>(options_.period);
    auto prev_wall = MonoClock::now();
    double prev_cpu = process_cpu_seconds();
    auto next = prev_wall + period;
    for (;;) {
        {
            std::unique_lock lock(wake_mu_);
            wake_.wait_until(lock, st, next, [] { return false; });
        }
        if (st.stop_requested()) {
            return;
        }
        const auto wall = MonoClock::now();
        const double cpu = process_cpu_seconds();
        const double dt = std::chrono::duration<double>(wall - prev_wall).count();
        const double util = dt > 0.0 ? (cpu - prev_cpu) / dt * 100.0 : 0.0;
        std::optional<GpuReading> gpu;
        if (options_.gpu) {
            gpu = options_.gpu->query();
        }
        auto s = make_sample(utc_now(), mono_ns(wall), util, gpu);
        {
            std::lock_guard lock(tag_mu_);
            s.tag = tag_;
        }
        queue_.try_push(std::move(s));
        prev_wall = wall;
        prev_cpu = cpu;
        next += period;
        const auto now = MonoClock::now();
        while (next <= now) {
            next += period;
        }
    }
}

}  // namespace edgeldpc::telemetry
