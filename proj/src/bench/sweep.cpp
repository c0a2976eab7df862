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

#include "edgeldpc/bench/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "edgeldpc/common/error.hpp"

namespace edgeldpc::bench {

std::string to_string(Preset p) {
    switch (p) {
        case Preset::baseline: return "baseline";
        case Preset::dense: return "dense";
        case Preset::full: return "full";
        case Preset::custom: return "custom";
    }
    return "unknown";
}

Preset parse_preset(std::string_view text) {
    for (auto p : {Preset::baseline, Preset::dense, Preset::full, Preset::custom}) {
        if (text == to_string(p)) {
            return p;
        }
    }
    throw ConfigError("unknown preset '" + std::string(text) +
                      "' (expected baseline, dense, full or custom)");
}

std::string to_string(Regime r) {
    switch (r) {
        case Regime::baseline: return "baseline";
        case Regime::dense: return "dense";
        case Regime::custom: return "custom";
    }
    return "unknown";
}

std::optional<Regime> parse_regime(std::string_view text) {
    for (auto r : {Regime::baseline, Regime::dense, Regime::custom}) {
        if (text == to_string(r)) {
            return r;
        }
    }
    return std::nullopt;
}

Regime classify_batch(std::uint32_t n_cw) {
    if (n_cw >= 1 && n_cw <= 1024 && (n_cw & (n_cw - 1)) == 0) {
        return Regime::baseline;
    }
    if (n_cw >= 2048 && n_cw <= 20480 && n_cw % 2048 == 0) {
        return Regime::dense;
    }
    return Regime::custom;
}

std::vector<std::uint32_t> baseline_batches() {
    std::vector<std::uint32_t> v;
    for (std::uint32_t n = 1; n <= 1024; n *= 2) {
        v.push_back(n);
    }
    return v;
}

std::vector<std::uint32_t> dense_batches() {
    std::vector<std::uint32_t> v;
    for (std::uint32_t j = 1; j <= 10; ++j) {
        v.push_back(2048 * j);
    }
    return v;
}

std::vector<std::uint32_t> default_iterations() {
    std::vector<std::uint32_t> v;
    for (std::uint32_t i = 4; i <= 22; i += 2) {
        v.push_back(i);
    }
    return v;
}

namespace {

std::vector<std::uint32_t> normalized(std::vector<std::uint32_t> v, const char* what) {
    if (v.empty()) {
        throw ConfigError(std::string("sweep: empty ") + what + " list");
    }
    if (std::find(v.begin(), v.end(), 0U) != v.end()) {
        throw ConfigError(std::string("sweep: ") + what + " values must be positive");
    }
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::uint32_t parse_u32(std::string_view s, std::string_view whole) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ConfigError("cannot parse '" + std::string(s) + "' in '" + std::string(whole) +
                          "' as a non-negative integer");
    }
    return v;
}

}  // namespace

SweepPlan build_sweep(Preset preset, const SweepOverrides& o) {
    SweepPlan plan;
    switch (preset) {
        case Preset::baseline: plan.batch_sizes = baseline_batches(); break;
        case Preset::dense: plan.batch_sizes = dense_batches(); break;
        case Preset::full:
            plan.batch_sizes = baseline_batches();
            for (auto n : dense_batches()) {
                plan.batch_sizes.push_back(n);
            }
            break;
        case Preset::custom:
            if (!o.batch_sizes) {
                throw ConfigError("sweep: the custom preset needs an explicit batch list");
            }
            break;
    }
    if (o.batch_sizes) {
        plan.batch_sizes = *o.batch_sizes;
    }
    plan.batch_sizes = normalized(plan.batch_sizes, "batch-size");
    plan.iteration_budgets =
        normalized(o.iteration_budgets.value_or(default_iterations()), "iteration");
    plan.inner_reps = o.inner_reps.value_or(10);
    plan.trial_count = o.trial_count.value_or(10);
    if (plan.inner_reps == 0 || plan.trial_count == 0) {
        throw ConfigError("sweep: inner repetitions and trial count must be >= 1");
    }
    plan.backends = o.backends.value_or(std::vector<std::string>{"ref-st", "par-cpu"});
    if (plan.backends.empty()) {
        throw ConfigError("sweep: empty backend list");
    }
    for (std::size_t i = 0; i < plan.backends.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (plan.backends[i] == plan.backends[j]) {
                throw ConfigError("sweep: backend '" + plan.backends[i] + "' listed twice");
            }
        }
    }
    for (auto n : plan.batch_sizes) {
        plan.regimes.push_back(classify_batch(n));
    }
    return plan;
}

std::vector<std::uint32_t> parse_u32_list(std::string_view text) {
    std::vector<std::uint32_t> out;
    if (text.find(':') != std::string_view::npos) {
        std::vector<std::uint32_t> parts;
        std::size_t start = 0;
        for (;;) {
            const auto colon = text.find(':', start);
            parts.push_back(parse_u32(text.substr(start, colon - start), text));
            if (colon == std::string_view::npos) {
                break;
            }
            start = colon + 1;
        }
        if (parts.size() < 2 || parts.size() > 3) {
            throw ConfigError("range '" + std::string(text) + "' must be first:last[:step]");
        }
        const auto step = parts.size() == 3 ? parts[2] : 1U;
        if (step == 0 || parts[1] < parts[0]) {
            throw ConfigError("range '" + std::string(text) + "' is empty or has step 0");
        }
        for (std::uint64_t v = parts[0]; v <= parts[1]; v += step) {
            out.push_back(static_cast<std::uint32_t>(v));
        }
        return out;
    }
    std::size_t start = 0;
    for (;;) {
        const auto comma = text.find(',', start);
        out.push_back(parse_u32(text.substr(start, comma - start), text));
        if (comma == std::string_view::npos) {
            return out;
        }
        start = comma + 1;
    }
}

std::vector<std::string> parse_name_list(std::string_view text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto comma = text.find(',', start);
        auto name = text.substr(start, comma - start);
        if (name.empty()) {
            throw ConfigError("empty name in list '" + std::string(text) + "'");
        }
        out.emplace_back(name);
        if (comma == std::string_view::npos) {
            return out;
        }
        start = comma + 1;
    }
}

}  // namespace edgeldpc::bench
