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

#include "edgeldpc/codec/backend.hpp"

#include <algorithm>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <thread>

#include "edgeldpc/common/error.hpp"

namespace edgeldpc::codec {

namespace {

class RefStBackend final : public DecodeBackend {
public:
    std::string_view name() const override { return "ref-st"; }
    BackendCapabilities capabilities() const override { return {1}; }

    void decode(const Decoder& decoder, SoftMatrixView llrs, DecodeOutcome& out) override {
        if (!decoder.fits(ws_)) {
            ws_ = decoder.make_workspace();
        }
        decoder.decode_rows(llrs, 0, llrs.rows, ws_, out);
    }

private:
    Decoder::Workspace ws_;
};

/// Persistent worker pool; each decode() hands lane i the i-th contiguous
/// slice of the batch and blocks until all lanes report back.
class ParCpuBackend final : public DecodeBackend {
public:
    explicit ParCpuBackend(unsigned lanes) : lanes_(lanes), workspaces_(lanes) {
        workers_.reserve(lanes_);
        for (unsigned i = 0; i < lanes_; ++i) {
            workers_.emplace_back([this, i](std::stop_token st) { worker_loop(st, i); });
        }
    }

    ~ParCpuBackend() override {
        {
            std::lock_guard lock(mu_);
            for (auto& w : workers_) {
                w.request_stop();
            }
        }
        start_cv_.notify_all();
    }

    std::string_view name() const override { return "par-cpu"; }
    BackendCapabilities capabilities() const override { return {lanes_}; }

    void decode(const Decoder& decoder, SoftMatrixView llrs, DecodeOutcome& out) override {
        std::unique_lock lock(mu_);
        job_ = Job{&decoder, llrs, &out};
        pending_ = lanes_;
        error_ = nullptr;
        ++generation_;
        start_cv_.notify_all();
        done_cv_.wait(lock, [&] { return pending_ == 0; });
        if (error_) {
            std::rethrow_exception(error_);
        }
    }

private:
    struct Job {
        const Decoder* decoder = nullptr;
        SoftMatrixView llrs;
        DecodeOutcome* out = nullptr;
    };

    void worker_loop(std::stop_token st, unsigned lane) {
        std::uint64_t seen = 0;
        for (;;) {
            Job job;
            {
                std::unique_lock lock(mu_);
                start_cv_.wait(lock, [&] { return st.stop_requested() || generation_ != seen; });
                if (st.stop_requested()) {
                    return;
                }
                seen = generation_;
                job = job_;
            }
            std::exception_ptr err;
            try {
                const std::size_t n = job.llrs.rows;
                const std::size_t begin = n * lane / lanes_;
                const std::size_t end = n * (lane + 1) / lanes_;
                if (begin < end) {
                    auto& ws = workspaces_[lane];
                    if (!job.decoder->fits(ws)) {
                        ws = job.decoder->make_workspace();
                    }
                    job.decoder->decode_rows(job.llrs, begin, end, ws, *job.out);
                }
            } catch (...) {
                err = std::current_exception();
            }
            {
                std::lock_guard lock(mu_);
                if (err && !error_) {
                    error_ = err;
                }
                if (--pending_ == 0) {
                    done_cv_.notify_one();
                }
            }
        }
    }

    unsigned lanes_;
    std::vector<Decoder::Workspace> workspaces_;
    std::mutex mu_;
    std::condition_variable_any start_cv_;
    std::condition_variable done_cv_;
    Job job_;
    unsigned pending_ = 0;
    std::uint64_t generation_ = 0;
    std::exception_ptr error_;
    std::vector<std::jthread> workers_;
};

}  // namespace

std::unique_ptr<DecodeBackend> make_ref_st_backend() { return std::make_unique<RefStBackend>(); }

std::unique_ptr<DecodeBackend> make_par_cpu_backend(unsigned lanes) {
    if (lanes == 0) {
        lanes = std::max(1U, std::thread::hardware_concurrency());
    }
    return std::make_unique<ParCpuBackend>(lanes);
}

BackendRegistry BackendRegistry::with_builtins() {
    BackendRegistry r;
    r.add("ref-st", [](const BackendOptions&) { return make_ref_st_backend(); });
    r.add("par-cpu", [](const BackendOptions& o) { return make_par_cpu_backend(o.lanes); });
    return r;
}

void BackendRegistry::add(std::string name, BackendFactory factory) {
    factories_.insert_or_assign(std::move(name), std::move(factory));
}

bool BackendRegistry::contains(std::string_view name) const {
    return factories_.find(name) != factories_.end();
}

std::vector<std::string> BackendRegistry::names() const {
    std::vector<std::string> out;
    for (const auto& [name, _] : factories_) {
        out.push_back(name);
    }
    return out;
}

std::unique_ptr<DecodeBackend> BackendRegistry::create(std::string_view name,
                                                       const BackendOptions& options) const {
    auto it = factories_.find(name);
    if (it == factories_.end()) {
        throw BackendError("backend '" + std::string(name) + "' is not registered");
    }
    auto backend = it->second(options);
    if (!backend) {
        throw BackendError("backend '" + std::string(name) + "' is unavailable");
    }
    return backend;
}

void decode_batch_into(SoftMatrixView llrs, const Decoder& decoder, DecodeBackend& backend,
                       DecodeOutcome& out) {
    if (llrs.cols != decoder.input_length() || llrs.data.size() != llrs.rows * llrs.cols) {
        throw InputError("decode_batch: expected N_cw x " + std::to_string(decoder.input_length()) +
                         " LLRs, got " + std::to_string(llrs.rows) + " x " +
                         std::to_string(llrs.cols) + " (" + std::to_string(llrs.data.size()) +
                         " values)");
    }
    out.reset(llrs.rows, decoder.config().k_info);
    try {
        backend.decode(decoder, llrs, out);
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw BackendError("backend '" + std::string(backend.name()) + "' failed: " + e.what());
    }
}

DecodeOutcome decode_batch(SoftMatrixView llrs, const Decoder& decoder, DecodeBackend& backend) {
    DecodeOutcome out;
    decode_batch_into(llrs, decoder, backend, out);
    return out;
}

}  // namespace edgeldpc::codec
