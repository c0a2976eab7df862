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

#include "edgeldpc/codec/decoder.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "check_node_kernels.hpp"
#include "edgeldpc/codec/llr.hpp"
#include "edgeldpc/common/error.hpp"

namespace edgeldpc::codec {

using detail::kGroupLanes;

void DecodeParams::validate() const {
    if (iterations < 1) {
        throw InputError("decode params: iterations must be >= 1");
    }
    if (!(nms_alpha > 0.0F && nms_alpha <= 1.0F)) {
        throw InputError("decode params: nms_alpha must be in (0, 1]");
    }
}

void DecodeOutcome::reset(std::size_t n, std::size_t k) {
    n_cw = n;
    k_info = k;
    info_bits.assign(n * k, 0);
    parity_satisfied.assign(n, 0);
    iterations_run.assign(n, 0);
}

Decoder::Decoder(const construction::CodeConfig& cfg, const construction::ParityCheckMatrix& h,
                 DecodeParams params)
    : cfg_(cfg),
      params_(params),
      matcher_(cfg),
      n_vars_(h.cols()),
      check_ptr_(h.row_ptr().begin(), h.row_ptr().end()),
      edge_var_(h.col_idx().begin(), h.col_idx().end()) {
    params_.validate();
    if (h.cols() != cfg.lifted_length()) {
        throw InputError("decoder: H has " + std::to_string(h.cols()) +
                         " columns, config expects " + std::to_string(cfg.lifted_length()));
    }
    for (std::size_t c = 0; c + 1 < check_ptr_.size(); ++c) {
        const auto d = check_ptr_[c + 1] - check_ptr_[c];
        if (d < 2 || d > kMaxCheckDegree) {
            throw InputError("decoder: check " + std::to_string(c) + " has unsupported degree " +
                             std::to_string(d));
        }
    }
}

Decoder::Decoder(const construction::CodeInstance& code, DecodeParams params)
    : Decoder(code.config, code.h, params) {}

Decoder::Workspace Decoder::make_workspace() const {
    Workspace ws;
    ws.lifted.resize(n_vars_);
    ws.channel.resize(n_vars_ * kGroupLanes);
    ws.total.resize(n_vars_ * kGroupLanes);
    ws.next_total.resize(n_vars_ * kGroupLanes);
    ws.c2v.resize(edge_var_.size() * kGroupLanes);
    ws.hard.resize(n_vars_);
    return ws;
}

bool Decoder::fits(const Workspace& ws) const {
    return ws.lifted.size() == n_vars_ && ws.c2v.size() == edge_var_.size() * kGroupLanes;
}

template <std::size_t W>
void Decoder::load_lane(std::span<const float> lifted, std::size_t lane, Workspace& ws) const {
    float* ch = ws.channel.data();
    for (std::size_t v = 0; v < n_vars_; ++v) {
        ch[v * W + lane] = clamp_llr(lifted[v]);
    }
}

template <std::size_t W, CnRule Rule>
void Decoder::flood(Workspace& ws) const {
    const std::size_t n_checks = check_ptr_.size() - 1;
    const std::uint32_t* ptr = check_ptr_.data();
    const std::uint32_t* var = edge_var_.data();
    const float* total = ws.total.data();
    float* next = ws.next_total.data();
    float* c2v = ws.c2v.data();
    alignas(64) float in[kMaxCheckDegree][W];
    alignas(64) float out[kMaxCheckDegree][W];

    std::copy_n(ws.channel.data(), n_vars_ * W, next);
    for (std::size_t c = 0; c < n_checks; ++c) {
        const std::size_t b = ptr[c];
        const std::size_t d = ptr[c + 1] - b;
        for (std::size_t k = 0; k < d; ++k) {
            const float* t = total + static_cast<std::size_t>(var[b + k]) * W;
            const float* m = c2v + (b + k) * W;
            for (std::size_t l = 0; l < W; ++l) {
                in[k][l] = clamp_llr(t[l] - m[l]);
            }
        }
        if constexpr (Rule == CnRule::sum_product) {
            detail::sum_product_lanes<W>(in, out, d);
        } else {
            detail::min_sum_lanes<W>(in, out, d, params_.nms_alpha);
        }
        for (std::size_t k = 0; k < d; ++k) {
            float* nx = next + static_cast<std::size_t>(var[b + k]) * W;
            float* m = c2v + (b + k) * W;
            for (std::size_t l = 0; l < W; ++l) {
                m[l] = out[k][l];
                nx[l] += out[k][l];
            }
        }
    }
    ws.total.swap(ws.next_total);
}

template <std::size_t W>
bool Decoder::finish_lane(Workspace& ws, std::size_t lane, std::uint8_t* info_out) const {
    const float* total = ws.total.data();
    for (std::size_t v = 0; v < n_vars_; ++v) {
        ws.hard[v] = hard_bit(total[v * W + lane]);
    }
    if (info_out != nullptr) {
        std::copy_n(ws.hard.begin(), cfg_.k_info, info_out);
    }
    const std::size_t n_checks = check_ptr_.size() - 1;
    for (std::size_t c = 0; c < n_checks; ++c) {
        std::uint8_t parity = 0;
        for (auto e = check_ptr_[c]; e < check_ptr_[c + 1]; ++e) {
            parity ^= ws.hard[edge_var_[e]];
        }
        if (parity != 0) {
            return false;
        }
    }
    return true;
}

template <std::size_t W>
void Decoder::run_group(Workspace& ws, std::uint8_t* const* info_out,
                        CodewordResult* results) const {
    std::copy_n(ws.channel.data(), n_vars_ * W, ws.total.data());
    std::fill_n(ws.c2v.data(), edge_var_.size() * W, 0.0F);

    std::array<bool, W> active{};
    std::size_t n_active = 0;
    for (std::size_t l = 0; l < W; ++l) {
        active[l] = info_out[l] != nullptr;
        n_active += active[l] ? 1 : 0;
    }
    for (std::uint32_t it = 1; it <= params_.iterations && n_active > 0; ++it) {
        if (params_.cn_rule == CnRule::sum_product) {
            flood<W, CnRule::sum_product>(ws);
        } else {
            flood<W, CnRule::normalized_min_sum>(ws);
        }
        const bool last = it == params_.iterations;
        if (!params_.early_stop && !last) {
            continue;
        }
        for (std::size_t l = 0; l < W; ++l) {
            if (!active[l]) {
                continue;
            }
            // A lane that converges is frozen with the bits of this iteration;
            // later iterations of the group no longer touch its result.
            const bool ok = finish_lane<W>(ws, l, info_out[l]);
            if (ok || last) {
                results[l] = CodewordResult{it, ok};
                active[l] = false;
                --n_active;
            }
        }
    }
}

CodewordResult Decoder::decode_lifted(std::span<const float> channel, Workspace& ws,
                                      std::span<std::uint8_t> info_out) const {
    if (channel.size() != n_vars_) {
        throw InputError("decode: expected " + std::to_string(n_vars_) + " lifted LLRs, got " +
                         std::to_string(channel.size()));
    }
    if (info_out.size() != cfg_.k_info) {
        throw InputError("decode: info output must hold " + std::to_string(cfg_.k_info) + " bits");
    }
    if (!fits(ws)) {
        ws = make_workspace();
    }
    load_lane<1>(channel, 0, ws);
    std::uint8_t* out_ptr[1] = {info_out.data()};
    CodewordResult result;
    run_group<1>(ws, out_ptr, &result);
    return result;
}

CodewordResult Decoder::decode_rate_matched(std::span<const float> llr_e, Workspace& ws,
                                            std::span<std::uint8_t> info_out) const {
    if (!fits(ws)) {
        ws = make_workspace();
    }
    matcher_.recover_into(llr_e, ws.lifted);
    return decode_lifted(ws.lifted, ws, info_out);
}

template <std::size_t W>
void Decoder::decode_group(SoftMatrixView llrs, std::size_t first, Workspace& ws,
                           DecodeOutcome& out) const {
    std::array<std::uint8_t*, W> info{};
    std::array<CodewordResult, W> results{};
    for (std::size_t l = 0; l < W; ++l) {
        matcher_.recover_into(llrs.row(first + l), ws.lifted);
        load_lane<W>(ws.lifted, l, ws);
        info[l] = out.info_bits.data() + (first + l) * cfg_.k_info;
    }
    run_group<W>(ws, info.data(), results.data());
    for (std::size_t l = 0; l < W; ++l) {
        out.parity_satisfied[first + l] = results[l].parity_satisfied ? 1 : 0;
        out.iterations_run[first + l] = results[l].iterations;
    }
}

void Decoder::decode_rows(SoftMatrixView llrs, std::size_t begin, std::size_t end, Workspace& ws,
                          DecodeOutcome& out) const {
    if (!fits(ws)) {
        ws = make_workspace();
    }
    std::size_t i = begin;
    for (; i + kGroupLanes <= end; i += kGroupLanes) {
        decode_group<kGroupLanes>(llrs, i, ws, out);
    }
    for (; i < end; ++i) {
        decode_group<1>(llrs, i, ws, out);
    }
}

}  // namespace edgeldpc::codec
