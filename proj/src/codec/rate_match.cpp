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

#include "edgeldpc/codec/rate_match.hpp"

#include <algorithm>
#include <string>

#include "edgeldpc/codec/llr.hpp"
#include "edgeldpc/common/error.hpp"

namespace edgeldpc::codec {

RateMatcher::RateMatcher(const construction::CodeConfig& cfg)
    : lifted_length_(cfg.lifted_length()),
      filler_begin_(cfg.k_info),
      filler_end_(cfg.k_lifted),
      repeats_(false) {
    const std::uint32_t start = cfg.punctured_cols * cfg.z();
    if (start >= lifted_length_) {
        throw ConstructionError("rate match: every lifted position is punctured");
    }
    std::vector<std::uint32_t> pass;
    for (auto p = start; p < lifted_length_; ++p) {
        if (p < filler_begin_ || p >= filler_end_) {
            pass.push_back(p);
        }
    }
    buffer_length_ = pass.size();
    if (cfg.n_coded > 2 * buffer_length_) {
        throw ConstructionError("rate match: E=" + std::to_string(cfg.n_coded) +
                                " needs more than one circular-buffer wrap (buffer holds " +
                                std::to_string(buffer_length_) + " bits)");
    }
    selection_.reserve(cfg.n_coded);
    for (std::size_t i = 0; i < cfg.n_coded; ++i) {
        selection_.push_back(pass[i % buffer_length_]);
    }
    repeats_ = cfg.n_coded > buffer_length_;
}

RateMatchedWord RateMatcher::match(const Codeword& cw) const {
    RateMatchedWord out;
    out.bits.resize(selection_.size());
    match_into(cw.bits, out.bits);
    out.selection = selection_;
    return out;
}

void RateMatcher::match_into(std::span<const std::uint8_t> lifted_bits,
                             std::span<std::uint8_t> out) const {
    if (lifted_bits.size() != lifted_length_ || out.size() != selection_.size()) {
        throw InputError("rate match: expected " + std::to_string(lifted_length_) +
                         " lifted bits and room for " + std::to_string(selection_.size()));
    }
    for (std::size_t i = 0; i < selection_.size(); ++i) {
        out[i] = lifted_bits[selection_[i]];
    }
}

std::vector<float> RateMatcher::recover(std::span<const float> llr_in) const {
    std::vector<float> out(lifted_length_);
    recover_into(llr_in, out);
    return out;
}

void RateMatcher::recover_into(std::span<const float> llr_in, std::span<float> out) const {
    if (llr_in.size() != selection_.size()) {
        throw InputError("rate recover: expected " + std::to_string(selection_.size()) +
                         " LLRs, got " + std::to_string(llr_in.size()));
    }
    if (out.size() != lifted_length_) {
        throw InputError("rate recover: output must hold " + std::to_string(lifted_length_));
    }
    std::fill(out.begin(), out.end(), 0.0F);
    if (repeats_) {
        for (std::size_t i = 0; i < selection_.size(); ++i) {
            out[selection_[i]] += llr_in[i];
        }
        for (auto p : selection_) {
            out[p] = clamp_llr(out[p]);
        }
    } else {
        for (std::size_t i = 0; i < selection_.size(); ++i) {
            out[selection_[i]] = clamp_llr(llr_in[i]);
        }
    }
    std::fill(out.begin() + filler_begin_, out.begin() + filler_end_, kLlrSat);
}

RateMatchedWord rate_match(const Codeword& cw, const construction::CodeConfig& cfg) {
    return RateMatcher(cfg).match(cw);
}

std::vector<float> rate_recover(std::span<const float> llr_in,
                                const construction::CodeConfig& cfg) {
    return RateMatcher(cfg).recover(llr_in);
}

}  // namespace edgeldpc::codec
