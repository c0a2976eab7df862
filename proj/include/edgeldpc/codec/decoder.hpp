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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "edgeldpc/codec/check_node.hpp"
#include "edgeldpc/codec/rate_match.hpp"
#include "edgeldpc/construction/code_config.hpp"

namespace edgeldpc::codec {

struct DecodeParams {
    std::uint32_t iterations = 20;
    CnRule cn_rule = CnRule::sum_product;
    float nms_alpha = 0.75F;
    bool early_stop = false;

    /// Throws InputError unless iterations >= 1 and 0 < nms_alpha <= 1.
    void validate() const;
};

/// Read-only row-major view of an N_cw x E soft-value matrix.
struct SoftMatrixView {
    std::span<const float> data;
    std::size_t rows = 0;
    std::size_t cols = 0;

    std::span<const float> row(std::size_t i) const { return data.subspan(i * cols, cols); }
};

/// Decoder output for a batch: the hard-decided info bits (N_cw x K_info).
struct DecodeOutcome {
    std::size_t n_cw = 0;
    std::size_t k_info = 0;
    std::vector<std::uint8_t> info_bits;
    std::vector<std::uint8_t> parity_satisfied;
    std::vector<std::uint32_t> iterations_run;

    void reset(std::size_t n, std::size_t k);
    std::span<const std::uint8_t> row(std::size_t i) const {
        return std::span(info_bits).subspan(i * k_info, k_info);
    }

    friend bool operator==(const DecodeOutcome&, const DecodeOutcome&) = default;
};

struct CodewordResult {
    std::uint32_t iterations = 0;
    bool parity_satisfied = false;
};

/// Flooding-schedule belief-propagation decoder for one code.
///
/// Each iteration forms every variable-to-check message from the previous
/// iteration's totals, runs the check update on every check in index order
/// and re-accumulates the totals in that same order. Codewords are processed
/// in interleaved groups of up to 16 lanes; a lane's arithmetic never
/// depends on its neighbours, so the decoded bits of a codeword are the same
/// for every batch composition, backend and thread count.
class Decoder {
public:
    Decoder(const construction::CodeConfig& cfg, const construction::ParityCheckMatrix& h,
            DecodeParams params);
    Decoder(const construction::CodeInstance& code, DecodeParams params);

    /// Per-thread scratch memory; reuse it across calls.
    struct Workspace {
        std::vector<float> lifted;
        std::vector<float> channel;
        std::vector<float> total;
        std::vector<float> next_total;
        std::vector<float> c2v;
        std::vector<std::uint8_t> hard;
    };
    Workspace make_workspace() const;
    bool fits(const Workspace& ws) const;

    const construction::CodeConfig& config() const { return cfg_; }
    const DecodeParams& params() const { return params_; }
    const RateMatcher& rate_matcher() const { return matcher_; }
    std::size_t input_length() const { return matcher_.output_length(); }
    std::size_t lifted_length() const { return n_vars_; }
    std::size_t edges() const { return edge_var_.size(); }

    /// Rate recovery followed by BP on one codeword. `info_out` receives K_info bits.
    CodewordResult decode_rate_matched(std::span<const float> llr_e, Workspace& ws,
                                       std::span<std::uint8_t> info_out) const;
    /// BP on lifted-domain channel LLRs (cols*Z values).
    CodewordResult decode_lifted(std::span<const float> channel, Workspace& ws,
                                 std::span<std::uint8_t> info_out) const;

    /// Decodes rows [begin, end) of `llrs` into `out`, which must already be sized.
    void decode_rows(SoftMatrixView llrs, std::size_t begin, std::size_t end, Workspace& ws,
                     DecodeOutcome& out) const;

private:
    template <std::size_t W>
    void load_lane(std::span<const float> lifted, std::size_t lane, Workspace& ws) const;
    template <std::size_t W>
    void run_group(Workspace& ws, std::uint8_t* const* info_out, CodewordResult* results) const;
    template <std::size_t W, CnRule Rule>
    void flood(Workspace& ws) const;
    template <std::size_t W>
    bool finish_lane(Workspace& ws, std::size_t lane, std::uint8_t* info_out) const;
    template <std::size_t W>
    void decode_group(SoftMatrixView llrs, std::size_t first, Workspace& ws,
                      DecodeOutcome& out) const;

    construction::CodeConfig cfg_;
    DecodeParams params_;
    RateMatcher matcher_;
    std::size_t n_vars_;
    std::vector<std::uint32_t> check_ptr_;
    std::vector<std::uint32_t> edge_var_;
};

}  // namespace edgeldpc::codec
