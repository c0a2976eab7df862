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
#include <span>
#include <vector>

#include "edgeldpc/codec/encoder.hpp"
#include "edgeldpc/construction/code_config.hpp"

namespace edgeldpc::codec {

/// Transmitted form of a codeword: E bits plus the lifted position of each.
struct RateMatchedWord {
    std::vector<std::uint8_t> bits;
    std::vector<std::uint32_t> selection;
};

/// Circular-buffer rate matching for redundancy version 0.
///
/// The buffer holds lifted positions [punctured_cols*Z, cols*Z); filler
/// positions [K, K_lifted) are skipped. Reading starts at offset 0 and may
/// wrap around once; E beyond two buffer passes is rejected.
class RateMatcher {
public:
    explicit RateMatcher(const construction::CodeConfig& cfg);

    std::size_t output_length() const { return selection_.size(); }
    std::size_t lifted_length() const { return lifted_length_; }
    /// Non-filler positions available in one buffer pass.
    std::size_t buffer_length() const { return buffer_length_; }
    std::span<const std::uint32_t> selection() const { return selection_; }

    RateMatchedWord match(const Codeword& cw) const;
    void match_into(std::span<const std::uint8_t> lifted_bits, std::span<std::uint8_t> out) const;

    /// Scatters E LLRs back to lifted order. Punctured positions become 0,
    /// fillers become +kLlrSat, repeated positions are summed then clamped.
    std::vector<float> recover(std::span<const float> llr_in) const;
    void recover_into(std::span<const float> llr_in, std::span<float> out) const;

private:
    std::size_t lifted_length_;
    std::size_t buffer_length_;
    std::uint32_t filler_begin_;
    std::uint32_t filler_end_;
    std::vector<std::uint32_t> selection_;
    bool repeats_;
};

RateMatchedWord rate_match(const Codeword& cw, const construction::CodeConfig& cfg);
std::vector<float> rate_recover(std::span<const float> llr_in, const construction::CodeConfig& cfg);

}  // namespace edgeldpc::codec
