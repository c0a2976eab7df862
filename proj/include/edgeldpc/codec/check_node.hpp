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
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace edgeldpc::codec {

enum class CnRule { sum_product, normalized_min_sum };

std::string to_string(CnRule rule);
std::optional<CnRule> parse_cn_rule(std::string_view text);

/// Largest check-node degree the kernels accept (BG1 peaks at 19).
inline constexpr std::size_t kMaxCheckDegree = 32;

/// Extrinsic check-node update. Inputs are clamped to +-kLlrSat first.
///   sum_product:        out_j = 2 atanh( prod_{i!=j} tanh(in_i / 2) )
///   normalized_min_sum: out_j = alpha * prod_{i!=j} sign(in_i) * min_{i!=j} |in_i|
/// The exclusive products use forward/backward partial products, so a zero
/// input never divides anything. Outputs are clamped to +-kLlrSat.
void cn_update(std::span<const float> incoming, std::span<float> outgoing, CnRule rule,
               float alpha = 1.0F);

}  // namespace edgeldpc::codec
