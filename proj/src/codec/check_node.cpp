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

#include "edgeldpc/codec/check_node.hpp"


#include "check_node_kernels.hpp"
#include "edgeldpc/common/error.hpp"

namespace edgeldpc::codec {

std::string to_string(CnRule rule) {
    return rule == CnRule::sum_product ? "sum_product" : "normalized_min_sum";
}

std::optional<CnRule> parse_cn_rule(std::string_view text) {
    if (text == "sum_product" || text == "sp") {
        return CnRule::sum_product;
    }
    if (text == "normalized_min_sum" || text == "nms") {
        return CnRule::normalized_min_sum;
    }
    return std::nullopt;
}

void cn_update(std::span<const float> incoming, std::span<float> outgoing, CnRule rule,
               float alpha) {
    const auto d = incoming.size();
    if (d < 2 || d > kMaxCheckDegree) {
        throw InputError("cn_update: degree must be in [2, " + std::to_string(kMaxCheckDegree) +
                         "]");
    }
    if (outgoing.size() != d) {
        throw InputError("cn_update: output size must match input size");
    }
    float in[kMaxCheckDegree][1];
    float out[kMaxCheckDegree][1];
    for (std::size_t k = 0; k < d; ++k) {
        in[k][0] = clamp_llr(incoming[k]);
    }
    if (rule == CnRule::sum_product) {
        detail::sum_product_lanes<1>(in, out, d);
    } else {
        detail::min_sum_lanes<1>(in, out, d, alpha);
    }
    for (std::size_t k = 0; k < d; ++k) {
        outgoing[k] = out[k][0];
    }
}

}  // namespace edgeldpc::codec
