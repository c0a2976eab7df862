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

#include "edgeldpc/construction/code_config.hpp"

#include <sstream>

#include "edgeldpc/common/error.hpp"

namespace edgeldpc::construction {

std::string CodeConfig::describe() const {
    std::ostringstream ss;
    ss << "K=" << k_info << " N=" << n_coded << ' ' << to_string(bg_id) << " Z=" << lifting.z
       << " iLS=" << lifting.set_index << " filler=" << num_filler;
    return ss.str();
}

BaseGraphId select_base_graph(std::uint32_t k_info, double code_rate) {
    if (k_info <= 292 || (k_info <= 3824 && code_rate <= 0.67) || code_rate <= 0.25) {
        return BaseGraphId::bg2;
    }
    return BaseGraphId::bg1;
}

CodeConfig make_code_config(std::uint32_t k_info, std::uint32_t n_coded,
                            const LiftingSizeTable& table) {
    if (k_info == 0 || n_coded <= k_info) {
        throw ConstructionError("code config: need 0 < K < N (got K=" + std::to_string(k_info) +
                                ", N=" + std::to_string(n_coded) + ")");
    }
    CodeConfig cfg;
    cfg.k_info = k_info;
    cfg.n_coded = n_coded;
    cfg.bg_id = select_base_graph(k_info, cfg.code_rate());
    if (cfg.bg_id == BaseGraphId::bg2 && k_info < kMinBg2Info) {
        throw ConstructionError("code config: K=" + std::to_string(k_info) +
                                " needs the reduced BG2 info-column variant, which is not "
                                "supported (minimum K is " +
                                std::to_string(kMinBg2Info) + ")");
    }
    cfg.info_cols = nr_info_cols(cfg.bg_id);
    cfg.cols = cfg.bg_id == BaseGraphId::bg1 ? 68U : 52U;
    const auto choice = select_lifting_size(k_info, cfg.info_cols, table);
    cfg.lifting = choice.lifting;
    cfg.k_lifted = choice.k_lifted;
    cfg.num_filler = choice.num_filler;
    return cfg;
}

CodeInstance make_code(std::uint32_t k_info, std::uint32_t n_coded,
                       const std::filesystem::path& data_dir) {
    const auto table = load_nr_lifting_sizes(data_dir);
    auto cfg = make_code_config(k_info, n_coded, table);
    auto bg = load_nr_base_graph(cfg.bg_id, data_dir);
    auto h = expand(bg, cfg.lifting);
    return CodeInstance{cfg, std::move(bg), std::move(h)};
}

}  // namespace edgeldpc::construction
