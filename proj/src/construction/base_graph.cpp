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

#include "edgeldpc/construction/base_graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "edgeldpc/common/error.hpp"
#include "text_lines.hpp"

namespace edgeldpc::construction {

std::string to_string(BaseGraphId id) {
    switch (id) {
        case BaseGraphId::bg1: return "BG1";
        case BaseGraphId::bg2: return "BG2";
        case BaseGraphId::custom: return "custom";
    }
    return "unknown";
}

std::uint32_t nr_info_cols(BaseGraphId id) {
    switch (id) {
        case BaseGraphId::bg1: return 22;
        case BaseGraphId::bg2: return 10;
        case BaseGraphId::custom: break;
    }
    throw InputError("nr_info_cols: not an NR base graph");
}

void BaseGraph::validate() const {
    if (rows == 0 || cols <= rows) {
        throw DataFileError("base graph: need cols > rows > 0");
    }
    if (info_cols != cols - rows) {
        throw DataFileError("base graph: info_cols must equal cols - rows");
    }
    if (id == BaseGraphId::bg1 && (rows != 46 || cols != 68)) {
        throw DataFileError("base graph: BG1 must be 46 x 68");
    }
    if (id == BaseGraphId::bg2 && (rows != 42 || cols != 52)) {
        throw DataFileError("base graph: BG2 must be 42 x 52");
    }
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (const auto& e : entries) {
        if (e.row >= rows || e.col >= cols) {
            throw DataFileError("base graph: entry (" + std::to_string(e.row) + ", " +
                                std::to_string(e.col) + ") out of range");
        }
        if (!seen.emplace(e.row, e.col).second) {
            throw DataFileError("base graph: duplicate entry (" + std::to_string(e.row) + ", " +
                                std::to_string(e.col) + ")");
        }
    }
    if (!std::is_sorted(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
            return std::pair(a.row, a.col) < std::pair(b.row, b.col);
        })) {
        throw DataFileError("base graph: entries must be sorted by (row, col)");
    }
}

std::size_t BaseGraph::row_degree(std::uint32_t row) const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [&](const auto& e) { return e.row == row; }));
}

std::size_t BaseGraph::col_degree(std::uint32_t col) const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [&](const auto& e) { return e.col == col; }));
}

namespace {

constexpr std::size_t kShiftSets = 8;

std::uint32_t parse_key_value(const std::string& token, const std::string& key,
                              const detail::LineReader& reader) {
    const auto prefix = key + "=";
    if (token.rfind(prefix, 0) != 0) {
        reader.fail("expected '" + prefix + "<n>', got '" + token + "'");
    }
    return reader.parse_u32(token.substr(prefix.size()));
}

}  // namespace

BaseGraph load_base_graph(const std::filesystem::path& path) {
    detail::LineReader reader(path);
    BaseGraph bg;
    bool have_header = false;
    std::vector<std::string> tokens;
    while (reader.next(tokens)) {
        if (!have_header) {
            if (tokens.size() != 4 || tokens[0] != "BG") {
                reader.fail("expected header 'BG <1|2> rows=<r> cols=<c>'");
            }
            const auto which = reader.parse_u32(tokens[1]);
            if (which != 1 && which != 2) {
                reader.fail("base graph id must be 1 or 2");
            }
            bg.id = which == 1 ? BaseGraphId::bg1 : BaseGraphId::bg2;
            bg.rows = parse_key_value(tokens[2], "rows", reader);
            bg.cols = parse_key_value(tokens[3], "cols", reader);
            bg.info_cols = nr_info_cols(bg.id);
            have_header = true;
            continue;
        }
        if (tokens.size() != 2 + kShiftSets) {
            reader.fail("expected 'row col' followed by " + std::to_string(kShiftSets) +
                        " shift values, got " + std::to_string(tokens.size()) + " fields");
        }
        BaseGraphEntry e;
        e.row = reader.parse_u32(tokens[0]);
        e.col = reader.parse_u32(tokens[1]);
        if (e.row >= bg.rows || e.col >= bg.cols) {
            reader.fail("entry position outside the " + std::to_string(bg.rows) + "x" +
                        std::to_string(bg.cols) + " graph");
        }
        if (!bg.entries.empty()) {
            const auto& prev = bg.entries.back();
            if (std::pair(e.row, e.col) <= std::pair(prev.row, prev.col)) {
                reader.fail("entries must be strictly increasing in (row, col)");
            }
        }
        for (std::size_t i = 0; i < kShiftSets; ++i) {
            e.shifts.push_back(reader.parse_u32(tokens[2 + i]));
        }
        bg.entries.push_back(std::move(e));
    }
    if (!have_header) {
        reader.fail("missing 'BG' header");
    }
    try {
        bg.validate();
    } catch (const DataFileError& err) {
        throw DataFileError(path.string() + ": " + err.what());
    }
    return bg;
}

std::filesystem::path default_data_dir() {
    if (const char* env = std::getenv("EDGELDPC_DATA_DIR"); env != nullptr && *env != '\0') {
        return env;
    }
#ifdef EDGELDPC_DATA_DIR
    return EDGELDPC_DATA_DIR;
#else
    return "data";
#endif
}

BaseGraph load_nr_base_graph(BaseGraphId id, const std::filesystem::path& data_dir) {
    switch (id) {
        case BaseGraphId::bg1: return load_base_graph(data_dir / "bg1.txt");
        case BaseGraphId::bg2: return load_base_graph(data_dir / "bg2.txt");
        case BaseGraphId::custom: break;
    }
    throw InputError("load_nr_base_graph: custom graphs have no vendored table");
}

}  // namespace edgeldpc::construction
