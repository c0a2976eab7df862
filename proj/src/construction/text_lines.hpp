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

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "edgeldpc/common/error.hpp"

namespace edgeldpc::construction::detail {

/// Whitespace-tokenising reader for the vendored data files; skips blank
/// lines and '#' comments and reports errors as "<path>:<line>: <msg>".
class LineReader {
public:
    explicit LineReader(const std::filesystem::path& path) : path_(path), in_(path) {
        if (!in_) {
            throw DataFileError(path_.string() + ": cannot open file");
        }
    }

    bool next(std::vector<std::string>& tokens) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            if (auto hash = line.find('#'); hash != std::string::npos) {
                line.erase(hash);
            }
            std::istringstream ss(line);
            tokens.clear();
            for (std::string t; ss >> t;) {
                tokens.push_back(std::move(t));
            }
            if (!tokens.empty()) {
                return true;
            }
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw DataFileError(path_.string() + ":" + std::to_string(line_no_) + ": " + msg);
    }

    std::uint32_t parse_u32(const std::string& token) const {
        std::uint32_t value = 0;
        const auto* end = token.data() + token.size();
        auto [ptr, ec] = std::from_chars(token.data(), end, value);
        if (ec != std::errc{} || ptr != end) {
            fail("expected a non-negative integer, got '" + token + "'");
        }
        return value;
    }

private:
    std::filesystem::path path_;
    std::ifstream in_;
    std::size_t line_no_ = 0;
};

}  // namespace edgeldpc::construction::detail
