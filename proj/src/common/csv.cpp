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

#include "edgeldpc/common/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "edgeldpc/common/error.hpp"

namespace edgeldpc::csv {

std::string format_g9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string format_g9(const std::optional<double>& v) { return v ? format_g9(*v) : std::string(); }

std::string format_exact(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_exact(const std::optional<double>& v) {
    return v ? format_exact(*v) : std::string();
}

std::vector<std::string> split(std::string_view line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto comma = line.find(',', start);
        out.emplace_back(line.substr(start, comma - start));
        if (comma == std::string_view::npos) {
            return out;
        }
        start = comma + 1;
    }
}

std::string join(const std::vector<std::string>& fields) {
    std::string s;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i != 0) {
            s.push_back(',');
        }
        s += fields[i];
    }
    return s;
}

Table Table::read(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path.string());
}

Table Table::parse(std::string_view text, const std::string& origin) {
    Table t;
    t.origin_ = origin;
    std::size_t pos = 0;
    std::size_t line_no = 0;
    bool have_header = false;
    while (pos < text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            nl = text.size();
        }
        auto line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (line.empty()) {
            continue;
        }
        auto fields = split(line);
        if (!have_header) {
            t.header_ = std::move(fields);
            for (std::size_t i = 0; i < t.header_.size(); ++i) {
                t.index_.emplace(t.header_[i], i);
            }
            have_header = true;
            continue;
        }
        if (fields.size() != t.header_.size()) {
            // a partially written last line (interrupted append) is skipped
            if (pos >= text.size() && text.back() != '\n') {
                break;
            }
            throw InputError(origin + ":" + std::to_string(line_no) + ": expected " +
                             std::to_string(t.header_.size()) + " fields, got " +
                             std::to_string(fields.size()));
        }
        t.rows_.push_back(std::move(fields));
    }
    if (!have_header) {
        throw InputError(origin + ": missing CSV header");
    }
    return t;
}

bool Table::has(std::string_view column) const { return index_.find(column) != index_.end(); }

std::size_t Table::column(std::string_view column) const {
    auto it = index_.find(column);
    if (it == index_.end()) {
        throw InputError(origin_ + ": missing column '" + std::string(column) + "'");
    }
    return it->second;
}

double Table::number(std::size_t row, std::size_t col) const {
    auto v = optional_number(row, col);
    if (!v) {
        throw InputError(origin_ + ": row " + std::to_string(row + 1) + " column '" +
                         header_[col] + "' is empty");
    }
    return *v;
}

std::optional<double> Table::optional_number(std::size_t row, std::size_t col) const {
    const auto& s = rows_[row][col];
    if (s.empty()) {
        return std::nullopt;
    }
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw InputError(origin_ + ": row " + std::to_string(row + 1) + " column '" +
                         header_[col] + "' is not a number: '" + s + "'");
    }
    return v;
}

std::uint64_t Table::integer(std::size_t row, std::size_t col) const {
    const auto& s = rows_[row][col];
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw InputError(origin_ + ": row " + std::to_string(row + 1) + " column '" +
                         header_[col] + "' is not an integer: '" + s + "'");
    }
    return v;
}

}  // namespace edgeldpc::csv
