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
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace edgeldpc::csv {

/// "%.9g"; empty string for an absent value.
std::string format_g9(double v);
std::string format_g9(const std::optional<double>& v);
/// Shortest form that parses back to the same double ("%.17g").
std::string format_exact(double v);
std::string format_exact(const std::optional<double>& v);

/// Splits one line on commas; fields never contain commas or quotes here.
std::vector<std::string> split(std::string_view line);
std::string join(const std::vector<std::string>& fields);

/// A parsed CSV file addressed by column name.
class Table {
public:
    /// Throws IoError if the file cannot be read, InputError on a ragged row.
    static Table read(const std::filesystem::path& path);
    static Table parse(std::string_view text, const std::string& origin = "<memory>");

    const std::vector<std::string>& header() const { return header_; }
    std::size_t rows() const { return rows_.size(); }
    bool has(std::string_view column) const;
    /// Throws InputError naming the column when it is missing.
    std::size_t column(std::string_view column) const;
    const std::string& at(std::size_t row, std::size_t col) const { return rows_[row][col]; }

    /// Field parsers; throw InputError naming origin, row and column.
    double number(std::size_t row, std::size_t col) const;
    std::optional<double> optional_number(std::size_t row, std::size_t col) const;
    std::uint64_t integer(std::size_t row, std::size_t col) const;

private:
    std::string origin_;
    std::vector<std::string> header_;
    std::map<std::string, std::size_t, std::less<>> index_;
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace edgeldpc::csv
