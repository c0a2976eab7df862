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

#include <chrono>
#include <cstdint>
#include <string>

namespace edgeldpc {

/// The campaign's single monotonic clock.
using MonoClock = std::chrono::steady_clock;

inline std::int64_t mono_ns(MonoClock::time_point t) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(t.time_since_epoch()).count();
}
inline std::int64_t mono_now_ns() { return mono_ns(MonoClock::now()); }

/// "YYYY-MM-DDTHH:MM:SS.ffffffZ"
std::string format_utc(std::chrono::system_clock::time_point t);
inline std::string utc_now() { return format_utc(std::chrono::system_clock::now()); }

}  // namespace edgeldpc
