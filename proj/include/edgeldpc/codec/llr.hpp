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

namespace edgeldpc::codec {

// LLR = log P(b=0) / P(b=1): positive values favour bit 0.

/// Saturation bound applied to every message and injected for known-zero fillers.
inline constexpr float kLlrSat = 30.0F;

inline constexpr float clamp_llr(float x) {
    const float hi = x < kLlrSat ? x : kLlrSat;
    return hi > -kLlrSat ? hi : -kLlrSat;
}

inline constexpr unsigned char hard_bit(float llr) { return llr < 0.0F ? 1 : 0; }

}  // namespace edgeldpc::codec
