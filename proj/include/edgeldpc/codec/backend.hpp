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

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "edgeldpc/codec/decoder.hpp"

namespace edgeldpc::codec {

struct BackendCapabilities {
    unsigned max_parallel_lanes = 1;
};

struct BackendOptions {
    /// Worker lanes for parallel backends; 0 means one per logical core.
    unsigned lanes = 0;
};

/// A batch-decode engine. Implementations may split the batch across lanes
/// but never share state between codewords, and return only once every
/// codeword of the batch is finished.
class DecodeBackend {
public:
    virtual ~DecodeBackend() = default;

    virtual std::string_view name() const = 0;
    virtual BackendCapabilities capabilities() const = 0;
    /// `out` is already reset to llrs.rows x K_info.
    virtual void decode(const Decoder& decoder, SoftMatrixView llrs, DecodeOutcome& out) = 0;
};

using BackendFactory = std::function<std::unique_ptr<DecodeBackend>(const BackendOptions&)>;

class BackendRegistry {
public:
    /// Registry pre-populated with `ref-st` and `par-cpu`.
    static BackendRegistry with_builtins();

    void add(std::string name, BackendFactory factory);
    bool contains(std::string_view name) const;
    std::vector<std::string> names() const;
    /// Throws BackendError naming the backend when it is not registered.
    std::unique_ptr<DecodeBackend> create(std::string_view name,
                                          const BackendOptions& options = {}) const;

private:
    std::map<std::string, BackendFactory, std::less<>> factories_;
};

std::unique_ptr<DecodeBackend> make_ref_st_backend();
std::unique_ptr<DecodeBackend> make_par_cpu_backend(unsigned lanes = 0);

/// B_hat = D(L; I): validates the N_cw x E shape and runs the backend.
DecodeOutcome decode_batch(SoftMatrixView llrs, const Decoder& decoder, DecodeBackend& backend);
/// Same, reusing `out` to keep allocation out of timed regions.
void decode_batch_into(SoftMatrixView llrs, const Decoder& decoder, DecodeBackend& backend,
                       DecodeOutcome& out);

}  // namespace edgeldpc::codec
