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

#include <stdexcept>
#include <string>

namespace edgeldpc {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid code parameters (K too large for the base graph, unsupported E, ...).
class ConstructionError : public Error {
public:
    using Error::Error;
};

/// Malformed vendored data file; message carries "<path>:<line>: ...".
class DataFileError : public Error {
public:
    using Error::Error;
};

/// Caller-supplied data has the wrong shape or an out-of-domain value.
class InputError : public Error {
public:
    using Error::Error;
};

/// Backend missing from the registry or failing mid-decode.
class BackendError : public Error {
public:
    using Error::Error;
};

/// Invalid sweep, report or CLI configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// File system failure while reading or writing results.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace edgeldpc
