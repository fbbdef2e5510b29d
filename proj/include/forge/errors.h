// Copyright 2026 The Forge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FORGE_ERRORS_H
#define FORGE_ERRORS_H

#include <stdexcept>
#include <string>

namespace forge {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operand shapes do not conform.
struct ShapeError : Error {
    using Error::Error;
};

/// A structural invariant does not hold (e.g. a boundary of a boundary is nonzero).
struct ValidationError : Error {
    using Error::Error;
};

/// Two stabilizer generators anticommute.
struct CommutationError : ValidationError {
    using ValidationError::ValidationError;
};

/// A code without logical qubits was asked for a distance.
struct NoLogicalsError : Error {
    using Error::Error;
};

/// Malformed input file or inconsistent configuration.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace forge

#endif
