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

#ifndef FORGE_TOOLS_CLI_H
#define FORGE_TOOLS_CLI_H

#include <cstdint>
#include <ostream>
#include <string_view>

namespace forge::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Runs the `forge` command line. Results go to `out`; a failure prints one
/// diagnostic line to `err` and returns 1.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a digest, used for the input digests of run manifests.
uint64_t fnv1a(std::string_view data);

}  // namespace forge::cli

#endif
