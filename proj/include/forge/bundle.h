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

#ifndef FORGE_BUNDLE_H
#define FORGE_BUNDLE_H

#include <filesystem>

#include "forge/css_code.h"
#include "json.hpp"

namespace forge {

/// A code on disk: hx.alist, hz.alist, hsx.alist, hsz.alist and manifest.json.
/// Absent syndrome checks are written as 0-row matrices and flagged in the
/// manifest, so loading and saving again reproduces every file byte for byte.
struct Bundle {
    CssCode code;
    nlohmann::json manifest;
};

/// Writes the four matrices plus a manifest made of `metadata` with the keys
/// "form", "n", "files", "has_hsx" and "has_hsz" filled in.
void save_bundle(const std::filesystem::path& dir, const CssCode& code, const nlohmann::json& metadata);
Bundle load_bundle(const std::filesystem::path& dir);

}  // namespace forge

#endif
