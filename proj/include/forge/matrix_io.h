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

#ifndef FORGE_MATRIX_IO_H
#define FORGE_MATRIX_IO_H

#include <filesystem>
#include <string>
#include <string_view>

#include "forge/bit_matrix.h"

namespace forge {

/// Writes the MacKay alist form: "N M", max column/row degrees, the column and
/// row degree lists, then 1-based indices per column and per row, zero-padded
/// to the maximum degree.
std::string to_alist(const BitMatrix& m);
BitMatrix from_alist(std::string_view text);

/// Dense form: "rows cols" then one line per row of space-separated 0/1.
std::string to_dense(const BitMatrix& m);
BitMatrix from_dense(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

BitMatrix load_alist(const std::filesystem::path& path);
void save_alist(const std::filesystem::path& path, const BitMatrix& m);

}  // namespace forge

#endif
