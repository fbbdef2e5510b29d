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

#include "forge/bundle.h"

#include "forge/errors.h"
#include "forge/matrix_io.h"

namespace forge {

void save_bundle(const std::filesystem::path& dir, const CssCode& code, const nlohmann::json& metadata) {
    std::filesystem::create_directories(dir);
    size_t sx_cols = code.form == CheckForm::kCss ? code.hx.rows() : code.num_checks();
    size_t sz_cols = code.form == CheckForm::kCss ? code.hz.rows() : code.num_checks();
    save_alist(dir / "hx.alist", code.hx);
    save_alist(dir / "hz.alist", code.hz);
    save_alist(dir / "hsx.alist", code.hsx ? *code.hsx : BitMatrix(0, sx_cols));
    save_alist(dir / "hsz.alist", code.hsz ? *code.hsz : BitMatrix(0, sz_cols));

    nlohmann::json m = metadata.is_null() ? nlohmann::json::object() : metadata;
    m["form"] = code.form == CheckForm::kCss ? "css" : "symplectic";
    m["n"] = code.n();
    m["files"] = {{"hx", "hx.alist"}, {"hz", "hz.alist"}, {"hsx", "hsx.alist"}, {"hsz", "hsz.alist"}};
    m["has_hsx"] = code.hsx.has_value();
    m["has_hsz"] = code.hsz.has_value();
    write_text_file(dir / "manifest.json", m.dump(2) + "\n");
}

Bundle load_bundle(const std::filesystem::path& dir) {
    nlohmann::json m;
    try {
        m = nlohmann::json::parse(read_text_file(dir / "manifest.json"));
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("manifest.json: " + std::string(e.what()));
    }
    std::string form = m.value("form", "css");
    if (form != "css" && form != "symplectic") {
        throw ConfigError("manifest.json: unknown form '" + form + "'");
    }
    auto file = [&](const char* key) {
        if (m.contains("files") && m["files"].contains(key)) {
            return dir / m["files"][key].get<std::string>();
        }
        return dir / (std::string(key) + ".alist");
    };
    CssCode code(load_alist(file("hx")), load_alist(file("hz")),
                 form == "css" ? CheckForm::kCss : CheckForm::kSymplectic);
    if (m.value("has_hsx", false)) {
        code.hsx = load_alist(file("hsx"));
    }
    if (m.value("has_hsz", false)) {
        code.hsz = load_alist(file("hsz"));
    }
    return Bundle{std::move(code), std::move(m)};
}

}  // namespace forge
