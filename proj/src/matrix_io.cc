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

#include "forge/matrix_io.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "forge/errors.h"

namespace forge {

namespace {

std::string join_padded(const std::vector<size_t>& items, size_t width) {
    std::string s;
    for (size_t i = 0; i < width; i++) {
        if (i) {
            s += ' ';
        }
        s += std::to_string(i < items.size() ? items[i] + 1 : 0);
    }
    return s;
}

class Tokens {
   public:
    explicit Tokens(std::string_view text) : in_(std::string(text)) {}

    size_t next(const char* what) {
        long long v;
        if (!(in_ >> v)) {
            throw ConfigError(std::string("alist: unexpected end of input while reading ") + what);
        }
        if (v < 0) {
            throw ConfigError(std::string("alist: negative value for ") + what);
        }
        return static_cast<size_t>(v);
    }

   private:
    std::istringstream in_;
};

}  // namespace

std::string to_alist(const BitMatrix& m) {
    BitMatrix t = m.transposed();
    size_t n = m.cols(), rows = m.rows();
    std::vector<std::vector<size_t>> col_idx(n), row_idx(rows);
    size_t max_c = 0, max_r = 0;
    for (size_t c = 0; c < n; c++) {
        col_idx[c] = t.row(c).support();
        max_c = std::max(max_c, col_idx[c].size());
    }
    for (size_t r = 0; r < rows; r++) {
        row_idx[r] = m.row(r).support();
        max_r = std::max(max_r, row_idx[r].size());
    }
    std::ostringstream out;
    out << n << ' ' << rows << '\n' << max_c << ' ' << max_r << '\n';
    for (size_t c = 0; c < n; c++) {
        out << (c ? " " : "") << col_idx[c].size();
    }
    out << '\n';
    for (size_t r = 0; r < rows; r++) {
        out << (r ? " " : "") << row_idx[r].size();
    }
    out << '\n';
    for (size_t c = 0; c < n; c++) {
        out << join_padded(col_idx[c], max_c) << '\n';
    }
    for (size_t r = 0; r < rows; r++) {
        out << join_padded(row_idx[r], max_r) << '\n';
    }
    return out.str();
}

BitMatrix from_alist(std::string_view text) {
    Tokens tok(text);
    size_t n = tok.next("column count");
    size_t rows = tok.next("row count");
    size_t max_c = tok.next("max column degree");
    size_t max_r = tok.next("max row degree");
    std::vector<size_t> col_deg(n), row_deg(rows);
    for (auto& d : col_deg) {
        d = tok.next("column degree");
        if (d > max_c) {
            throw ConfigError("alist: column degree exceeds declared maximum");
        }
    }
    for (auto& d : row_deg) {
        d = tok.next("row degree");
        if (d > max_r) {
            throw ConfigError("alist: row degree exceeds declared maximum");
        }
    }
    BitMatrix m(rows, n);
    for (size_t c = 0; c < n; c++) {
        size_t seen = 0;
        for (size_t k = 0; k < max_c; k++) {
            size_t v = tok.next("column index");
            if (v == 0) {
                continue;
            }
            if (v > rows) {
                throw ConfigError("alist: column " + std::to_string(c + 1) + " references row " + std::to_string(v) +
                                  " beyond " + std::to_string(rows));
            }
            if (m.get(v - 1, c)) {
                throw ConfigError("alist: duplicate entry in column " + std::to_string(c + 1));
            }
            m.set(v - 1, c);
            seen++;
        }
        if (seen != col_deg[c]) {
            throw ConfigError("alist: column " + std::to_string(c + 1) + " degree mismatch");
        }
    }
    for (size_t r = 0; r < rows; r++) {
        std::vector<size_t> listed;
        for (size_t k = 0; k < max_r; k++) {
            size_t v = tok.next("row index");
            if (v == 0) {
                continue;
            }
            if (v > n) {
                throw ConfigError("alist: row " + std::to_string(r + 1) + " references column beyond " +
                                  std::to_string(n));
            }
            listed.push_back(v - 1);
        }
        if (listed.size() != row_deg[r]) {
            throw ConfigError("alist: row " + std::to_string(r + 1) + " degree mismatch");
        }
        if (BitVector::from_support(n, listed) != m.row(r)) {
            throw ConfigError("alist: row " + std::to_string(r + 1) + " disagrees with the column lists");
        }
    }
    return m;
}

std::string to_dense(const BitMatrix& m) {
    std::ostringstream out;
    out << m.rows() << ' ' << m.cols() << '\n';
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            out << (c ? " " : "") << (m.get(r, c) ? '1' : '0');
        }
        out << '\n';
    }
    return out.str();
}

BitMatrix from_dense(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long rows, cols;
    if (!(in >> rows >> cols) || rows < 0 || cols < 0) {
        throw ConfigError("dense: missing or invalid 'rows cols' header");
    }
    BitMatrix m(static_cast<size_t>(rows), static_cast<size_t>(cols));
    for (long long r = 0; r < rows; r++) {
        for (long long c = 0; c < cols; c++) {
            std::string tok;
            if (!(in >> tok)) {
                throw ConfigError("dense: unexpected end of input at row " + std::to_string(r + 1));
            }
            if (tok == "1") {
                m.set(r, c);
            } else if (tok != "0") {
                throw ConfigError("dense: entry '" + tok + "' is not 0 or 1");
            }
        }
    }
    std::string extra;
    if (in >> extra) {
        throw ConfigError("dense: trailing data after the declared entries");
    }
    return m;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw ConfigError("cannot write " + path.string());
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

BitMatrix load_alist(const std::filesystem::path& path) {
    try {
        return from_alist(read_text_file(path));
    } catch (const ConfigError& e) {
        throw ConfigError(path.filename().string() + ": " + e.what());
    }
}

void save_alist(const std::filesystem::path& path, const BitMatrix& m) { write_text_file(path, to_alist(m)); }

}  // namespace forge
