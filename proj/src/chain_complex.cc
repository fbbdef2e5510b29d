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

#include "forge/chain_complex.h"

#include <algorithm>
#include <sstream>

#include "forge/errors.h"
#include "forge/matrix_io.h"

namespace forge {

namespace {

std::string degree_label(const ChainComplex& c, size_t k) { return c.name() + std::to_string(k); }

std::string pair_label(const ChainComplex& x, size_t i, const ChainComplex& y, size_t j) {
    return degree_label(x, i) + " x " + degree_label(y, j);
}

BitMatrix eye(size_t n) { return BitMatrix::identity(n); }

}  // namespace

ChainComplex::ChainComplex(std::vector<BitMatrix> boundaries, std::string name) : name_(std::move(name)) {
    if (boundaries.empty()) {
        throw ShapeError("a complex built from boundary maps needs at least one map");
    }
    dims_.push_back(boundaries[0].rows());
    for (size_t i = 0; i < boundaries.size(); i++) {
        if (boundaries[i].rows() != dims_.back()) {
            throw ShapeError("boundary " + std::to_string(i + 1) + " has " + std::to_string(boundaries[i].rows()) +
                             " rows but degree " + std::to_string(i) + " has dimension " +
                             std::to_string(dims_.back()));
        }
        dims_.push_back(boundaries[i].cols());
    }
    boundaries_ = std::move(boundaries);
    for (size_t k = 0; k < dims_.size(); k++) {
        summands_.push_back({Summand{degree_label(*this, k), dims_[k]}});
    }
}

ChainComplex ChainComplex::zero(std::vector<size_t> dims, std::string name) {
    if (dims.empty()) {
        throw ShapeError("a complex needs at least one degree");
    }
    ChainComplex c;
    c.name_ = std::move(name);
    c.dims_ = std::move(dims);
    for (size_t k = 1; k < c.dims_.size(); k++) {
        c.boundaries_.emplace_back(c.dims_[k - 1], c.dims_[k]);
    }
    for (size_t k = 0; k < c.dims_.size(); k++) {
        c.summands_.push_back({Summand{degree_label(c, k), c.dims_[k]}});
    }
    return c;
}

ChainComplex ChainComplex::from_check_matrix(const BitMatrix& h, std::string name) {
    return ChainComplex(std::vector<BitMatrix>{h}, std::move(name));
}

size_t ChainComplex::dim(size_t k) const {
    if (k >= dims_.size()) {
        throw ShapeError("degree " + std::to_string(k) + " is outside a complex of length " +
                         std::to_string(length()));
    }
    return dims_[k];
}

const BitMatrix& ChainComplex::boundary(size_t k) const {
    if (k == 0 || k > boundaries_.size()) {
        throw ShapeError("no boundary map of degree " + std::to_string(k) + " in a complex of length " +
                         std::to_string(length()));
    }
    return boundaries_[k - 1];
}

const std::vector<Summand>& ChainComplex::summands(size_t k) const {
    dim(k);
    return summands_[k];
}

size_t ChainComplex::summand_offset(size_t k, size_t index) const {
    const auto& s = summands(k);
    if (index >= s.size()) {
        throw ShapeError("summand index out of range");
    }
    size_t off = 0;
    for (size_t i = 0; i < index; i++) {
        off += s[i].dim;
    }
    return off;
}

void ChainComplex::set_summands(size_t k, std::vector<Summand> summands) {
    size_t total = 0;
    for (const auto& s : summands) {
        total += s.dim;
    }
    if (total != dim(k)) {
        throw ShapeError("summands of degree " + std::to_string(k) + " add up to " + std::to_string(total) +
                         ", expected " + std::to_string(dim(k)));
    }
    summands_[k] = std::move(summands);
}

void ChainComplex::validate() const {
    for (size_t k = 1; k + 1 <= boundaries_.size(); k++) {
        if (!mat_mul(boundary(k), boundary(k + 1)).is_zero()) {
            throw ValidationError("not a chain complex: d" + std::to_string(k) + " * d" + std::to_string(k + 1) +
                                  " != 0 at degree " + std::to_string(k));
        }
    }
}

bool ChainComplex::is_valid() const {
    try {
        validate();
        return true;
    } catch (const ValidationError&) {
        return false;
    }
}

bool ChainComplex::operator==(const ChainComplex& other) const {
    return dims_ == other.dims_ && boundaries_ == other.boundaries_;
}

size_t betti(const ChainComplex& c, size_t k) {
    if (k > c.length()) {
        throw ShapeError("betti: degree " + std::to_string(k) + " exceeds complex length " +
                         std::to_string(c.length()));
    }
    size_t ker = c.dim(k) - (k >= 1 ? rank(c.boundary(k)) : 0);
    size_t im = k + 1 <= c.length() ? rank(c.boundary(k + 1)) : 0;
    return ker - im;
}

ChainComplex tensor_generic(const ChainComplex& x, const ChainComplex& y, SummandOrder order,
                            const std::vector<SummandOrder>& per_degree, std::string name) {
    size_t lx = x.length(), ly = y.length(), len = lx + ly;
    auto pairs_at = [&](size_t k) {
        std::vector<std::pair<size_t, size_t>> out;
        for (size_t i = 0; i <= lx; i++) {
            if (k >= i && k - i <= ly) {
                out.emplace_back(i, k - i);
            }
        }
        SummandOrder o = k < per_degree.size() ? per_degree[k] : order;
        if (o == SummandOrder::kDescending) {
            std::reverse(out.begin(), out.end());
        }
        return out;
    };

    std::vector<std::vector<std::pair<size_t, size_t>>> pairs(len + 1);
    for (size_t k = 0; k <= len; k++) {
        pairs[k] = pairs_at(k);
    }
    auto dim_of = [&](std::pair<size_t, size_t> p) { return x.dim(p.first) * y.dim(p.second); };

    std::vector<BitMatrix> maps;
    for (size_t k = 1; k <= len; k++) {
        const auto& cols = pairs[k];
        const auto& rows = pairs[k - 1];
        BlockLayout layout(rows.size(), std::vector<std::optional<BitMatrix>>(cols.size()));
        std::vector<size_t> rs, cs;
        for (auto p : rows) {
            rs.push_back(dim_of(p));
        }
        for (auto p : cols) {
            cs.push_back(dim_of(p));
        }
        for (size_t a = 0; a < rows.size(); a++) {
            for (size_t b = 0; b < cols.size(); b++) {
                auto [i, j] = cols[b];
                auto [ri, rj] = rows[a];
                if (i >= 1 && ri == i - 1 && rj == j) {
                    layout[a][b] = kron(x.boundary(i), eye(y.dim(j)));
                } else if (j >= 1 && ri == i && rj == j - 1) {
                    layout[a][b] = kron(eye(x.dim(i)), y.boundary(j));
                }
            }
        }
        maps.push_back(block_compose(layout, rs, cs));
    }

    ChainComplex out = len == 0 ? ChainComplex::zero({x.dim(0) * y.dim(0)}) : ChainComplex(std::move(maps));
    out.set_name(name.empty() ? x.name() + "*" + y.name() : std::move(name));
    for (size_t k = 0; k <= len; k++) {
        std::vector<Summand> s;
        for (auto p : pairs[k]) {
            s.push_back({pair_label(x, p.first, y, p.second), dim_of(p)});
        }
        out.set_summands(k, std::move(s));
    }
    return out;
}

namespace {

ChainComplex tensor_1x1(const ChainComplex& x, const ChainComplex& y, std::string name) {
    const BitMatrix& dx = x.boundary(1);
    const BitMatrix& dy = y.boundary(1);
    size_t x0 = x.dim(0), x1 = x.dim(1), y0 = y.dim(0), y1 = y.dim(1);
    BitMatrix d2 = vstack({kron(dx, eye(y1)), kron(eye(x1), dy)});
    BitMatrix d1 = hstack({kron(eye(x0), dy), kron(dx, eye(y0))});
    ChainComplex out(std::vector<BitMatrix>{d1, d2}, std::move(name));
    out.set_summands(0, {{pair_label(x, 0, y, 0), x0 * y0}});
    out.set_summands(1, {{pair_label(x, 0, y, 1), x0 * y1}, {pair_label(x, 1, y, 0), x1 * y0}});
    out.set_summands(2, {{pair_label(x, 1, y, 1), x1 * y1}});
    return out;
}

ChainComplex tensor_2x2(const ChainComplex& j, const ChainComplex& k, std::string name) {
    const BitMatrix& d1j = j.boundary(1);
    const BitMatrix& d2j = j.boundary(2);
    const BitMatrix& d1k = k.boundary(1);
    const BitMatrix& d2k = k.boundary(2);
    size_t j0 = j.dim(0), j1 = j.dim(1), j2 = j.dim(2);
    size_t k0 = k.dim(0), k1 = k.dim(1), k2 = k.dim(2);

    std::vector<size_t> q3{j2 * k1, j1 * k2};
    std::vector<size_t> q2{j0 * k2, j1 * k1, j2 * k0};
    std::vector<size_t> q1{j0 * k1, j1 * k0};
    std::vector<size_t> q0{j0 * k0};
    std::vector<size_t> q4{j2 * k2};

    BitMatrix d4 = block_compose({{kron(eye(j2), d2k)}, {kron(d2j, eye(k2))}}, q3, q4);
    BitMatrix d3 = block_compose({{std::nullopt, kron(d1j, eye(k2))},
                                  {kron(d2j, eye(k1)), kron(eye(j1), d2k)},
                                  {kron(eye(j2), d1k), std::nullopt}},
                                 q2, q3);
    BitMatrix d2 = block_compose({{kron(eye(j0), d2k), kron(d1j, eye(k1)), std::nullopt},
                                  {std::nullopt, kron(eye(j1), d1k), kron(d2j, eye(k0))}},
                                 q1, q2);
    BitMatrix d1 = block_compose({{kron(eye(j0), d1k), kron(d1j, eye(k0))}}, q0, q1);

    ChainComplex out(std::vector<BitMatrix>{d1, d2, d3, d4}, std::move(name));
    out.set_summands(0, {{pair_label(j, 0, k, 0), q0[0]}});
    out.set_summands(1, {{pair_label(j, 0, k, 1), q1[0]}, {pair_label(j, 1, k, 0), q1[1]}});
    out.set_summands(
        2, {{pair_label(j, 0, k, 2), q2[0]}, {pair_label(j, 1, k, 1), q2[1]}, {pair_label(j, 2, k, 0), q2[2]}});
    out.set_summands(3, {{pair_label(j, 2, k, 1), q3[0]}, {pair_label(j, 1, k, 2), q3[1]}});
    out.set_summands(4, {{pair_label(j, 2, k, 2), q4[0]}});
    return out;
}

}  // namespace

ChainComplex tensor(const ChainComplex& x, const ChainComplex& y, std::string name) {
    if (name.empty()) {
        name = x.name() + "*" + y.name();
    }
    if (x.length() == 1 && y.length() == 1) {
        return tensor_1x1(x, y, std::move(name));
    }
    if (x.length() == 2 && y.length() == 2) {
        return tensor_2x2(x, y, std::move(name));
    }
    return tensor_generic(x, y, SummandOrder::kAscending, {}, std::move(name));
}

void save_complex(const std::filesystem::path& dir, const ChainComplex& c) {
    std::filesystem::create_directories(dir);
    std::ostringstream m;
    m << "name " << c.name() << '\n' << "length " << c.length() << '\n';
    for (size_t k = 0; k <= c.length(); k++) {
        m << "dim " << k << ' ' << c.dim(k) << '\n';
        for (const auto& s : c.summands(k)) {
            m << "summand " << k << ' ' << s.dim << ' ' << s.label << '\n';
        }
    }
    for (size_t k = 1; k <= c.length(); k++) {
        std::string file = "d" + std::to_string(k) + ".alist";
        save_alist(dir / file, c.boundary(k));
        m << "boundary " << k << ' ' << file << '\n';
    }
    write_text_file(dir / "manifest.txt", m.str());
}

ChainComplex load_complex(const std::filesystem::path& dir) {
    std::istringstream in(read_text_file(dir / "manifest.txt"));
    std::string line, name = "C";
    size_t length = 0;
    std::vector<size_t> dims;
    std::vector<std::vector<Summand>> summands;
    std::vector<BitMatrix> maps;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "name") {
            ls >> name;
        } else if (key == "length") {
            ls >> length;
            dims.assign(length + 1, 0);
            summands.assign(length + 1, {});
        } else if (key == "dim") {
            size_t k, d;
            ls >> k >> d;
            if (k >= dims.size()) {
                throw ConfigError("complex manifest: degree " + std::to_string(k) + " beyond declared length");
            }
            dims[k] = d;
        } else if (key == "summand") {
            size_t k, d;
            ls >> k >> d;
            std::string label;
            std::getline(ls >> std::ws, label);
            if (k >= summands.size()) {
                throw ConfigError("complex manifest: summand degree beyond declared length");
            }
            summands[k].push_back({label, d});
        } else if (key == "boundary") {
            size_t k;
            std::string file;
            ls >> k >> file;
            if (k != maps.size() + 1) {
                throw ConfigError("complex manifest: boundaries must be listed in increasing degree");
            }
            maps.push_back(load_alist(dir / file));
        } else {
            throw ConfigError("complex manifest: unknown key '" + key + "'");
        }
    }
    if (dims.empty()) {
        throw ConfigError("complex manifest: missing 'length'");
    }
    ChainComplex c = maps.empty() ? ChainComplex::zero(dims, name) : ChainComplex(std::move(maps), name);
    if (c.dims() != dims) {
        throw ConfigError("complex manifest: dims disagree with boundary shapes");
    }
    for (size_t k = 0; k <= length; k++) {
        if (!summands[k].empty()) {
            c.set_summands(k, summands[k]);
        }
    }
    return c;
}

}  // namespace forge
