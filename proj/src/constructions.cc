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

#include "forge/constructions.h"

#include <algorithm>
#include <numeric>

#include "forge/errors.h"

namespace forge {

namespace {

using Grid = std::vector<std::vector<std::string>>;

constexpr std::array<std::pair<Family, const char*>, 10> kFamilyNames{{
    {Family::kHgp, "hgp"},
    {Family::kSehgp, "sehgp"},
    {Family::kBsh, "bsh"},
    {Family::kSsh, "ssh"},
    {Family::kBssh, "bssh"},
    {Family::kRsh1, "rsh1"},
    {Family::kRsh2, "rsh2"},
    {Family::kBrsh1, "brsh1"},
    {Family::kBrsh2, "brsh2"},
    {Family::kXzzx3d, "xzzx3d"},
}};

std::vector<size_t> offsets(const std::vector<size_t>& sizes) {
    std::vector<size_t> out(sizes.size() + 1, 0);
    std::partial_sum(sizes.begin(), sizes.end(), out.begin() + 1);
    return out;
}

size_t band_of(const std::vector<size_t>& offs, size_t index) {
    return static_cast<size_t>(std::upper_bound(offs.begin(), offs.end(), index) - offs.begin()) - 1;
}

size_t pow4(size_t x) { return x * x * x * x; }

ChainComplex product_complex(const ClassicalCode& a, const ClassicalCode& b, const std::string& name,
                             const std::string& first, const std::string& second) {
    return tensor(ChainComplex::from_check_matrix(a.h(), first), ChainComplex::from_check_matrix(b.h(), second),
                  name);
}

std::vector<size_t> summand_dims(const ChainComplex& c, size_t k) {
    std::vector<size_t> out;
    for (const auto& s : c.summands(k)) {
        out.push_back(s.dim);
    }
    return out;
}

nlohmann::json summand_labels(const ChainComplex& c, size_t k) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& s : c.summands(k)) {
        out.push_back(s.label);
    }
    return out;
}

/// Claimed parameters for identical [n,k,d] bases; `guaranteed` records whether
/// the premise under which they were derived holds for this input.
nlohmann::json formula(size_t n, size_t checks, size_t k, const std::string& d, bool guaranteed) {
    return {{"n", n}, {"checks", checks}, {"k", k}, {"d", d}, {"guaranteed", guaranteed}};
}

void fill_counts(BlockTaggedCss& t) {
    t.metadata["family"] = family_name(t.family);
    t.metadata["n"] = t.css.n();
    t.metadata["checks"] = t.css.num_checks();
    t.metadata["block_map"] = block_map_json(t);
}

BlockTaggedCss attach_left_kernels(BlockTaggedCss t) {
    t.css.hsx = left_kernel(t.css.hx);
    t.css.hsz = left_kernel(t.css.hz);
    t.metadata["syndrome_checks"] = "rref left kernels";
    return t;
}

}  // namespace

std::string family_name(Family f) {
    for (const auto& [fam, name] : kFamilyNames) {
        if (fam == f) {
            return name;
        }
    }
    return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
    for (const auto& [fam, n] : kFamilyNames) {
        if (name == n) {
            return fam;
        }
    }
    return std::nullopt;
}

std::pair<BitMatrix, BitMatrix> symplectic_view(const BlockTaggedCss& t) {
    const CssCode& c = t.css;
    if (c.form == CheckForm::kSymplectic) {
        return {c.hx, c.hz};
    }
    return {vstack({BitMatrix(c.hz.rows(), c.n()), c.hx}), vstack({c.hz, BitMatrix(c.hx.rows(), c.n())})};
}

void validate_tagged(const BlockTaggedCss& t) {
    auto [sx, sz] = symplectic_view(t);
    auto roffs = offsets(t.row_bands);
    auto coffs = offsets(t.col_bands);
    if (roffs.back() != sx.rows() || coffs.back() != sx.cols()) {
        throw ShapeError("block bands do not tile the check matrices");
    }
    if (t.x_labels.size() != t.row_bands.size() || t.z_labels.size() != t.row_bands.size()) {
        throw ShapeError("block labels do not match the row bands");
    }
    // Commutation first: it is the invariant a corrupted file most often breaks.
    BitMatrix p = mat_mul(sx, sz.transposed()) + mat_mul(sz, sx.transposed());
    for (size_t i = 0; i < p.rows(); i++) {
        size_t j = p.row(i).first_set();
        if (j != BitVector::npos) {
            size_t a = band_of(roffs, i), b = band_of(roffs, j);
            throw CommutationError("commutation broken at block (" + std::to_string(std::max(a, b) + 1) + "," +
                                   std::to_string(std::min(a, b) + 1) + "): stabilizer " + std::to_string(i) +
                                   " anticommutes with stabilizer " + std::to_string(j));
        }
    }
    for (size_t r = 0; r < t.row_bands.size(); r++) {
        if (t.x_labels[r].size() != t.col_bands.size() || t.z_labels[r].size() != t.col_bands.size()) {
            throw ShapeError("block labels do not match the column bands");
        }
        for (size_t c = 0; c < t.col_bands.size(); c++) {
            for (auto [m, labels, part] : {std::tuple{&sx, &t.x_labels, "X"}, std::tuple{&sz, &t.z_labels, "Z"}}) {
                if ((*labels)[r][c].empty() &&
                    !m->submatrix(roffs[r], t.row_bands[r], coffs[c], t.col_bands[c]).is_zero()) {
                    throw ValidationError(std::string(part) + " block (" + std::to_string(r + 1) + "," +
                                          std::to_string(c + 1) + ") is labeled zero but is not");
                }
            }
        }
    }
    validate_css(t.css);
}

nlohmann::json block_map_json(const BlockTaggedCss& t) {
    nlohmann::json blocks = nlohmann::json::array();
    for (size_t r = 0; r < t.row_bands.size(); r++) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t c = 0; c < t.col_bands.size(); c++) {
            row.push_back({{"x", t.x_labels[r][c]}, {"z", t.z_labels[r][c]}});
        }
        blocks.push_back(std::move(row));
    }
    return {{"row_bands", t.row_bands}, {"col_bands", t.col_bands}, {"z_bands", t.z_bands}, {"blocks", blocks}};
}

BlockTaggedCss tagged_from_block_map(CssCode code, Family family, const nlohmann::json& block_map) {
    BlockTaggedCss t;
    t.css = std::move(code);
    t.family = family;
    try {
        t.row_bands = block_map.at("row_bands").get<std::vector<size_t>>();
        t.col_bands = block_map.at("col_bands").get<std::vector<size_t>>();
        t.z_bands = block_map.at("z_bands").get<size_t>();
        const auto& blocks = block_map.at("blocks");
        if (blocks.size() != t.row_bands.size()) {
            throw ConfigError("block map has " + std::to_string(blocks.size()) + " block rows, expected " +
                              std::to_string(t.row_bands.size()));
        }
        for (const auto& row : blocks) {
            if (row.size() != t.col_bands.size()) {
                throw ConfigError("block map row has the wrong number of blocks");
            }
            std::vector<std::string> xs, zs;
            for (const auto& b : row) {
                xs.push_back(b.at("x").get<std::string>());
                zs.push_back(b.at("z").get<std::string>());
            }
            t.x_labels.push_back(std::move(xs));
            t.z_labels.push_back(std::move(zs));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed block map: ") + e.what());
    }
    return t;
}

BlockTaggedCss hgp(const BitMatrix& h1, const BitMatrix& h2) {
    size_t m1 = h1.rows(), n1 = h1.cols(), m2 = h2.rows(), n2 = h2.cols();
    BlockTaggedCss t;
    t.family = Family::kHgp;
    BitMatrix hx = hstack({kron(h1, BitMatrix::identity(n2)), kron(BitMatrix::identity(m1), h2.transposed())});
    BitMatrix hz = hstack({kron(BitMatrix::identity(n1), h2), kron(h1.transposed(), BitMatrix::identity(m2))});
    t.css = CssCode(std::move(hx), std::move(hz));
    t.row_bands = {n1 * m2, m1 * n2};
    t.col_bands = {n1 * n2, m1 * m2};
    t.z_bands = 1;
    t.x_labels = {{"", ""}, {"H1 x I", "I x H2T"}};
    t.z_labels = {{"I x H2", "H1T x I"}, {"", ""}};
    size_t k1 = n1 - rank(h1), k2 = n2 - rank(h2);
    size_t k1t = m1 - rank(h1), k2t = m2 - rank(h2);
    t.metadata["formula"] = {{"n", n1 * n2 + m1 * m2}, {"k", k1 * k2 + k1t * k2t}, {"guaranteed", true}};
    fill_counts(t);
    validate_tagged(t);
    return t;
}

SehgpBundle sehgp(const ClassicalCode& x, const ClassicalCode& y, const ClassicalCode& z, const ClassicalCode& w) {
    ChainComplex j = product_complex(x, y, "J", "X", "Y");
    ChainComplex k = product_complex(z, w, "K", "Z", "W");
    SehgpBundle b{tensor(j, k, "Q"), {}, {x, y, z, w}};
    const ChainComplex& q = b.q;
    BlockTaggedCss& t = b.css;
    t.family = Family::kSehgp;
    t.css = CssCode(q.boundary(2), q.boundary(3).transposed());
    t.css.hsx = q.boundary(1);
    t.css.hsz = q.boundary(4).transposed();
    t.row_bands = summand_dims(q, 3);
    for (size_t d : summand_dims(q, 1)) {
        t.row_bands.push_back(d);
    }
    t.col_bands = summand_dims(q, 2);
    t.z_bands = 2;
    t.z_labels = {{"", "d2T[J] x I", "I x d1T[K]"},
                  {"d1T[J] x I", "I x d2T[K]", ""},
                  {"", "", ""},
                  {"", "", ""}};
    t.x_labels = {{"", "", ""},
                  {"", "", ""},
                  {"I x d2[K]", "d1[J] x I", ""},
                  {"", "I x d1[K]", "d2[J] x I"}};
    nlohmann::json rows = summand_labels(q, 3);
    for (const auto& s : summand_labels(q, 1)) {
        rows.push_back(s);
    }
    t.metadata["row_spaces"] = rows;
    t.metadata["col_spaces"] = summand_labels(q, 2);
    bool same = x.h() == y.h() && y.h() == z.h() && z.h() == w.h();
    bool premise = same && identical_code_premise(x);
    t.metadata["identical_code_premise"] = premise;
    t.metadata["formula"] = formula(6 * pow4(x.n()), 8 * pow4(x.n()), 6 * pow4(x.k()), "d", premise);
    fill_counts(t);
    validate_tagged(t);
    return b;
}

BlockTaggedCss cphr(const BlockTaggedCss& c, const std::vector<CphrStep>& steps) {
    auto [sx, sz] = symplectic_view(c);
    auto roffs = offsets(c.row_bands);
    auto coffs = offsets(c.col_bands);
    BlockTaggedCss out = c;
    nlohmann::json history = c.metadata.value("cphr", nlohmann::json::array());
    for (const auto& step : steps) {
        if (step.col >= c.col_bands.size()) {
            throw ConfigError("CPHR column band " + std::to_string(step.col + 1) + " out of range");
        }
        for (size_t r : step.rows) {
            if (r >= c.row_bands.size()) {
                throw ConfigError("CPHR row band " + std::to_string(r + 1) + " out of range");
            }
            for (size_t i = roffs[r]; i < roffs[r + 1]; i++) {
                for (size_t j = coffs[step.col]; j < coffs[step.col + 1]; j++) {
                    bool x = sx.get(i, j);
                    sx.set(i, j, sz.get(i, j));
                    sz.set(i, j, x);
                }
            }
            std::swap(out.x_labels[r][step.col], out.z_labels[r][step.col]);
        }
        std::vector<size_t> one_based;
        for (size_t r : step.rows) {
            one_based.push_back(r + 1);
        }
        history.push_back({{"type", step.type == CphrType::kT1 ? "T1" : "T2"},
                           {"rows", one_based},
                           {"col", step.col + 1}});
    }
    out.css = CssCode(std::move(sx), std::move(sz), CheckForm::kSymplectic);
    out.z_bands = 0;
    out.metadata["cphr"] = history;
    fill_counts(out);
    validate_tagged(out);
    return out;
}

CphrStep hgp_t1() { return {CphrType::kT1, {0, 1}, 0}; }
CphrStep hgp_t2() { return {CphrType::kT2, {0, 1}, 1}; }
CphrStep bsh_t2() { return {CphrType::kT2, {2, 1}, 1}; }
CphrStep bsh_t1() { return {CphrType::kT1, {3, 0}, 1}; }

BlockTaggedCss bsh(const SehgpBundle& bundle) {
    BlockTaggedCss t = cphr(bundle.css, {bsh_t2(), bsh_t1()});
    t.family = Family::kBsh;
    ChainComplex j = product_complex(bundle.base[0], bundle.base[1], "J", "X", "Y");
    ChainComplex k = product_complex(bundle.base[2], bundle.base[3], "K", "Z", "W");
    const BitMatrix &d1j = j.boundary(1), &d2j = j.boundary(2), &d1k = k.boundary(1), &d2k = k.boundary(2);
    auto eye = [](size_t n) { return BitMatrix::identity(n); };
    size_t j0 = j.dim(0), j2 = j.dim(2), k0 = k.dim(0), k2 = k.dim(2);
    // Each band annihilates one disjoint piece of the rotated X (resp. Z) parts.
    std::vector<size_t> sx_rows{j2 * k2, j0 * k0, j0 * k0};
    std::vector<size_t> sz_rows{j0 * k0, j2 * k2, j2 * k2};
    BitMatrix top = kron(eye(j2), d2k.transposed());
    BitMatrix mid = kron(d2j.transposed(), eye(k2));
    BitMatrix left = kron(eye(j0), d1k);
    BitMatrix right = kron(d1j, eye(k0));
    t.css.hsx = block_compose({{top, mid, std::nullopt, std::nullopt},
                               {std::nullopt, std::nullopt, left, std::nullopt},
                               {std::nullopt, std::nullopt, std::nullopt, right}},
                              sx_rows, t.row_bands);
    t.css.hsz = block_compose({{std::nullopt, std::nullopt, left, right},
                               {std::nullopt, mid, std::nullopt, std::nullopt},
                               {top, std::nullopt, std::nullopt, std::nullopt}},
                              sz_rows, t.row_bands);
    t.metadata["syndrome_checks"] = "three disjoint blocks";
    t.metadata["syndrome_check_bands"] = {{"hsx", sx_rows}, {"hsz", sz_rows}};
    fill_counts(t);
    validate_tagged(t);
    return t;
}

bool identical_code_premise(const ClassicalCode& base) {
    const BitMatrix& h = base.h();
    if (h.rows() != h.cols()) {
        return false;
    }
    return row_echelon(row_space_complement(h)).basis == row_echelon(row_space_complement(h.transposed())).basis;
}

BlockTaggedCss ssh(const ClassicalCode& base) {
    ChainComplex j = product_complex(base, base, "J", "X", "Y");
    ChainComplex p = tensor(ChainComplex::from_check_matrix(j.boundary(2), "F"),
                            ChainComplex::from_check_matrix(j.boundary(1), "G"), "P");
    BlockTaggedCss t;
    t.family = Family::kSsh;
    t.css = CssCode(p.boundary(1), p.boundary(2).transposed());
    t.row_bands = {p.dim(2), p.dim(0)};
    t.col_bands = summand_dims(p, 1);
    t.z_bands = 1;
    t.z_labels = {{"d2T[J] x I", "I x d1T[J]"}, {"", ""}};
    t.x_labels = {{"", ""}, {"I x d1[J]", "d2[J] x I"}};
    t.metadata["row_spaces"] = {p.summands(2)[0].label, p.summands(0)[0].label};
    t.metadata["col_spaces"] = summand_labels(p, 1);
    bool premise = identical_code_premise(base);
    t.metadata["identical_code_premise"] = premise;
    size_t d = classical_distance(base.h(), base.n()).value;
    t.metadata["formula"] =
        formula(5 * pow4(base.n()), 4 * pow4(base.n()), 2 * pow4(base.k()), std::to_string(d * d), premise);
    fill_counts(t);
    validate_tagged(t);
    return t;
}

BlockTaggedCss bssh(const ClassicalCode& base) {
    BlockTaggedCss t = attach_left_kernels(cphr(ssh(base), {hgp_t2()}));
    t.family = Family::kBssh;
    fill_counts(t);
    validate_tagged(t);
    return t;
}

BlockTaggedCss rsh(const SehgpBundle& bundle, int which) {
    if (which != 1 && which != 2) {
        throw ConfigError("reduced code index must be 1 or 2");
    }
    const BlockTaggedCss& s = bundle.css;
    // Row bands of the SEHGP layout: 0,1 are Z checks, 2,3 are X checks.
    size_t zb = which == 1 ? 1 : 0;
    size_t xb = which == 1 ? 2 : 3;
    size_t c0 = which == 1 ? 0 : 1;
    auto roffs = offsets(s.row_bands);
    auto coffs = offsets(s.col_bands);
    size_t width = s.col_bands[c0] + s.col_bands[c0 + 1];
    BlockTaggedCss t;
    t.family = which == 1 ? Family::kRsh1 : Family::kRsh2;
    BitMatrix hx = s.css.hx.submatrix(roffs[xb] - roffs[2], s.row_bands[xb], coffs[c0], width);
    BitMatrix hz = s.css.hz.submatrix(roffs[zb], s.row_bands[zb], coffs[c0], width);
    t.css = CssCode(std::move(hx), std::move(hz));
    t.css.hsx = left_kernel(t.css.hx);
    t.css.hsz = left_kernel(t.css.hz);
    t.row_bands = {s.row_bands[zb], s.row_bands[xb]};
    t.col_bands = {s.col_bands[c0], s.col_bands[c0 + 1]};
    t.z_bands = 1;
    t.z_labels = {{s.z_labels[zb][c0], s.z_labels[zb][c0 + 1]}, {"", ""}};
    t.x_labels = {{"", ""}, {s.x_labels[xb][c0], s.x_labels[xb][c0 + 1]}};
    t.metadata["row_spaces"] = {s.metadata["row_spaces"][zb], s.metadata["row_spaces"][xb]};
    t.metadata["col_spaces"] = {s.metadata["col_spaces"][c0], s.metadata["col_spaces"][c0 + 1]};
    t.metadata["syndrome_checks"] = "rref left kernels";
    bool premise = s.metadata.value("identical_code_premise", false);
    t.metadata["identical_code_premise"] = premise;
    const ClassicalCode& base = bundle.base[0];
    t.metadata["formula"] = formula(5 * pow4(base.n()), 4 * pow4(base.n()), 4 * pow4(base.k()), "d", premise);
    fill_counts(t);
    validate_tagged(t);
    return t;
}

BlockTaggedCss brsh(const SehgpBundle& bundle, int which) {
    BlockTaggedCss t = attach_left_kernels(cphr(rsh(bundle, which), {hgp_t2()}));
    t.family = which == 1 ? Family::kBrsh1 : Family::kBrsh2;
    fill_counts(t);
    validate_tagged(t);
    return t;
}

BlockTaggedCss xzzx3d(size_t n) {
    if (n < 2) {
        throw ConfigError("xzzx3d needs n >= 2, got " + std::to_string(n));
    }
    BlockTaggedCss t = bssh(repetition_closed_loop(n));
    t.family = Family::kXzzx3d;
    t.metadata["formula"] = formula(5 * pow4(n), 4 * pow4(n), 2, std::to_string(n * n), true);
    fill_counts(t);
    return t;
}

BlockTaggedCss build_family(Family f, const ClassicalCode& base) {
    switch (f) {
        case Family::kHgp:
            return hgp(base.h(), base.h());
        case Family::kSehgp:
            return sehgp(base, base, base, base).css;
        case Family::kBsh:
            return bsh(sehgp(base, base, base, base));
        case Family::kSsh:
            return ssh(base);
        case Family::kBssh:
            return bssh(base);
        case Family::kRsh1:
        case Family::kRsh2:
            return rsh(sehgp(base, base, base, base), f == Family::kRsh1 ? 1 : 2);
        case Family::kBrsh1:
        case Family::kBrsh2:
            return brsh(sehgp(base, base, base, base), f == Family::kBrsh1 ? 1 : 2);
        case Family::kXzzx3d:
            if (base.h() != repetition_closed_loop(std::max<size_t>(base.n(), 2)).h()) {
                throw ConfigError("xzzx3d needs a closed-loop repetition base");
            }
            return xzzx3d(base.n());
    }
    throw ConfigError("unknown family");
}

}  // namespace forge
