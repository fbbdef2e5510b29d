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

#include "forge/css_code.h"

#include <algorithm>
#include <map>
#include <numeric>

#include "forge/errors.h"

namespace forge {

PauliError::PauliError(BitVector x, BitVector z) : ex(std::move(x)), ez(std::move(z)) {
    if (ex.size() != ez.size()) {
        throw ShapeError("Pauli X and Z parts have different lengths");
    }
}

PauliError PauliError::from_string(std::string_view paulis) {
    PauliError e = identity(paulis.size());
    for (size_t q = 0; q < paulis.size(); q++) {
        switch (paulis[q]) {
            case 'I':
            case '_':
                break;
            case 'X':
                e.ex.set(q);
                break;
            case 'Z':
                e.ez.set(q);
                break;
            case 'Y':
                e.ex.set(q);
                e.ez.set(q);
                break;
            default:
                throw ValidationError(std::string("unknown Pauli '") + paulis[q] + "'");
        }
    }
    return e;
}

PauliError& PauliError::operator*=(const PauliError& other) {
    ex ^= other.ex;
    ez ^= other.ez;
    return *this;
}

std::string PauliError::str() const {
    std::string s(n(), 'I');
    for (size_t q = 0; q < n(); q++) {
        s[q] = "IXZY"[ex.get(q) + 2 * ez.get(q)];
    }
    return s;
}

Syndrome& Syndrome::operator^=(const Syndrome& other) {
    sx ^= other.sx;
    sz ^= other.sz;
    return *this;
}

CssCode::CssCode(BitMatrix x_checks, BitMatrix z_checks, CheckForm check_form)
    : hx(std::move(x_checks)), hz(std::move(z_checks)), form(check_form) {
    if (hx.cols() != hz.cols()) {
        throw ShapeError("hx has " + std::to_string(hx.cols()) + " columns but hz has " + std::to_string(hz.cols()));
    }
    if (form == CheckForm::kSymplectic && hx.rows() != hz.rows()) {
        throw ShapeError("symplectic check matrices must have the same number of rows");
    }
}

size_t CssCode::num_checks() const { return form == CheckForm::kCss ? hx.rows() + hz.rows() : hx.rows(); }

BitMatrix CssCode::full_x() const {
    if (form == CheckForm::kSymplectic) {
        return hx;
    }
    return vstack({hx, BitMatrix(hz.rows(), n())});
}

BitMatrix CssCode::full_z() const {
    if (form == CheckForm::kSymplectic) {
        return hz;
    }
    return vstack({BitMatrix(hx.rows(), n()), hz});
}

CssCode CssCode::to_symplectic() const {
    if (form == CheckForm::kSymplectic) {
        return *this;
    }
    CssCode out(full_x(), full_z(), CheckForm::kSymplectic);
    if (hsx || hsz) {
        BitMatrix sx = hsx ? *hsx : BitMatrix(0, hx.rows());
        BitMatrix sz = hsz ? *hsz : BitMatrix(0, hz.rows());
        std::vector<size_t> rows{sx.rows(), sz.rows()}, cols{hx.rows(), hz.rows()};
        BitMatrix both = block_compose({{sx, std::nullopt}, {std::nullopt, sz}}, rows, cols);
        // Each syndrome check still annihilates its own half after embedding.
        if (hsx) {
            out.hsx = both.submatrix(0, sx.rows(), 0, both.cols());
        }
        if (hsz) {
            out.hsz = both.submatrix(sx.rows(), sz.rows(), 0, both.cols());
        }
    }
    return out;
}

void validate_css(const CssCode& c) {
    if (c.hx.cols() != c.hz.cols()) {
        throw ShapeError("hx and hz act on different numbers of qubits");
    }
    if (c.form == CheckForm::kCss) {
        BitMatrix p = mat_mul(c.hx, c.hz.transposed());
        for (size_t i = 0; i < p.rows(); i++) {
            size_t j = p.row(i).first_set();
            if (j != BitVector::npos) {
                throw CommutationError("commutation broken: X-check " + std::to_string(i) +
                                       " anticommutes with Z-check " + std::to_string(j));
            }
        }
    } else {
        if (c.hx.rows() != c.hz.rows()) {
            throw ShapeError("symplectic check matrices must have the same number of rows");
        }
        BitMatrix p = mat_mul(c.hx, c.hz.transposed()) + mat_mul(c.hz, c.hx.transposed());
        for (size_t i = 0; i < p.rows(); i++) {
            size_t j = p.row(i).first_set();
            if (j != BitVector::npos) {
                throw CommutationError("commutation broken: stabilizer " + std::to_string(std::min(i, j)) +
                                       " anticommutes with stabilizer " + std::to_string(std::max(i, j)));
            }
        }
    }
    auto check_syndrome = [&](const std::optional<BitMatrix>& hs, const BitMatrix& h, const char* name) {
        if (!hs) {
            return;
        }
        size_t expect = c.form == CheckForm::kCss ? h.rows() : c.num_checks();
        if (hs->cols() != expect) {
            throw ShapeError(std::string(name) + " has " + std::to_string(hs->cols()) + " columns, expected " +
                             std::to_string(expect));
        }
        if (!mat_mul(*hs, h).is_zero()) {
            throw ValidationError(std::string(name) + " does not annihilate its check matrix");
        }
    };
    check_syndrome(c.hsx, c.hx, "hsx");
    check_syndrome(c.hsz, c.hz, "hsz");
}

size_t logical_count(const CssCode& c) {
    if (c.form == CheckForm::kCss) {
        return c.n() - rank(c.hx) - rank(c.hz);
    }
    return c.n() - rank(hstack({c.hx, c.hz}));
}

Syndrome syndrome(const CssCode& c, const PauliError& e) {
    if (e.n() != c.n()) {
        throw ShapeError("error acts on " + std::to_string(e.n()) + " qubits but the code has " +
                         std::to_string(c.n()));
    }
    if (c.form == CheckForm::kCss) {
        return Syndrome{c.hx * e.ez, c.hz * e.ex};
    }
    return Syndrome{(c.hx * e.ez) ^ (c.hz * e.ex), BitVector(0)};
}

bool anticommutes(const PauliError& a, const PauliError& b) { return a.ex.dot(b.ez) ^ a.ez.dot(b.ex); }

BitVector commutation_pattern(const std::vector<PauliError>& ops, const PauliError& e) {
    BitVector out(ops.size());
    for (size_t i = 0; i < ops.size(); i++) {
        if (anticommutes(ops[i], e)) {
            out.set(i);
        }
    }
    return out;
}

std::vector<PauliError> logical_basis(const CssCode& c) {
    size_t n = c.n();
    BitMatrix sx = c.full_x(), sz = c.full_z();
    // Normalizer: (ex | ez) with sz·ex + sx·ez = 0.
    std::vector<BitVector> normalizer = kernel_basis(hstack({sz, sx}));
    std::vector<BitVector> rows;
    for (size_t r = 0; r < sx.rows(); r++) {
        rows.push_back(sx.row(r).concat(sz.row(r)));
    }
    RowEchelon span = row_echelon(BitMatrix::from_rows(2 * n, rows));
    std::vector<PauliError> out;
    for (const auto& v : normalizer) {
        if (span.insert(v)) {
            out.emplace_back(v.slice(0, n), v.slice(n, n));
        }
    }
    return out;
}

namespace {

Distance from_search(const SearchResult& r, std::optional<BitVector> witness) {
    if (r.columns) {
        return Distance::exact(r.weight, std::move(witness));
    }
    return Distance::lower_bound(r.weight - 1);
}

Distance min_distance(const Distance& a, const Distance& b) {
    auto lo = [](const Distance& d) { return d.is_exact() ? d.value : d.value + 1; };
    const Distance& small = lo(a) <= lo(b) ? a : b;
    const Distance& other = lo(a) <= lo(b) ? b : a;
    if (small.is_exact() && lo(other) >= small.value) {
        return small;
    }
    return Distance::lower_bound(std::min(lo(a), lo(b)) - 1);
}

Distance sector_distance(const CssCode& c, const std::vector<PauliError>& logicals, bool pure_z, size_t max_weight,
                         uint64_t max_nodes) {
    // A pure-Z operator is seen by the X parts and detected as logical by ℓ.ex.
    BitMatrix a = pure_z ? c.full_x() : c.full_z();
    BitMatrix b(logicals.size(), c.n());
    for (size_t i = 0; i < logicals.size(); i++) {
        b.row(i) = pure_z ? logicals[i].ex : logicals[i].ez;
    }
    MinWeightSolver solver = MinWeightSolver::from_matrices(a, b);
    SearchResult r = solver.solve(BitVector(a.rows()), max_weight, true, max_nodes);
    std::optional<BitVector> w;
    if (r.columns) {
        w = BitVector::from_support(c.n(), *r.columns);
    }
    return from_search(r, std::move(w));
}

std::vector<BitVector> pauli_columns(const BitMatrix& sx, const BitMatrix& sz) {
    auto xc = sz.column_vectors();
    auto zc = sx.column_vectors();
    std::vector<BitVector> cols;
    for (size_t q = 0; q < sx.cols(); q++) {
        cols.push_back(xc[q]);
        cols.push_back(zc[q]);
        cols.push_back(xc[q] ^ zc[q]);
    }
    return cols;
}

std::vector<size_t> pauli_groups(size_t n) {
    std::vector<size_t> g;
    for (size_t q = 0; q < n; q++) {
        g.insert(g.end(), {q, q, q});
    }
    return g;
}

}  // namespace

Distance distance(const CssCode& c, DistanceKind kind, size_t max_weight, uint64_t max_nodes) {
    std::vector<PauliError> logicals = logical_basis(c);
    if (logicals.empty()) {
        throw NoLogicalsError("the code encodes no logical qubits");
    }
    switch (kind) {
        case DistanceKind::kX:
            return sector_distance(c, logicals, true, max_weight, max_nodes);
        case DistanceKind::kZ:
            return sector_distance(c, logicals, false, max_weight, max_nodes);
        case DistanceKind::kFull:
            break;
    }
    if (c.form == CheckForm::kCss) {
        return min_distance(sector_distance(c, logicals, true, max_weight, max_nodes),
                            sector_distance(c, logicals, false, max_weight, max_nodes));
    }
    BitMatrix lx(logicals.size(), c.n()), lz(logicals.size(), c.n());
    for (size_t i = 0; i < logicals.size(); i++) {
        lx.row(i) = logicals[i].ex;
        lz.row(i) = logicals[i].ez;
    }
    MinWeightSolver solver(pauli_columns(c.full_x(), c.full_z()), pauli_columns(lx, lz), pauli_groups(c.n()));
    SearchResult r = solver.solve(BitVector(c.num_checks()), max_weight, true, max_nodes);
    std::optional<BitVector> w;
    if (r.columns) {
        PauliError e = pauli_from_columns(*r.columns, c.n());
        w = e.ex.concat(e.ez);
    }
    return from_search(r, std::move(w));
}

MinWeightSolver pauli_solver(const CssCode& c, bool with_logicals) {
    BitMatrix sx = c.full_x(), sz = c.full_z();
    if (with_logicals) {
        std::vector<PauliError> logicals = logical_basis(c);
        BitMatrix lx(logicals.size(), c.n()), lz(logicals.size(), c.n());
        for (size_t i = 0; i < logicals.size(); i++) {
            lx.row(i) = logicals[i].ex;
            lz.row(i) = logicals[i].ez;
        }
        sx = vstack({sx, lx});
        sz = vstack({sz, lz});
    }
    return MinWeightSolver(pauli_columns(sx, sz), {}, pauli_groups(c.n()));
}

PauliError pauli_from_columns(const std::vector<size_t>& columns, size_t n) {
    PauliError e = PauliError::identity(n);
    for (size_t col : columns) {
        size_t q = col / 3, kind = col % 3;
        if (kind != 1) {
            e.ex.flip(q);
        }
        if (kind != 0) {
            e.ez.flip(q);
        }
    }
    return e;
}

std::vector<TannerComponent> tanner_components(const BitMatrix& h) {
    size_t m = h.rows(), n = h.cols();
    // Union-find over qubits 0..n-1 and checks n..n+m-1.
    std::vector<size_t> parent(n + m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](size_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    std::vector<bool> touched(n, false);
    for (size_t r = 0; r < m; r++) {
        for (size_t q : h.row(r).support()) {
            touched[q] = true;
            size_t a = find(q), b = find(n + r);
            if (a != b) {
                parent[std::max(a, b)] = std::min(a, b);
            }
        }
    }
    std::map<size_t, TannerComponent> comps;
    for (size_t q = 0; q < n; q++) {
        if (touched[q]) {
            comps[find(q)].qubits.push_back(q);
        }
    }
    for (size_t r = 0; r < m; r++) {
        if (h.row(r).any()) {
            comps[find(n + r)].checks.push_back(r);
        }
    }
    std::vector<TannerComponent> out;
    for (auto& [root, comp] : comps) {
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<TannerComponent> tanner_components(const CssCode& c, DistanceKind kind) {
    if (kind == DistanceKind::kFull) {
        throw ConfigError("Tanner components are defined per check block (X or Z)");
    }
    return tanner_components(kind == DistanceKind::kX ? c.hx : c.hz);
}

StabilizerWeights stabilizer_weights(const CssCode& c) {
    BitMatrix sx = c.full_x(), sz = c.full_z();
    StabilizerWeights w;
    BitMatrix support(sx.rows(), c.n());
    for (size_t r = 0; r < sx.rows(); r++) {
        support.row(r) = sx.row(r) | sz.row(r);
    }
    w.max_check_weight = support.max_row_weight();
    w.max_qubit_degree = support.max_col_weight();
    return w;
}

}  // namespace forge
