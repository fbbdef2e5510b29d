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

#include "forge/classical_code.h"

#include <bit>

#include "forge/errors.h"
#include "forge/min_weight.h"

namespace forge {

namespace {

constexpr size_t kEnumerateMaxK = 20;

}  // namespace

Distance Distance::exact(size_t d, std::optional<BitVector> witness) {
    Distance out;
    out.kind = Kind::kExact;
    out.value = d;
    out.upper_bound = d;
    out.witness = std::move(witness);
    return out;
}

Distance Distance::lower_bound(size_t ruled_out) {
    Distance out;
    out.kind = Kind::kLowerBound;
    out.value = ruled_out;
    return out;
}

std::string Distance::str() const {
    switch (kind) {
        case Kind::kExact:
            return std::to_string(value);
        case Kind::kLowerBound: {
            std::string s = ">" + std::to_string(value);
            if (upper_bound) {
                s += " (<=" + std::to_string(*upper_bound) + ")";
            }
            return s;
        }
        case Kind::kUndefined:
            break;
    }
    return "undefined";
}

std::string CodeParams::str() const {
    return "[" + std::to_string(n) + "," + std::to_string(k) + "," + d.str() + "]";
}

ClassicalCode::ClassicalCode(BitMatrix h, std::string name) : h_(std::move(h)), name_(std::move(name)) {}

size_t ClassicalCode::k() const {
    if (!k_) {
        k_ = n() - rank(h_);
    }
    return *k_;
}

CodeParams ClassicalCode::params(size_t max_weight) const {
    if (max_weight < 1) {
        throw ConfigError("max_weight must be at least 1");
    }
    return CodeParams{n(), k(), classical_distance(h_, max_weight)};
}

Distance classical_distance(const BitMatrix& h, size_t max_weight) {
    std::vector<BitVector> basis = kernel_basis(h);
    size_t k = basis.size();
    if (k == 0) {
        return Distance::undefined();
    }
    if (k <= kEnumerateMaxK) {
        // Gray-code walk over all nonzero codewords.
        BitVector cur(h.cols());
        std::optional<BitVector> best;
        for (uint64_t g = 1; g < (uint64_t{1} << k); g++) {
            cur ^= basis[std::countr_zero(g)];
            if (!best || cur.weight() < best->weight() || (cur.weight() == best->weight() && cur < *best)) {
                best = cur;
            }
        }
        size_t d = best->weight();
        return Distance::exact(d, std::move(best));
    }
    MinWeightSolver solver = MinWeightSolver::from_matrices(h, BitMatrix::identity(h.cols()));
    SearchResult r = solver.solve(BitVector(h.rows()), max_weight, true);
    if (r.columns) {
        return Distance::exact(r.weight, BitVector::from_support(h.cols(), *r.columns));
    }
    return Distance::lower_bound(r.weight - 1);
}

ClassicalCode transpose_code(const ClassicalCode& c) {
    return ClassicalCode(c.h().transposed(), c.name().empty() ? "" : c.name() + "^T");
}

ClassicalCode repetition_closed_loop(size_t n) {
    if (n < 2) {
        throw ConfigError("closed-loop repetition code needs n >= 2, got " + std::to_string(n));
    }
    BitMatrix h(n, n);
    for (size_t i = 0; i < n; i++) {
        h.row(i).flip(i);
        h.row(i).flip((i + 1) % n);
    }
    return ClassicalCode(std::move(h), "rep" + std::to_string(n));
}

ClassicalCode repetition_open(size_t n) {
    if (n < 2) {
        throw ConfigError("open repetition code needs n >= 2, got " + std::to_string(n));
    }
    BitMatrix h(n - 1, n);
    for (size_t i = 0; i + 1 < n; i++) {
        h.set(i, i);
        h.set(i, i + 1);
    }
    return ClassicalCode(std::move(h), "rep_open" + std::to_string(n));
}

ClassicalCode hamming_7_4() {
    BitMatrix h(3, 7);
    for (size_t j = 0; j < 7; j++) {
        size_t v = j + 1;
        for (size_t b = 0; b < 3; b++) {
            if ((v >> b) & 1) {
                h.set(2 - b, j);
            }
        }
    }
    return ClassicalCode(std::move(h), "hamming7");
}

ClassicalCode direct_product(const ClassicalCode& c1, const ClassicalCode& c2) {
    BitMatrix u = kron(c1.h(), BitMatrix::identity(c2.n()));
    BitMatrix l = kron(BitMatrix::identity(c1.n()), c2.h());
    std::string name;
    if (!c1.name().empty() || !c2.name().empty()) {
        name = c1.name() + "(.)" + c2.name();
    }
    return ClassicalCode(block_compose({{u}, {l}}, std::vector<size_t>{u.rows(), l.rows()},
                                       std::vector<size_t>{c1.n() * c2.n()}),
                         name);
}

BitMatrix reshape_rows(const BitVector& v, size_t n1, size_t n2) { return unvec(v, n2, n1).transposed(); }

void SyndromeEncodedCode::validate() const {
    if (hs.cols() != h.rows()) {
        throw ShapeError("syndrome check has " + std::to_string(hs.cols()) + " columns but the code has " +
                         std::to_string(h.rows()) + " checks");
    }
    if (!mat_mul(hs, h).is_zero()) {
        throw ValidationError("syndrome check does not annihilate the parity-check matrix");
    }
}

}  // namespace forge
