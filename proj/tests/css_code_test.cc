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

#include <gtest/gtest.h>

#include <filesystem>
#include <set>

#include "forge/bundle.h"
#include "forge/chain_complex.h"
#include "forge/errors.h"
#include "forge/matrix_io.h"
#include "oracles.h"

using namespace forge;

namespace {

/// Product code written out directly from the kron formulas.
CssCode toric(size_t n) {
    BitMatrix h = repetition_closed_loop(n).h();
    BitMatrix i = BitMatrix::identity(n);
    return CssCode(hstack({kron(h, i), kron(i, h.transposed())}), hstack({kron(i, h), kron(h.transposed(), i)}));
}

std::set<BitVector> span_set(const std::vector<BitVector>& rows, size_t n) {
    std::set<BitVector> span{BitVector(n)};
    for (const auto& r : rows) {
        std::set<BitVector> next = span;
        for (const auto& s : span) {
            next.insert(s ^ r);
        }
        span = std::move(next);
    }
    return span;
}

/// min |v| over v in ker(a) outside rowspace(b), by enumerating all 2^n vectors.
size_t css_distance_oracle(const BitMatrix& a, const BitMatrix& b) {
    auto stab = span_set(b.row_vectors(), a.cols());
    size_t best = 0;
    for (const auto& v : oracle::all_kernel_vectors(a)) {
        if (!stab.count(v) && (!best || v.weight() < best)) {
            best = v.weight();
        }
    }
    return best;
}

/// Random CSS code: hx rows drawn from ker(hz).
CssCode random_css(std::mt19937_64& rng, size_t n) {
    BitMatrix hz = oracle::random_matrix(rng, 1 + rng() % 3, n, 0.4);
    auto ker = kernel_basis(hz);
    BitMatrix mix = oracle::random_matrix(rng, 1 + rng() % 3, ker.size(), 0.5);
    BitMatrix hx = ker.empty() ? BitMatrix(mix.rows(), n) : mat_mul(mix, BitMatrix::from_rows(n, ker));
    return CssCode(hx, hz);
}

/// Hadamard on the given qubits of a code in symplectic form.
CssCode hadamard_on(const CssCode& c, const std::vector<size_t>& qubits) {
    CssCode s = c.to_symplectic();
    for (size_t q : qubits) {
        for (size_t r = 0; r < s.num_checks(); r++) {
            bool x = s.hx.get(r, q), z = s.hz.get(r, q);
            s.hx.set(r, q, z);
            s.hz.set(r, q, x);
        }
    }
    return s;
}

/// Minimum Pauli weight of a nontrivial logical by enumerating all 4^n operators.
size_t pauli_distance_oracle(const CssCode& c) {
    size_t n = c.n();
    BitMatrix sx = c.full_x(), sz = c.full_z();
    std::vector<BitVector> rows;
    for (size_t r = 0; r < sx.rows(); r++) {
        rows.push_back(sx.row(r).concat(sz.row(r)));
    }
    auto stab = span_set(rows, 2 * n);
    size_t best = 0;
    for (uint64_t mask = 1; mask < (uint64_t{1} << (2 * n)); mask++) {
        BitVector v = oracle::from_mask(mask, 2 * n);
        PauliError e(v.slice(0, n), v.slice(n, n));
        bool commutes = true;
        for (size_t r = 0; r < sx.rows() && commutes; r++) {
            commutes = !anticommutes(PauliError(sx.row(r), sz.row(r)), e);
        }
        if (commutes && !stab.count(v) && (!best || e.weight() < best)) {
            best = e.weight();
        }
    }
    return best;
}

}  // namespace

TEST(pauli_error, weight_and_string) {
    PauliError e = PauliError::from_string("IXZYI");
    ASSERT_EQ(e.weight(), 3u);
    ASSERT_EQ(e.ex.str(), "01010");
    ASSERT_EQ(e.ez.str(), "00110");
    ASSERT_EQ(e.str(), "IXZYI");
    ASSERT_EQ((e * e).weight(), 0u);
    ASSERT_THROW(PauliError::from_string("IQ"), ValidationError);
}

TEST(validate_css, examples) {
    ASSERT_NO_THROW(validate_css(toric(3)));
    CssCode bad(BitMatrix::identity(2), BitMatrix::identity(2));
    try {
        validate_css(bad);
        FAIL() << "expected a commutation error";
    } catch (const CommutationError& e) {
        ASSERT_NE(std::string(e.what()).find("X-check 0 anticommutes with Z-check 0"), std::string::npos);
    }
    CssCode with_checks = toric(3);
    with_checks.hsx = BitMatrix::from_strings({"100000000"});
    ASSERT_THROW(validate_css(with_checks), ValidationError);
}

TEST(logical_count, examples) {
    ASSERT_EQ(logical_count(toric(3)), 2u);
    ASSERT_EQ(logical_count(CssCode(BitMatrix(0, 5), BitMatrix(0, 5))), 5u);
}

TEST(logical_count, equals_betti_and_is_symmetric) {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 40; t++) {
        CssCode c = random_css(rng, 4 + rng() % 6);
        ASSERT_NO_THROW(validate_css(c));
        ChainComplex cx({c.hx, c.hz.transposed()});
        ASSERT_EQ(logical_count(c), betti(cx, 1));
        // Logical X count equals logical Z count.
        size_t kz = kernel_basis(c.hx).size() - rank(c.hz);
        size_t kx = kernel_basis(c.hz).size() - rank(c.hx);
        ASSERT_EQ(kz, kx);
        ASSERT_EQ(logical_basis(c).size(), 2 * logical_count(c));
    }
}

TEST(distance, toric_rep3) {
    CssCode c = toric(3);
    ASSERT_EQ(distance(c, DistanceKind::kX, 3), Distance::exact(3));
    ASSERT_EQ(distance(c, DistanceKind::kZ, 3), Distance::exact(3));
    ASSERT_EQ(distance(c, DistanceKind::kFull, 3), Distance::exact(3));
    ASSERT_EQ(distance(c, DistanceKind::kX, 2), Distance::lower_bound(2));
    ASSERT_THROW(distance(CssCode(BitMatrix::identity(2), BitMatrix(0, 2)), DistanceKind::kX, 2), NoLogicalsError);
}

TEST(distance, matches_full_enumeration) {
    std::mt19937_64 rng(42);
    int checked = 0;
    for (int t = 0; t < 80; t++) {
        CssCode c = random_css(rng, 5 + rng() % 8);
        if (logical_count(c) == 0) {
            continue;
        }
        checked++;
        Distance dx = distance(c, DistanceKind::kX, c.n());
        Distance dz = distance(c, DistanceKind::kZ, c.n());
        ASSERT_EQ(dx, Distance::exact(css_distance_oracle(c.hx, c.hz)));
        ASSERT_EQ(dz, Distance::exact(css_distance_oracle(c.hz, c.hx)));
        ASSERT_EQ(distance(c, DistanceKind::kFull, c.n()).value, std::min(dx.value, dz.value));
    }
    ASSERT_GT(checked, 20);
    ASSERT_EQ(distance(toric(2), DistanceKind::kX, 8).value, css_distance_oracle(toric(2).hx, toric(2).hz));
}

TEST(distance, symplectic_form_matches_pauli_enumeration) {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 25; t++) {
        CssCode c = random_css(rng, 4 + rng() % 3);
        if (logical_count(c) == 0) {
            continue;
        }
        std::vector<size_t> qubits;
        for (size_t q = 0; q < c.n(); q++) {
            if (rng() & 1) {
                qubits.push_back(q);
            }
        }
        CssCode s = hadamard_on(c, qubits);
        ASSERT_NO_THROW(validate_css(s));
        ASSERT_EQ(logical_count(s), logical_count(c));
        size_t want = pauli_distance_oracle(s);
        ASSERT_EQ(distance(s, DistanceKind::kFull, s.n()), Distance::exact(want));
        ASSERT_EQ(want, distance(c, DistanceKind::kFull, c.n()).value);
    }
}

TEST(syndrome, examples) {
    CssCode c = toric(3);
    ASSERT_TRUE(syndrome(c, PauliError::identity(18)).none());
    PauliError stab(c.hx.row(2), BitVector(18));
    ASSERT_TRUE(syndrome(c, stab).none());
    PauliError z0 = PauliError::identity(18);
    z0.ez.set(0);
    Syndrome s = syndrome(c, z0);
    ASSERT_EQ(s.sx, c.hx.column(0));
    ASSERT_TRUE(s.sz.none());
    ASSERT_THROW(syndrome(c, PauliError::identity(3)), ShapeError);
}

TEST(syndrome, is_a_homomorphism) {
    CssCode c = toric(3);
    CssCode s = hadamard_on(c, {0, 4, 7});
    std::mt19937_64 rng(44);
    for (int t = 0; t < 100; t++) {
        BitMatrix r = oracle::random_matrix(rng, 4, 18);
        PauliError a(r.row(0), r.row(1)), b(r.row(2), r.row(3));
        Syndrome lhs = syndrome(c, a * b);
        Syndrome rhs = syndrome(c, a);
        rhs ^= syndrome(c, b);
        ASSERT_EQ(lhs, rhs);
        Syndrome l2 = syndrome(s, a * b);
        Syndrome r2 = syndrome(s, a);
        r2 ^= syndrome(s, b);
        ASSERT_EQ(l2, r2);
    }
}

TEST(tanner_components, examples) {
    BitMatrix a = BitMatrix::from_strings({"11", "01"});
    BitMatrix diag = block_compose({{a, std::nullopt}, {std::nullopt, a}});
    auto comps = tanner_components(diag);
    ASSERT_EQ(comps.size(), 2u);
    ASSERT_EQ(comps[1].qubits, (std::vector<size_t>{2, 3}));
    ASSERT_EQ(comps[1].checks, (std::vector<size_t>{2, 3}));
    ASSERT_EQ(tanner_components(toric(3), DistanceKind::kX).size(), 1u);
    // Zero rows and idle qubits do not form components.
    ASSERT_EQ(tanner_components(BitMatrix::from_strings({"0000", "0110"})).size(), 1u);
}

TEST(tanner_components, matches_traversal) {
    std::mt19937_64 rng(45);
    for (int t = 0; t < 40; t++) {
        BitMatrix h = oracle::random_matrix(rng, 1 + rng() % 6, 1 + rng() % 10, 0.15);
        // Reference: repeated BFS over qubits via shared checks.
        std::vector<int> label(h.cols(), -1);
        int count = 0;
        for (size_t q = 0; q < h.cols(); q++) {
            if (label[q] >= 0 || h.column(q).none()) {
                continue;
            }
            std::vector<size_t> stack{q};
            label[q] = count;
            while (!stack.empty()) {
                size_t v = stack.back();
                stack.pop_back();
                for (size_t r = 0; r < h.rows(); r++) {
                    if (!h.get(r, v)) {
                        continue;
                    }
                    for (size_t u : h.row(r).support()) {
                        if (label[u] < 0) {
                            label[u] = count;
                            stack.push_back(u);
                        }
                    }
                }
            }
            count++;
        }
        ASSERT_EQ(tanner_components(h).size(), static_cast<size_t>(count));
    }
}

TEST(stabilizer_weights, toric) {
    StabilizerWeights w = stabilizer_weights(toric(3));
    ASSERT_EQ(w.max_check_weight, 4u);
    ASSERT_EQ(w.max_qubit_degree, 4u);
}

TEST(bundle, round_trip_is_byte_identical) {
    CssCode c = toric(2);
    c.hsx = left_kernel(c.hx);
    auto dir = std::filesystem::temp_directory_path() / "forge_bundle_a";
    auto dir2 = std::filesystem::temp_directory_path() / "forge_bundle_b";
    std::filesystem::remove_all(dir);
    std::filesystem::remove_all(dir2);
    save_bundle(dir, c, {{"family", "test"}});
    Bundle b = load_bundle(dir);
    ASSERT_EQ(b.code.hx, c.hx);
    ASSERT_EQ(b.code.hz, c.hz);
    ASSERT_EQ(b.code.hsx, c.hsx);
    ASSERT_FALSE(b.code.hsz);
    save_bundle(dir2, b.code, b.manifest);
    for (const char* f : {"hx.alist", "hz.alist", "hsx.alist", "hsz.alist", "manifest.json"}) {
        ASSERT_EQ(read_text_file(dir / f), read_text_file(dir2 / f)) << f;
    }
    std::filesystem::remove_all(dir);
    std::filesystem::remove_all(dir2);
}
