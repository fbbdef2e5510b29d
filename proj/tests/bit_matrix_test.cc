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

#include "forge/bit_matrix.h"

#include <gtest/gtest.h>

#include "forge/errors.h"
#include "forge/matrix_io.h"
#include "oracles.h"

using namespace forge;

namespace {

BitMatrix rep3_closed() { return BitMatrix::from_strings({"110", "011", "101"}); }
BitMatrix hamming() { return BitMatrix::from_strings({"0001111", "0110011", "1010101"}); }

}  // namespace

TEST(bit_vector, basic_ops) {
    BitVector v = BitVector::from_string("0110100");
    ASSERT_EQ(v.size(), 7u);
    ASSERT_EQ(v.weight(), 3u);
    ASSERT_EQ(v.first_set(), 1u);
    ASSERT_EQ(v.support(), (std::vector<size_t>{1, 2, 4}));
    ASSERT_EQ(v.str(), "0110100");
    BitVector w = BitVector::from_support(7, {2, 6});
    ASSERT_EQ((v ^ w).str(), "0100101");
    ASSERT_EQ((v & w).str(), "0010000");
    ASSERT_TRUE(v.dot(w));
    ASSERT_EQ(v.slice(1, 3).str(), "110");
    ASSERT_EQ(v.concat(w).str(), "01101000010001");
    ASSERT_EQ(BitVector(5).first_set(), BitVector::npos);
    ASSERT_THROW(BitVector::from_string("01x"), ValidationError);
    ASSERT_THROW(v ^= BitVector(3), ShapeError);
}

TEST(bit_vector, triangle_inequality) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; t++) {
        BitMatrix m = oracle::random_matrix(rng, 2, 130);
        ASSERT_LE((m.row(0) ^ m.row(1)).weight(), m.row(0).weight() + m.row(1).weight());
    }
}

TEST(mat_mul, identity) {
    ASSERT_EQ(mat_mul(BitMatrix::identity(2), BitMatrix::identity(2)), BitMatrix::identity(2));
}

TEST(mat_mul, rep_gram_matrix) {
    BitMatrix h = rep3_closed();
    BitMatrix g = mat_mul(h, h.transposed());
    ASSERT_EQ(g, BitMatrix::from_strings({"011", "101", "110"}));
    ASSERT_EQ(rank(g), 2u);
}

TEST(mat_mul, hamming_times_all_ones) {
    BitMatrix ones(7, 1);
    for (size_t i = 0; i < 7; i++) {
        ones.set(i, 0);
    }
    BitMatrix got = mat_mul(hamming(), ones);
    ASSERT_EQ(got, oracle::multiply(hamming(), ones));
    ASSERT_TRUE(got.is_zero());
}

TEST(mat_mul, matches_naive_multiply) {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 50; t++) {
        size_t a = 1 + rng() % 9, b = 1 + rng() % 80, c = 1 + rng() % 9;
        BitMatrix x = oracle::random_matrix(rng, a, b);
        BitMatrix y = oracle::random_matrix(rng, b, c);
        ASSERT_EQ(mat_mul(x, y), oracle::multiply(x, y));
        BitVector v = y.column(0);
        ASSERT_EQ(x * v, oracle::multiply(x, y).column(0));
    }
}

TEST(mat_mul, shape_mismatch) { ASSERT_THROW(mat_mul(BitMatrix(2, 3), BitMatrix(2, 3)), ShapeError); }

TEST(rank, examples) {
    ASSERT_EQ(rank(BitMatrix(3, 3)), 0u);
    ASSERT_EQ(rank(rep3_closed()), 2u);
    ASSERT_EQ(rank(hamming()), 3u);
    ASSERT_EQ(rank(BitMatrix(0, 5)), 0u);
    ASSERT_EQ(rank(BitMatrix(4, 0)), 0u);
}

TEST(rank, matches_span_enumeration_and_transpose) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 60; t++) {
        BitMatrix m = oracle::random_matrix(rng, 1 + rng() % 8, 1 + rng() % 12, 0.3);
        ASSERT_EQ(rank(m), oracle::rank_by_span(m));
        ASSERT_EQ(rank(m), rank(m.transposed()));
        ASSERT_EQ(row_echelon(m).rank(), rank(m));
    }
}

TEST(rank, product_bound) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; t++) {
        BitMatrix a = oracle::random_matrix(rng, 1 + rng() % 7, 1 + rng() % 7, 0.3);
        BitMatrix b = oracle::random_matrix(rng, a.cols(), 1 + rng() % 7, 0.3);
        ASSERT_LE(rank(mat_mul(a, b)), std::min(rank(a), rank(b)));
    }
}

TEST(kernel_basis, examples) {
    ASSERT_TRUE(kernel_basis(BitMatrix::identity(3)).empty());
    auto rep = kernel_basis(rep3_closed());
    ASSERT_EQ(rep.size(), 1u);
    ASSERT_EQ(rep[0].str(), "111");
    ASSERT_EQ(oracle::all_kernel_vectors(rep3_closed()).size(), 2u);

    auto ham = kernel_basis(hamming());
    ASSERT_EQ(ham.size(), 4u);
    for (const auto& v : ham) {
        ASSERT_TRUE((hamming() * v).none());
    }
    ASSERT_EQ(oracle::span_size(ham, 7), oracle::all_kernel_vectors(hamming()).size());
}

TEST(kernel_basis, random_matrices) {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 60; t++) {
        BitMatrix m = oracle::random_matrix(rng, 1 + rng() % 8, 1 + rng() % 12, 0.35);
        auto basis = kernel_basis(m);
        ASSERT_EQ(basis.size(), m.cols() - rank(m));
        for (const auto& v : basis) {
            ASSERT_TRUE((m * v).none());
        }
        ASSERT_EQ(rank(BitMatrix::from_rows(m.cols(), basis)), basis.size());
        ASSERT_EQ(oracle::span_size(basis, m.cols()), oracle::all_kernel_vectors(m).size());
    }
}

TEST(kron, identities) {
    ASSERT_EQ(kron(BitMatrix::identity(2), BitMatrix::identity(3)), BitMatrix::identity(6));
}

TEST(kron, rep_block_example) {
    BitMatrix h = BitMatrix::from_strings({"110", "011"});
    BitMatrix i3 = BitMatrix::identity(3);
    BitMatrix expected = block_compose({{i3, i3, std::nullopt}, {std::nullopt, i3, i3}});
    ASSERT_EQ(kron(h, i3), expected);
    ASSERT_EQ(expected.rows(), 6u);
    ASSERT_EQ(expected.cols(), 9u);
}

TEST(kron, vec_identity_random) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; t++) {
        BitMatrix a = oracle::random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6);
        BitMatrix b = oracle::random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6);
        BitMatrix c = oracle::random_matrix(rng, b.cols(), a.cols());
        BitVector lhs = kron(a, b) * vec(c);
        BitVector rhs = vec(oracle::multiply(oracle::multiply(b, c), a.transposed()));
        ASSERT_EQ(lhs, rhs);
    }
}

TEST(kron, associative) {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 30; t++) {
        BitMatrix a = oracle::random_matrix(rng, 1 + rng() % 3, 1 + rng() % 3);
        BitMatrix b = oracle::random_matrix(rng, 1 + rng() % 3, 1 + rng() % 3);
        BitMatrix c = oracle::random_matrix(rng, 1 + rng() % 3, 1 + rng() % 3);
        ASSERT_EQ(kron(kron(a, b), c), kron(a, kron(b, c)));
    }
}

TEST(kron, entry_formula) {
    std::mt19937_64 rng(7);
    BitMatrix a = oracle::random_matrix(rng, 2, 3);
    BitMatrix b = oracle::random_matrix(rng, 3, 2);
    BitMatrix k = kron(a, b);
    ASSERT_EQ(k.rows(), 6u);
    ASSERT_EQ(k.cols(), 6u);
    for (size_t i = 0; i < 2; i++) {
        for (size_t j = 0; j < 3; j++) {
            for (size_t r = 0; r < 3; r++) {
                for (size_t c = 0; c < 2; c++) {
                    ASSERT_EQ(k.get(i * 3 + r, j * 2 + c), a.get(i, j) && b.get(r, c));
                }
            }
        }
    }
}

TEST(vec, round_trip_and_column_stacking) {
    BitMatrix c = BitMatrix::from_strings({"10", "01", "11"});
    BitVector v = vec(c);
    ASSERT_EQ(v.str(), "101011");
    ASSERT_EQ(unvec(v, 3, 2), c);
    ASSERT_THROW(unvec(v, 2, 2), ShapeError);
}

TEST(block_compose, examples) {
    BitMatrix i2 = BitMatrix::identity(2);
    ASSERT_EQ(block_compose({{i2, std::nullopt}, {std::nullopt, i2}}), BitMatrix::identity(4));
    BitMatrix a = BitMatrix::from_strings({"10"});
    BitMatrix b = BitMatrix::from_strings({"011"});
    ASSERT_EQ(block_compose({{a, b}}), BitMatrix::from_strings({"10011"}));
}

TEST(block_compose, errors_and_empty_blocks) {
    BitMatrix i2 = BitMatrix::identity(2);
    ASSERT_THROW(block_compose({{i2, BitMatrix(3, 1)}}), ShapeError);
    ASSERT_THROW(block_compose({{i2, std::nullopt}, {std::nullopt, std::nullopt}}), ShapeError);
    std::vector<size_t> rs{2, 1}, cs{2, 0};
    BitMatrix m = block_compose({{i2, std::nullopt}, {std::nullopt, std::nullopt}}, rs, cs);
    ASSERT_EQ(m.rows(), 3u);
    ASSERT_EQ(m.cols(), 2u);
    // A 0-row band or 0-column band leaves the others untouched.
    ASSERT_EQ(vstack({i2, BitMatrix(0, 2)}), i2);
    ASSERT_EQ(hstack({BitMatrix(2, 0), i2}), i2);
}

TEST(row_space_complement, examples) {
    ASSERT_EQ(row_space_complement(BitMatrix::identity(3)).rows(), 0u);
    ASSERT_EQ(row_space_complement(BitMatrix::from_strings({"110", "011"})), BitMatrix::from_strings({"111"}));
    BitMatrix b = row_space_complement(hamming());
    ASSERT_EQ(rank(b), 4u);
    ASSERT_TRUE(mat_mul(b, hamming().transposed()).is_zero());
}

TEST(row_space_complement, exhaustive_small_case) {
    // Every row orthogonal to [110;011] is spanned by the returned rows.
    BitMatrix a = BitMatrix::from_strings({"110", "011"});
    BitMatrix b = row_space_complement(a);
    RowEchelon e = row_echelon(b);
    for (uint64_t mask = 0; mask < 8; mask++) {
        BitVector y = oracle::from_mask(mask, 3);
        bool orth = !y.dot(a.row(0)) && !y.dot(a.row(1));
        ASSERT_EQ(orth, e.contains(y));
    }
}

TEST(row_space_complement, rank_identity) {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 60; t++) {
        BitMatrix a = oracle::random_matrix(rng, 1 + rng() % 8, 1 + rng() % 14, 0.3);
        BitMatrix b = row_space_complement(a);
        ASSERT_TRUE(mat_mul(b, a.transposed()).is_zero());
        ASSERT_EQ(rank(a) + b.rows(), a.cols());
        ASSERT_EQ(b, row_echelon(b).basis);
        BitMatrix lk = left_kernel(a);
        ASSERT_TRUE(mat_mul(lk, a).is_zero());
        ASSERT_EQ(lk.rows(), a.rows() - rank(a));
    }
}

TEST(matrix_io, alist_round_trip) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 40; t++) {
        BitMatrix m = oracle::random_matrix(rng, rng() % 7, rng() % 9, 0.3);
        std::string text = to_alist(m);
        BitMatrix back = from_alist(text);
        ASSERT_EQ(back, m);
        ASSERT_EQ(to_alist(back), text);
        ASSERT_EQ(from_dense(to_dense(m)), m);
    }
}

TEST(matrix_io, alist_layout) {
    std::string text = to_alist(BitMatrix::from_strings({"110", "011"}));
    ASSERT_EQ(text, "3 2\n2 2\n1 2 1\n2 2\n1 0\n1 2\n2 0\n1 2\n2 3\n");
}

TEST(matrix_io, rejects_inconsistent_alist) {
    ASSERT_THROW(from_alist("3 2\n2 2\n1 2 1\n2 2\n1 0\n1 2\n2 0\n1 2\n2 1\n"), ConfigError);
    ASSERT_THROW(from_alist("3 2\n2 2\n1 2"), ConfigError);
    ASSERT_THROW(from_dense("2 2\n1 0\n0 2\n"), ConfigError);
}
