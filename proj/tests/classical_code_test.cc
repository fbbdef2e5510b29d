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

#include <gtest/gtest.h>

#include "forge/errors.h"
#include "forge/min_weight.h"
#include "oracles.h"

using namespace forge;

TEST(classical_code, params_examples) {
    CodeParams rep = repetition_closed_loop(3).params(3);
    ASSERT_EQ(rep.n, 3u);
    ASSERT_EQ(rep.k, 1u);
    ASSERT_EQ(rep.d, Distance::exact(3));

    CodeParams ham = hamming_7_4().params(3);
    ASSERT_EQ(ham.str(), "[7,4,3]");

    CodeParams triv = ClassicalCode(BitMatrix::identity(3)).params(3);
    ASSERT_EQ(triv.k, 0u);
    ASSERT_TRUE(triv.d.is_undefined());
    ASSERT_EQ(triv.str(), "[3,0,undefined]");
    ASSERT_THROW(hamming_7_4().params(0), ConfigError);
}

TEST(classical_code, repetition_matrices) {
    ASSERT_EQ(repetition_closed_loop(3).h(), BitMatrix::from_strings({"110", "011", "101"}));
    ClassicalCode r2 = repetition_closed_loop(2);
    ASSERT_EQ(r2.h(), BitMatrix::from_strings({"11", "11"}));
    ASSERT_EQ(r2.params(2).str(), "[2,1,2]");
    ASSERT_EQ(oracle::min_distance(r2.h()), 2u);
    for (size_t n = 2; n <= 9; n++) {
        ClassicalCode r = repetition_closed_loop(n);
        BitVector ones(n);
        for (size_t i = 0; i < n; i++) {
            ones.set(i);
        }
        ASSERT_TRUE(r.contains(ones));
        ASSERT_EQ(rank(r.h()), n - 1);
        ASSERT_EQ(kernel_basis(r.h().transposed()).size(), 1u);
    }
    ASSERT_THROW(repetition_closed_loop(1), ConfigError);
    ASSERT_EQ(repetition_open(3).h(), BitMatrix::from_strings({"110", "011"}));
}

TEST(classical_code, transpose_examples) {
    ClassicalCode r3 = repetition_closed_loop(3);
    ClassicalCode t = transpose_code(r3);
    ASSERT_EQ(t.k(), 1u);
    ASSERT_EQ(row_echelon(t.h()).basis, row_echelon(r3.h()).basis);
    ASSERT_EQ(transpose_code(repetition_open(3)).k(), 0u);
    ASSERT_EQ(transpose_code(ClassicalCode(BitMatrix(2, 2))).k(), 2u);
    for (size_t n = 2; n <= 5; n++) {
        ClassicalCode r = repetition_closed_loop(n);
        ASSERT_EQ(transpose_code(r).params(n).str(), r.params(n).str());
    }
}

TEST(classical_code, distance_matches_enumeration) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 40; t++) {
        BitMatrix h = oracle::random_matrix(rng, 1 + rng() % 6, 2 + rng() % 12, 0.4);
        Distance d = classical_distance(h, h.cols());
        size_t want = oracle::min_distance(h);
        if (want == 0) {
            ASSERT_TRUE(d.is_undefined());
        } else {
            ASSERT_EQ(d, Distance::exact(want));
            ASSERT_EQ(d.witness->weight(), want);
            ASSERT_TRUE((h * *d.witness).none());
        }
    }
}

TEST(classical_code, weight_limited_search_for_large_k) {
    // 30 bits, 3 checks: k = 27, beyond the enumeration limit.
    BitMatrix h(3, 30);
    for (size_t j = 0; j < 30; j++) {
        h.set(j % 3, j);
    }
    Distance d = classical_distance(h, 3);
    ASSERT_EQ(d, Distance::exact(2));
    BitMatrix full(30, 30);
    for (size_t j = 0; j < 30; j++) {
        full.set(j, j);
    }
    full = vstack({full, BitMatrix(1, 30)});
    ASSERT_TRUE(classical_distance(full, 3).is_undefined());

    // Weight-3 minimum with a search capped at 2 yields a lower bound.
    BitMatrix one_row(1, 25);
    for (size_t j = 0; j < 25; j++) {
        one_row.set(0, j);
    }
    BitMatrix h2 = vstack({one_row, BitMatrix(0, 25)});
    ASSERT_EQ(classical_distance(h2, 1), Distance::lower_bound(1));
    ASSERT_EQ(classical_distance(h2, 1).str(), ">1");
}

TEST(direct_product, appendix_fixture) {
    ClassicalCode c1 = repetition_open(3);
    ClassicalCode c2 = hamming_7_4();
    ASSERT_EQ(c2.h(), BitMatrix::from_strings({"0001111", "0110011", "1010101"}));
    ClassicalCode p = direct_product(c1, c2);
    ASSERT_EQ(p.params(9).str(), "[21,4,9]");
    BitMatrix i7 = BitMatrix::identity(7);
    BitMatrix u = block_compose({{i7, i7, std::nullopt}, {std::nullopt, i7, i7}});
    BitMatrix h = c2.h();
    BitMatrix l = block_compose({{h, std::nullopt, std::nullopt}, {std::nullopt, h, std::nullopt},
                                 {std::nullopt, std::nullopt, h}});
    ASSERT_EQ(p.h(), vstack({u, l}));
}

TEST(direct_product, small_examples) {
    ClassicalCode r2 = repetition_closed_loop(2);
    ClassicalCode p = direct_product(r2, r2);
    ASSERT_EQ(p.params(4).str(), "[4,1,4]");
    ASSERT_EQ(oracle::min_distance(p.h()), 4u);
    ClassicalCode trivial(BitMatrix(0, 1));
    ClassicalCode h = hamming_7_4();
    ASSERT_EQ(direct_product(h, trivial).h(), vstack({h.h(), BitMatrix(0, 7)}));
    ASSERT_EQ(direct_product(h, trivial).params(3).str(), h.params(3).str());
}

TEST(direct_product, elias_parameters_exhaustive) {
    std::mt19937_64 rng(32);
    std::vector<ClassicalCode> pool{repetition_closed_loop(2), repetition_closed_loop(3), hamming_7_4()};
    for (int i = 0; i < 3; i++) {
        pool.emplace_back(oracle::random_matrix(rng, 3, 5, 0.5));
    }
    for (const auto& a : pool) {
        for (const auto& b : pool) {
            if (a.n() * b.n() > 21) {
                continue;
            }
            ClassicalCode p = direct_product(a, b);
            ASSERT_EQ(p.n(), a.n() * b.n());
            ASSERT_EQ(p.k(), a.k() * b.k());
            size_t da = oracle::min_distance(a.h()), db = oracle::min_distance(b.h());
            size_t dp = oracle::min_distance(p.h());
            if (a.k() && b.k()) {
                ASSERT_EQ(dp, da * db);
            } else {
                ASSERT_EQ(dp, 0u);
            }
        }
    }
}

TEST(direct_product, codeword_arrays_both_directions) {
    ClassicalCode c1 = repetition_open(3);
    ClassicalCode c2 = hamming_7_4();
    ClassicalCode p = direct_product(c1, c2);
    auto is_product_array = [&](const BitVector& v) {
        BitMatrix arr = reshape_rows(v, 3, 7);
        for (size_t j = 0; j < 7; j++) {
            if (!c1.contains(arr.column(j))) {
                return false;
            }
        }
        for (size_t i = 0; i < 3; i++) {
            if (!c2.contains(arr.row(i))) {
                return false;
            }
        }
        return true;
    };
    size_t count = 0;
    for (uint64_t mask = 0; mask < (uint64_t{1} << 21); mask++) {
        BitVector v = oracle::from_mask(mask, 21);
        bool in_code = p.contains(v);
        ASSERT_EQ(in_code, is_product_array(v));
        count += in_code;
    }
    ASSERT_EQ(count, 16u);
}

TEST(syndrome_encoded_code, validate) {
    BitMatrix h = repetition_closed_loop(3).h();
    SyndromeEncodedCode ok{h, BitMatrix::from_strings({"111"})};
    ASSERT_NO_THROW(ok.validate());
    ASSERT_EQ(ok.syndrome_distance(3), Distance::exact(2));
    SyndromeEncodedCode bad{h, BitMatrix::from_strings({"100"})};
    ASSERT_THROW(bad.validate(), ValidationError);
}

TEST(min_weight_solver, grouped_columns) {
    // Two groups of two columns; only one column per group may be chosen.
    std::vector<BitVector> cols{BitVector::from_string("10"), BitVector::from_string("01"),
                                BitVector::from_string("10"), BitVector::from_string("11")};
    MinWeightSolver s(cols, {}, {0, 0, 1, 1});
    SearchResult r = s.solve(BitVector::from_string("11"), 3);
    ASSERT_TRUE(r.exact);
    ASSERT_EQ(r.weight, 1u);
    ASSERT_EQ(*r.columns, (std::vector<size_t>{3}));
    SearchResult z = s.solve(BitVector::from_string("00"), 3);
    ASSERT_EQ(z.weight, 0u);
    size_t solutions = 0;
    s.for_each_solution(BitVector::from_string("00"), 2, false, [&](const std::vector<size_t>& c) {
        solutions++;
        EXPECT_EQ(c, (std::vector<size_t>{0, 2}));
        return true;
    });
    ASSERT_EQ(solutions, 1u);
}

TEST(min_weight_solver, matches_brute_force) {
    std::mt19937_64 rng(33);
    for (int t = 0; t < 60; t++) {
        BitMatrix a = oracle::random_matrix(rng, 1 + rng() % 5, 1 + rng() % 10, 0.4);
        BitVector target = oracle::random_matrix(rng, 1, a.rows()).row(0);
        size_t best = 1000;
        for (uint64_t mask = 0; mask < (uint64_t{1} << a.cols()); mask++) {
            BitVector x = oracle::from_mask(mask, a.cols());
            if (a * x == target) {
                best = std::min(best, x.weight());
            }
        }
        SearchResult r = MinWeightSolver::from_matrices(a).solve(target, a.cols());
        if (best == 1000) {
            ASSERT_FALSE(r.columns);
            ASSERT_EQ(r.weight, a.cols() + 1);
        } else {
            ASSERT_TRUE(r.exact);
            ASSERT_EQ(r.weight, best);
            ASSERT_EQ(a * BitVector::from_support(a.cols(), *r.columns), target);
        }
    }
}

TEST(min_weight_solver, node_budget) {
    BitMatrix a(1, 40);
    SearchResult r = MinWeightSolver::from_matrices(a).solve(BitVector::from_string("1"), 4, false, 100);
    ASSERT_FALSE(r.complete);
    ASSERT_FALSE(r.exact);
}
