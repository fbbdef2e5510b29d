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

#ifndef FORGE_CLASSICAL_CODE_H
#define FORGE_CLASSICAL_CODE_H

#include <optional>
#include <string>
#include <vector>

#include "forge/bit_matrix.h"

namespace forge {

/// A code distance that is either known exactly, only bounded from below, or
/// undefined because there are no nonzero codewords.
struct Distance {
    enum class Kind { kExact, kLowerBound, kUndefined };

    Kind kind = Kind::kUndefined;
    /// Exact distance, or for kLowerBound the largest weight ruled out (d > value).
    size_t value = 0;
    /// A codeword or logical of weight `upper_bound`, when one is known.
    std::optional<BitVector> witness;
    /// Smallest known weight of a nontrivial element (set for exact results, and
    /// for lower bounds when a constructive witness exists).
    std::optional<size_t> upper_bound;

    static Distance exact(size_t d, std::optional<BitVector> witness = std::nullopt);
    static Distance lower_bound(size_t ruled_out);
    static Distance undefined() { return Distance{}; }

    bool is_exact() const { return kind == Kind::kExact; }
    bool is_undefined() const { return kind == Kind::kUndefined; }
    /// "3", ">4", ">4 (<=9)" or "undefined".
    std::string str() const;
    bool operator==(const Distance& other) const { return kind == other.kind && value == other.value; }
};

struct CodeParams {
    size_t n = 0;
    size_t k = 0;
    Distance d;

    std::string str() const;
};

/// A binary linear code given by a parity-check matrix.
class ClassicalCode {
   public:
    ClassicalCode() = default;
    explicit ClassicalCode(BitMatrix h, std::string name = "");

    const BitMatrix& h() const { return h_; }
    const std::string& name() const { return name_; }
    size_t n() const { return h_.cols(); }
    size_t m() const { return h_.rows(); }
    size_t k() const;

    /// Exact k. The distance is exact when k <= 20 (all codewords enumerated) or
    /// when a codeword of weight <= max_weight exists; otherwise a lower bound.
    CodeParams params(size_t max_weight) const;
    std::vector<BitVector> codeword_basis() const { return kernel_basis(h_); }
    bool contains(const BitVector& v) const { return (h_ * v).none(); }

   private:
    BitMatrix h_;
    std::string name_;
    mutable std::optional<size_t> k_;
};

/// Minimum weight of a nonzero kernel element of h (see ClassicalCode::params).
Distance classical_distance(const BitMatrix& h, size_t max_weight);

/// Code with parity check hᵀ.
ClassicalCode transpose_code(const ClassicalCode& c);

/// n x n circulant with rows e_i + e_{i+1 mod n}: the repetition code on a ring.
ClassicalCode repetition_closed_loop(size_t n);
/// (n-1) x n matrix with rows e_i + e_{i+1}: the repetition code on a line.
ClassicalCode repetition_open(size_t n);
/// The [7,4,3] Hamming code with column j equal to the binary expansion of j+1.
ClassicalCode hamming_7_4();

/// Elias direct product with parity check [h1 x I_{n2} ; I_{n1} x h2]. A
/// codeword v, laid out as an n1 x n2 array with bit i*n2 + j in row i and
/// column j, has every column in c1 and every row in c2.
ClassicalCode direct_product(const ClassicalCode& c1, const ClassicalCode& c2);

/// n1 x n2 array whose entry (i, j) is v[i*n2 + j].
BitMatrix reshape_rows(const BitVector& v, size_t n1, size_t n2);

/// A code h together with a syndrome check h_s satisfying h_s·h = 0.
struct SyndromeEncodedCode {
    BitMatrix h;
    BitMatrix hs;

    /// Throws ValidationError if h_s·h != 0.
    void validate() const;
    /// Distance of h_s viewed as a parity-check matrix.
    Distance syndrome_distance(size_t max_weight) const { return classical_distance(hs, max_weight); }
};

}  // namespace forge

#endif
