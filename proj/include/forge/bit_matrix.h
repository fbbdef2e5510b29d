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

#ifndef FORGE_BIT_MATRIX_H
#define FORGE_BIT_MATRIX_H

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace forge {

/// A fixed-length vector over GF(2), packed into 64-bit words.
///
/// Bits beyond `size()` in the last word are always zero, so word-wise
/// comparison and hashing are well defined.
class BitVector {
   public:
    static constexpr size_t npos = static_cast<size_t>(-1);

    BitVector() = default;
    explicit BitVector(size_t size);

    /// Parses a string of '0'/'1' characters; other characters are rejected.
    static BitVector from_string(std::string_view bits);
    static BitVector from_support(size_t size, std::span<const size_t> support);
    static BitVector from_support(size_t size, std::initializer_list<size_t> support);

    size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(size_t i, bool value = true);
    void flip(size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }
    void clear();

    size_t weight() const;
    bool none() const;
    bool any() const { return !none(); }
    /// Index of the lowest set bit, or npos.
    size_t first_set() const;
    /// Parity of the bitwise AND.
    bool dot(const BitVector& other) const;

    BitVector& operator^=(const BitVector& other);
    BitVector& operator|=(const BitVector& other);
    BitVector& operator&=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }
    friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
    bool operator==(const BitVector& other) const = default;
    bool operator<(const BitVector& other) const;

    std::vector<size_t> support() const;
    BitVector slice(size_t begin, size_t length) const;
    /// Concatenation: `this` followed by `tail`.
    BitVector concat(const BitVector& tail) const;
    std::string str() const;

    std::span<const uint64_t> words() const { return words_; }
    std::span<uint64_t> words() { return words_; }
    size_t hash() const;

   private:
    size_t size_ = 0;
    std::vector<uint64_t> words_;
};

struct BitVectorHash {
    size_t operator()(const BitVector& v) const { return v.hash(); }
};

/// Dense row-major matrix over GF(2). Matrices with zero rows or zero columns
/// are legal values.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols);

    static BitMatrix identity(size_t n);
    static BitMatrix zeros(size_t rows, size_t cols) { return BitMatrix(rows, cols); }
    /// Builds a matrix from '0'/'1' strings, one per row. All rows must have equal length.
    static BitMatrix from_strings(std::initializer_list<std::string_view> rows);
    static BitMatrix from_strings(std::span<const std::string> rows, size_t cols);
    static BitMatrix from_rows(size_t cols, std::vector<BitVector> rows);
    static BitMatrix from_columns(size_t rows, std::span<const BitVector> columns);

    size_t rows() const { return rows_.size(); }
    size_t cols() const { return cols_; }

    bool get(size_t r, size_t c) const { return rows_[r].get(c); }
    void set(size_t r, size_t c, bool value = true) { rows_[r].set(c, value); }
    const BitVector& row(size_t r) const { return rows_[r]; }
    BitVector& row(size_t r) { return rows_[r]; }
    void insert_row(size_t index, BitVector row);
    const std::vector<BitVector>& row_vectors() const { return rows_; }
    BitVector column(size_t c) const;
    std::vector<BitVector> column_vectors() const;

    void append_row(BitVector row);
    BitMatrix transposed() const;
    BitMatrix submatrix(size_t row_begin, size_t row_count, size_t col_begin, size_t col_count) const;
    /// Writes `block` with its top-left corner at (row, col).
    void paste(const BitMatrix& block, size_t row, size_t col);

    bool is_zero() const;
    size_t nnz() const;
    size_t max_row_weight() const;
    size_t max_col_weight() const;

    /// Matrix-vector product; `v.size()` must equal `cols()`.
    BitVector operator*(const BitVector& v) const;
    bool operator==(const BitMatrix& other) const = default;

    /// Rows of '0'/'1' separated by newlines.
    std::string str() const;

   private:
    size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);
BitMatrix operator+(const BitMatrix& a, const BitMatrix& b);
size_t rank(const BitMatrix& a);

/// Basis of {v : a·v = 0}, one vector per free column of the reduced echelon form.
std::vector<BitVector> kernel_basis(const BitMatrix& a);

/// Kronecker product. Block (i, j) of the result equals a(i, j)·b.
BitMatrix kron(const BitMatrix& a, const BitMatrix& b);

/// A grid of optional blocks; absent blocks are zero-filled.
using BlockLayout = std::vector<std::vector<std::optional<BitMatrix>>>;

/// Concatenates a block grid. Block-row heights and block-column widths are
/// inferred from the present blocks; a band with no present block is an error.
BitMatrix block_compose(const BlockLayout& layout);
/// Same, with band sizes given explicitly (so all-absent bands are allowed).
BitMatrix block_compose(const BlockLayout& layout, std::span<const size_t> row_sizes,
                        std::span<const size_t> col_sizes);

BitMatrix hstack(std::span<const BitMatrix> parts);
BitMatrix vstack(std::span<const BitMatrix> parts);
BitMatrix hstack(std::initializer_list<BitMatrix> parts);
BitMatrix vstack(std::initializer_list<BitMatrix> parts);

/// Canonical (fully reduced) row echelon form. Rows of `basis` are ordered by
/// pivot column, and every pivot column is zero outside its own row.
struct RowEchelon {
    BitMatrix basis;
    std::vector<size_t> pivots;

    size_t rank() const { return pivots.size(); }
    /// Reduces `v` against the basis in place; the result is zero iff v is in the row space.
    void reduce(BitVector& v) const;
    bool contains(BitVector v) const;
    /// Adds `v` to the span, keeping the form canonical. Returns false if v was already in it.
    bool insert(BitVector v);
};

RowEchelon row_echelon(const BitMatrix& a);

/// Matrix whose rows are the canonical reduced basis of the orthogonal
/// complement of rowspace(a), i.e. of ker(a). It has `a.cols() - rank(a)` rows
/// and satisfies result·aᵀ = 0.
BitMatrix row_space_complement(const BitMatrix& a);

/// Rows spanning {y : yᵀ·a = 0}; equivalently row_space_complement(aᵀ).
BitMatrix left_kernel(const BitMatrix& a);

/// Column-stacking vectorization: vec(C)[j·rows + i] = C(i, j).
BitVector vec(const BitMatrix& c);
/// Inverse of vec for a `rows`×`cols` matrix.
BitMatrix unvec(const BitVector& v, size_t rows, size_t cols);

}  // namespace forge

#endif
