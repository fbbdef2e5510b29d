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

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

#include "forge/errors.h"

namespace forge {

namespace {

size_t word_count(size_t bits) { return (bits + 63) >> 6; }

std::string shape_str(size_t r, size_t c) {
    std::ostringstream ss;
    ss << r << "x" << c;
    return ss.str();
}

}  // namespace

BitVector::BitVector(size_t size) : size_(size), words_(word_count(size), 0) {}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (size_t i = 0; i < bits.size(); i++) {
        if (bits[i] == '1') {
            v.set(i);
        } else if (bits[i] != '0') {
            throw ValidationError("bit string contains a character other than '0' or '1'");
        }
    }
    return v;
}

BitVector BitVector::from_support(size_t size, std::span<const size_t> support) {
    BitVector v(size);
    for (size_t i : support) {
        if (i >= size) {
            throw ShapeError("support index out of range");
        }
        v.flip(i);
    }
    return v;
}

BitVector BitVector::from_support(size_t size, std::initializer_list<size_t> support) {
    return from_support(size, std::span<const size_t>(support.begin(), support.size()));
}

void BitVector::set(size_t i, bool value) {
    uint64_t mask = uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= mask;
    } else {
        words_[i >> 6] &= ~mask;
    }
}

void BitVector::clear() { std::fill(words_.begin(), words_.end(), 0); }

size_t BitVector::weight() const {
    size_t w = 0;
    for (uint64_t x : words_) {
        w += std::popcount(x);
    }
    return w;
}

bool BitVector::none() const {
    for (uint64_t x : words_) {
        if (x) {
            return false;
        }
    }
    return true;
}

size_t BitVector::first_set() const {
    for (size_t k = 0; k < words_.size(); k++) {
        if (words_[k]) {
            return (k << 6) + std::countr_zero(words_[k]);
        }
    }
    return npos;
}

bool BitVector::dot(const BitVector& other) const {
    if (other.size_ != size_) {
        throw ShapeError("dot product of vectors with different lengths");
    }
    uint64_t acc = 0;
    for (size_t k = 0; k < words_.size(); k++) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.size_ != size_) {
        throw ShapeError("xor of vectors with different lengths");
    }
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
    if (other.size_ != size_) {
        throw ShapeError("or of vectors with different lengths");
    }
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] |= other.words_[k];
    }
    return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
    if (other.size_ != size_) {
        throw ShapeError("and of vectors with different lengths");
    }
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] &= other.words_[k];
    }
    return *this;
}

bool BitVector::operator<(const BitVector& other) const {
    if (size_ != other.size_) {
        return size_ < other.size_;
    }
    return words_ < other.words_;
}

std::vector<size_t> BitVector::support() const {
    std::vector<size_t> out;
    for (size_t k = 0; k < words_.size(); k++) {
        uint64_t w = words_[k];
        while (w) {
            out.push_back((k << 6) + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

BitVector BitVector::slice(size_t begin, size_t length) const {
    if (begin + length > size_) {
        throw ShapeError("slice out of range");
    }
    BitVector out(length);
    for (size_t i = 0; i < length; i++) {
        if (get(begin + i)) {
            out.set(i);
        }
    }
    return out;
}

BitVector BitVector::concat(const BitVector& tail) const {
    BitVector out(size_ + tail.size_);
    std::copy(words_.begin(), words_.end(), out.words_.begin());
    for (size_t i : tail.support()) {
        out.set(size_ + i);
    }
    return out;
}

std::string BitVector::str() const {
    std::string s(size_, '0');
    for (size_t i : support()) {
        s[i] = '1';
    }
    return s;
}

size_t BitVector::hash() const {
    // FNV-1a over words.
    uint64_t h = 1469598103934665603ull ^ size_;
    for (uint64_t w : words_) {
        h ^= w;
        h *= 1099511628211ull;
        h ^= h >> 29;
    }
    return static_cast<size_t>(h);
}

BitMatrix::BitMatrix(size_t rows, size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i);
    }
    return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
    BitMatrix m;
    m.cols_ = rows.size() ? rows.begin()->size() : 0;
    for (auto r : rows) {
        if (r.size() != m.cols_) {
            throw ShapeError("ragged rows in matrix literal");
        }
        m.rows_.push_back(BitVector::from_string(r));
    }
    return m;
}

BitMatrix BitMatrix::from_strings(std::span<const std::string> rows, size_t cols) {
    BitMatrix m;
    m.cols_ = cols;
    for (const auto& r : rows) {
        if (r.size() != cols) {
            throw ShapeError("ragged rows in matrix literal");
        }
        m.rows_.push_back(BitVector::from_string(r));
    }
    return m;
}

BitMatrix BitMatrix::from_rows(size_t cols, std::vector<BitVector> rows) {
    for (const auto& r : rows) {
        if (r.size() != cols) {
            throw ShapeError("row length does not match column count");
        }
    }
    BitMatrix m;
    m.cols_ = cols;
    m.rows_ = std::move(rows);
    return m;
}

BitMatrix BitMatrix::from_columns(size_t rows, std::span<const BitVector> columns) {
    BitMatrix m(rows, columns.size());
    for (size_t c = 0; c < columns.size(); c++) {
        if (columns[c].size() != rows) {
            throw ShapeError("column length does not match row count");
        }
        for (size_t r : columns[c].support()) {
            m.set(r, c);
        }
    }
    return m;
}

BitVector BitMatrix::column(size_t c) const {
    BitVector out(rows());
    for (size_t r = 0; r < rows(); r++) {
        if (rows_[r].get(c)) {
            out.set(r);
        }
    }
    return out;
}

std::vector<BitVector> BitMatrix::column_vectors() const {
    BitMatrix t = transposed();
    return t.rows_;
}

void BitMatrix::append_row(BitVector row) {
    if (row.size() != cols_) {
        throw ShapeError("appended row has length " + std::to_string(row.size()) + ", expected " +
                         std::to_string(cols_));
    }
    rows_.push_back(std::move(row));
}

void BitMatrix::insert_row(size_t index, BitVector row) {
    if (row.size() != cols_ || index > rows_.size()) {
        throw ShapeError("insert_row: bad row length or index");
    }
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(index), std::move(row));
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows());
    for (size_t r = 0; r < rows(); r++) {
        for (size_t c : rows_[r].support()) {
            t.set(c, r);
        }
    }
    return t;
}

BitMatrix BitMatrix::submatrix(size_t row_begin, size_t row_count, size_t col_begin, size_t col_count) const {
    if (row_begin + row_count > rows() || col_begin + col_count > cols_) {
        throw ShapeError("submatrix out of range");
    }
    BitMatrix out;
    out.cols_ = col_count;
    for (size_t r = 0; r < row_count; r++) {
        out.rows_.push_back(rows_[row_begin + r].slice(col_begin, col_count));
    }
    return out;
}

void BitMatrix::paste(const BitMatrix& block, size_t row, size_t col) {
    if (row + block.rows() > rows() || col + block.cols() > cols_) {
        throw ShapeError("paste of " + shape_str(block.rows(), block.cols()) + " block at (" + std::to_string(row) +
                         "," + std::to_string(col) + ") exceeds " + shape_str(rows(), cols_));
    }
    for (size_t r = 0; r < block.rows(); r++) {
        BitVector& dst = rows_[row + r];
        for (size_t c = 0; c < block.cols(); c++) {
            dst.set(col + c, block.get(r, c));
        }
    }
}

bool BitMatrix::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const BitVector& r) { return r.none(); });
}

size_t BitMatrix::nnz() const {
    size_t n = 0;
    for (const auto& r : rows_) {
        n += r.weight();
    }
    return n;
}

size_t BitMatrix::max_row_weight() const {
    size_t m = 0;
    for (const auto& r : rows_) {
        m = std::max(m, r.weight());
    }
    return m;
}

size_t BitMatrix::max_col_weight() const { return transposed().max_row_weight(); }

BitVector BitMatrix::operator*(const BitVector& v) const {
    if (v.size() != cols_) {
        throw ShapeError("matrix-vector product: matrix is " + shape_str(rows(), cols_) + " but vector has length " +
                         std::to_string(v.size()));
    }
    BitVector out(rows());
    for (size_t r = 0; r < rows(); r++) {
        if (rows_[r].dot(v)) {
            out.set(r);
        }
    }
    return out;
}

std::string BitMatrix::str() const {
    std::string s;
    for (size_t r = 0; r < rows(); r++) {
        if (r) {
            s += '\n';
        }
        s += rows_[r].str();
    }
    return s;
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("mat_mul: cannot multiply " + shape_str(a.rows(), a.cols()) + " by " +
                         shape_str(b.rows(), b.cols()));
    }
    BitMatrix out(a.rows(), b.cols());
    for (size_t r = 0; r < a.rows(); r++) {
        BitVector& acc = out.row(r);
        for (size_t k : a.row(r).support()) {
            acc ^= b.row(k);
        }
    }
    return out;
}

BitMatrix operator+(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError("matrix sum of mismatched shapes");
    }
    BitMatrix out = a;
    for (size_t r = 0; r < a.rows(); r++) {
        out.row(r) ^= b.row(r);
    }
    return out;
}

RowEchelon row_echelon(const BitMatrix& a) {
    std::vector<BitVector> rows = a.row_vectors();
    std::vector<size_t> pivots;
    size_t next = 0;
    for (size_t c = 0; c < a.cols() && next < rows.size(); c++) {
        size_t p = next;
        while (p < rows.size() && !rows[p].get(c)) {
            p++;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[next], rows[p]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != next && rows[r].get(c)) {
                rows[r] ^= rows[next];
            }
        }
        pivots.push_back(c);
        next++;
    }
    rows.resize(next);
    return RowEchelon{BitMatrix::from_rows(a.cols(), std::move(rows)), std::move(pivots)};
}

void RowEchelon::reduce(BitVector& v) const {
    for (size_t i = 0; i < pivots.size(); i++) {
        if (v.get(pivots[i])) {
            v ^= basis.row(i);
        }
    }
}

bool RowEchelon::contains(BitVector v) const {
    reduce(v);
    return v.none();
}

bool RowEchelon::insert(BitVector v) {
    reduce(v);
    size_t p = v.first_set();
    if (p == BitVector::npos) {
        return false;
    }
    for (size_t i = 0; i < pivots.size(); i++) {
        if (basis.get(i, p)) {
            basis.row(i) ^= v;
        }
    }
    size_t at = std::lower_bound(pivots.begin(), pivots.end(), p) - pivots.begin();
    pivots.insert(pivots.begin() + static_cast<std::ptrdiff_t>(at), p);
    basis.insert_row(at, std::move(v));
    return true;
}

size_t rank(const BitMatrix& a) {
    // Elimination without back-substitution; cheaper than the full RREF.
    std::vector<BitVector> rows = a.row_vectors();
    size_t r = 0;
    for (size_t c = 0; c < a.cols() && r < rows.size(); c++) {
        size_t p = r;
        while (p < rows.size() && !rows[p].get(c)) {
            p++;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[p]);
        for (size_t k = r + 1; k < rows.size(); k++) {
            if (rows[k].get(c)) {
                rows[k] ^= rows[r];
            }
        }
        r++;
    }
    return r;
}

std::vector<BitVector> kernel_basis(const BitMatrix& a) {
    RowEchelon e = row_echelon(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (size_t p : e.pivots) {
        is_pivot[p] = true;
    }
    std::vector<BitVector> basis;
    for (size_t f = 0; f < a.cols(); f++) {
        if (is_pivot[f]) {
            continue;
        }
        BitVector v(a.cols());
        v.set(f);
        for (size_t i = 0; i < e.pivots.size(); i++) {
            if (e.basis.get(i, f)) {
                v.set(e.pivots[i]);
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

BitMatrix kron(const BitMatrix& a, const BitMatrix& b) {
    constexpr size_t kMax = std::numeric_limits<size_t>::max();
    if ((b.rows() && a.rows() > kMax / b.rows()) || (b.cols() && a.cols() > kMax / b.cols())) {
        throw ShapeError("kron: result dimensions overflow");
    }
    BitMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j : a.row(i).support()) {
            for (size_t r = 0; r < b.rows(); r++) {
                BitVector& dst = out.row(i * b.rows() + r);
                for (size_t c : b.row(r).support()) {
                    dst.set(j * b.cols() + c);
                }
            }
        }
    }
    return out;
}

BitMatrix block_compose(const BlockLayout& layout) {
    size_t nr = layout.size();
    size_t nc = nr ? layout[0].size() : 0;
    std::vector<std::optional<size_t>> rs(nr), cs(nc);
    for (size_t i = 0; i < nr; i++) {
        if (layout[i].size() != nc) {
            throw ShapeError("block_compose: block row " + std::to_string(i) + " has " +
                             std::to_string(layout[i].size()) + " blocks, expected " + std::to_string(nc));
        }
        for (size_t j = 0; j < nc; j++) {
            if (!layout[i][j]) {
                continue;
            }
            if (!rs[i]) {
                rs[i] = layout[i][j]->rows();
            }
            if (!cs[j]) {
                cs[j] = layout[i][j]->cols();
            }
        }
    }
    std::vector<size_t> row_sizes(nr), col_sizes(nc);
    for (size_t i = 0; i < nr; i++) {
        if (!rs[i]) {
            throw ShapeError("block_compose: block row " + std::to_string(i) + " has no block to infer its height");
        }
        row_sizes[i] = *rs[i];
    }
    for (size_t j = 0; j < nc; j++) {
        if (!cs[j]) {
            throw ShapeError("block_compose: block column " + std::to_string(j) + " has no block to infer its width");
        }
        col_sizes[j] = *cs[j];
    }
    return block_compose(layout, row_sizes, col_sizes);
}

BitMatrix block_compose(const BlockLayout& layout, std::span<const size_t> row_sizes,
                        std::span<const size_t> col_sizes) {
    if (layout.size() != row_sizes.size()) {
        throw ShapeError("block_compose: layout has " + std::to_string(layout.size()) + " block rows but " +
                         std::to_string(row_sizes.size()) + " heights were given");
    }
    size_t total_rows = 0, total_cols = 0;
    for (size_t s : row_sizes) {
        total_rows += s;
    }
    for (size_t s : col_sizes) {
        total_cols += s;
    }
    BitMatrix out(total_rows, total_cols);
    size_t r0 = 0;
    for (size_t i = 0; i < layout.size(); i++) {
        if (layout[i].size() != col_sizes.size()) {
            throw ShapeError("block_compose: block row " + std::to_string(i) + " has the wrong number of blocks");
        }
        size_t c0 = 0;
        for (size_t j = 0; j < col_sizes.size(); j++) {
            const auto& blk = layout[i][j];
            if (blk) {
                if (blk->rows() != row_sizes[i] || blk->cols() != col_sizes[j]) {
                    throw ShapeError("block_compose: block (" + std::to_string(i) + "," + std::to_string(j) +
                                     ") is " + shape_str(blk->rows(), blk->cols()) + ", expected " +
                                     shape_str(row_sizes[i], col_sizes[j]));
                }
                out.paste(*blk, r0, c0);
            }
            c0 += col_sizes[j];
        }
        r0 += row_sizes[i];
    }
    return out;
}

BitMatrix hstack(std::span<const BitMatrix> parts) {
    if (parts.empty()) {
        return BitMatrix();
    }
    BlockLayout layout(1);
    for (const auto& p : parts) {
        layout[0].emplace_back(p);
    }
    return block_compose(layout);
}

BitMatrix vstack(std::span<const BitMatrix> parts) {
    if (parts.empty()) {
        return BitMatrix();
    }
    BlockLayout layout;
    for (const auto& p : parts) {
        layout.push_back({p});
    }
    return block_compose(layout);
}

BitMatrix hstack(std::initializer_list<BitMatrix> parts) {
    return hstack(std::span<const BitMatrix>(parts.begin(), parts.size()));
}

BitMatrix vstack(std::initializer_list<BitMatrix> parts) {
    return vstack(std::span<const BitMatrix>(parts.begin(), parts.size()));
}

BitMatrix row_space_complement(const BitMatrix& a) {
    std::vector<BitVector> ker = kernel_basis(a);
    return row_echelon(BitMatrix::from_rows(a.cols(), std::move(ker))).basis;
}

BitMatrix left_kernel(const BitMatrix& a) { return row_space_complement(a.transposed()); }

BitVector vec(const BitMatrix& c) {
    BitVector out(c.rows() * c.cols());
    for (size_t i = 0; i < c.rows(); i++) {
        for (size_t j : c.row(i).support()) {
            out.set(j * c.rows() + i);
        }
    }
    return out;
}

BitMatrix unvec(const BitVector& v, size_t rows, size_t cols) {
    if (v.size() != rows * cols) {
        throw ShapeError("unvec: vector length " + std::to_string(v.size()) + " does not equal " +
                         shape_str(rows, cols));
    }
    BitMatrix out(rows, cols);
    for (size_t k : v.support()) {
        out.set(k % rows, k / rows);
    }
    return out;
}

}  // namespace forge
