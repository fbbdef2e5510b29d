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

#ifndef FORGE_CHAIN_COMPLEX_H
#define FORGE_CHAIN_COMPLEX_H

#include <filesystem>
#include <string>
#include <vector>

#include "forge/bit_matrix.h"

namespace forge {

/// One direct summand of a cell space, e.g. "J1 x K0" with its dimension.
struct Summand {
    std::string label;
    size_t dim = 0;
};

/// A chain complex C_L -> ... -> C_0 over GF(2).
///
/// `boundary(k)` maps degree k to degree k-1 (so it is dim C_{k-1} x dim C_k).
/// Each degree carries an ordered list of summands; for a complex built by
/// `tensor` these record which product space each block of rows or columns
/// belongs to.
class ChainComplex {
   public:
    ChainComplex() = default;
    /// `boundaries[i]` is the map from degree i+1 to degree i. Shapes must chain.
    explicit ChainComplex(std::vector<BitMatrix> boundaries, std::string name = "C");
    /// A complex of the given dimensions with all boundary maps zero.
    static ChainComplex zero(std::vector<size_t> dims, std::string name = "C");
    /// Length-1 complex whose only map is a parity-check matrix: bits in degree 1, checks in degree 0.
    static ChainComplex from_check_matrix(const BitMatrix& h, std::string name);

    size_t length() const { return dims_.empty() ? 0 : dims_.size() - 1; }
    size_t dim(size_t k) const;
    const std::vector<size_t>& dims() const { return dims_; }
    /// Map from degree k to degree k-1, 1 <= k <= length().
    const BitMatrix& boundary(size_t k) const;
    const std::string& name() const { return name_; }
    const std::vector<Summand>& summands(size_t k) const;
    /// Offset of summand `index` within degree k.
    size_t summand_offset(size_t k, size_t index) const;

    /// Replaces summand labels of degree k; sizes must add up to dim(k).
    void set_summands(size_t k, std::vector<Summand> summands);
    void set_name(std::string name) { name_ = std::move(name); }

    /// Throws ValidationError naming the first degree k with boundary(k)·boundary(k+1) != 0.
    void validate() const;
    bool is_valid() const;

    bool operator==(const ChainComplex& other) const;

   private:
    std::string name_;
    std::vector<size_t> dims_;
    std::vector<BitMatrix> boundaries_;
    std::vector<std::vector<Summand>> summands_;
};

/// dim ker boundary(k) - rank boundary(k+1); out-of-range maps count as zero.
size_t betti(const ChainComplex& c, size_t k);

/// Order of the summands X_i x Y_j inside each degree of a tensor product.
enum class SummandOrder {
    /// Increasing degree of the first factor, e.g. X0 x Y1 before X1 x Y0.
    kAscending,
    /// Decreasing degree of the first factor.
    kDescending,
};

/// Graded tensor product from the generic rule d(a x b) = da x b + a x db
/// (no signs over GF(2)). `order` may be overridden per degree through
/// `per_degree`, whose entry k (if present) fixes the order at degree k.
ChainComplex tensor_generic(const ChainComplex& x, const ChainComplex& y, SummandOrder order = SummandOrder::kAscending,
                            const std::vector<SummandOrder>& per_degree = {}, std::string name = "");

/// Canonical tensor product. For two length-1 complexes this is the hypergraph
/// product layout; for two length-2 complexes the blocks are written out
/// explicitly, with degree 3 ordered (J2 x K1, J1 x K2) and every other degree
/// ascending. Other lengths fall back to `tensor_generic` (ascending).
ChainComplex tensor(const ChainComplex& x, const ChainComplex& y, std::string name = "");

/// Writes d1.alist ... dL.alist plus manifest.txt listing the name, degrees, dims, and summands.
void save_complex(const std::filesystem::path& dir, const ChainComplex& c);
ChainComplex load_complex(const std::filesystem::path& dir);

}  // namespace forge

#endif
