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

#ifndef FORGE_CONSTRUCTIONS_H
#define FORGE_CONSTRUCTIONS_H

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "forge/chain_complex.h"
#include "forge/classical_code.h"
#include "forge/css_code.h"
#include "json.hpp"

namespace forge {

enum class Family { kHgp, kSehgp, kBsh, kSsh, kBssh, kRsh1, kRsh2, kBrsh1, kBrsh2, kXzzx3d };

/// "hgp", "sehgp", "bsh", ... as used on the command line.
std::string family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// A stabilizer code together with the block structure it was assembled from.
///
/// The stabilizer rows are split into `row_bands` and the qubits into
/// `col_bands`. Block (r, c) of the X parts is labeled `x_labels[r][c]` and of
/// the Z parts `z_labels[r][c]`; an empty label marks a zero block. Bands are
/// ordered as in the symplectic matrix [H_X | H_Z]. For codes in kCss form the
/// first `z_bands` row bands are the rows of `css.hz` and the remaining bands
/// are the rows of `css.hx`.
struct BlockTaggedCss {
    CssCode css;
    Family family = Family::kHgp;
    std::vector<size_t> row_bands;
    std::vector<size_t> col_bands;
    std::vector<std::vector<std::string>> x_labels;
    std::vector<std::vector<std::string>> z_labels;
    size_t z_bands = 0;
    nlohmann::json metadata = nlohmann::json::object();
};

/// (X parts, Z parts) of every stabilizer in band order.
std::pair<BitMatrix, BitMatrix> symplectic_view(const BlockTaggedCss& t);

/// Checks that zero-labeled blocks are zero, that the bands tile the
/// matrices, and runs validate_css. Anticommuting stabilizers are reported by
/// band, e.g. "commutation broken at block (3,2)" (1-based row bands).
void validate_tagged(const BlockTaggedCss& t);

/// Block-wise layout of the labels as JSON: one {"x", "z"} object per block.
nlohmann::json block_map_json(const BlockTaggedCss& t);
/// Reattaches a block map written by `block_map_json` to a loaded code.
/// Throws ConfigError on a malformed map; shapes are checked by validate_tagged.
BlockTaggedCss tagged_from_block_map(CssCode code, Family family, const nlohmann::json& block_map);

/// Hypergraph product: hx = [H1 x I | I x H2^T], hz = [I x H2 | H1^T x I].
BlockTaggedCss hgp(const BitMatrix& h1, const BitMatrix& h2);

/// Length-4 product complex Q = (X x Y) x (Z x W) and the code it defines.
struct SehgpBundle {
    ChainComplex q;
    /// hx = d2[Q], hz = d3[Q]^T, hsx = d1[Q], hsz = d4[Q]^T.
    BlockTaggedCss css;
    std::array<ClassicalCode, 4> base;
};
SehgpBundle sehgp(const ClassicalCode& x, const ClassicalCode& y, const ClassicalCode& z, const ClassicalCode& w);

enum class CphrType { kT1, kT2 };

/// Hadamard rotation of one block column restricted to some row bands:
/// within each listed row band the X and Z blocks of column band `col` are
/// exchanged. Band indices are 0-based.
struct CphrStep {
    CphrType type;
    std::vector<size_t> rows;
    size_t col;
};

/// Applies the steps in order and validates only the final result (a single
/// swap may break commutation that a later swap restores). The output is in
/// symplectic form; syndrome checks are dropped since they generally no
/// longer annihilate the rotated blocks. Throws CommutationError naming the
/// offending block pair.
BlockTaggedCss cphr(const BlockTaggedCss& c, const std::vector<CphrStep>& steps);

/// The two swaps of the hypergraph product layout (whole first or second block column).
CphrStep hgp_t1();
CphrStep hgp_t2();
/// The two swaps that turn the SEHGP layout into BSH: second block column in
/// row bands (3,2) and in row bands (4,1).
CphrStep bsh_t2();
CphrStep bsh_t1();

/// Bias-tailored SEHGP: both swaps plus block-diagonal syndrome checks, three
/// disjoint blocks each.
BlockTaggedCss bsh(const SehgpBundle& bundle);

/// ker H = ker H^T, required for the identical-code parameter formulas.
bool identical_code_premise(const ClassicalCode& base);

/// Product of the length-1 complexes d2[J] and d1[J] for J = base x base.
BlockTaggedCss ssh(const ClassicalCode& base);
/// SSH rotated on its second block column, with RREF left kernels as syndrome checks.
BlockTaggedCss bssh(const ClassicalCode& base);

/// Reduced SEHGP codes: `which` = 1 keeps row bands (2,3) and column bands (1,2);
/// `which` = 2 keeps row bands (1,4) and column bands (2,3). Syndrome checks are
/// canonical RREF row-space complements: ker hsx = im hx, ker hsz = im hz.
BlockTaggedCss rsh(const SehgpBundle& bundle, int which);
BlockTaggedCss brsh(const SehgpBundle& bundle, int which);

/// bssh(repetition_closed_loop(n)) tagged as the 3D XZZX code.
BlockTaggedCss xzzx3d(size_t n);

/// Builds any family from one base code used in every slot.
BlockTaggedCss build_family(Family f, const ClassicalCode& base);

}  // namespace forge

#endif
