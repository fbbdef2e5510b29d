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

#ifndef FORGE_CSS_CODE_H
#define FORGE_CSS_CODE_H

#include <optional>
#include <string>
#include <vector>

#include "forge/bit_matrix.h"
#include "forge/classical_code.h"
#include "forge/min_weight.h"

namespace forge {

/// How the rows of (hx, hz) are read.
enum class CheckForm {
    /// hx rows are X-type stabilizers and hz rows are Z-type stabilizers.
    kCss,
    /// Row i of hx and row i of hz are the X and Z parts of one stabilizer
    /// (the [H_X | H_Z] form). Produced by Hadamard rotations of block columns.
    kSymplectic,
};

/// A Pauli operator up to phase as the pair (ex, ez); Y sets both bits.
struct PauliError {
    BitVector ex;
    BitVector ez;

    PauliError() = default;
    PauliError(BitVector x, BitVector z);
    static PauliError identity(size_t n) { return PauliError(BitVector(n), BitVector(n)); }
    static PauliError from_string(std::string_view paulis);

    size_t n() const { return ex.size(); }
    /// Number of qubits acted on nontrivially.
    size_t weight() const { return (ex | ez).weight(); }
    bool is_identity() const { return ex.none() && ez.none(); }
    PauliError& operator*=(const PauliError& other);
    friend PauliError operator*(PauliError a, const PauliError& b) { return a *= b; }
    bool operator==(const PauliError& other) const = default;
    /// One character per qubit from "IXZY".
    std::string str() const;
};

/// Measurement outcomes. For kCss codes sx = hx·ez and sz = hz·ex; for
/// kSymplectic codes sx = hx·ez + hz·ex covers every row and sz is empty.
struct Syndrome {
    BitVector sx;
    BitVector sz;

    BitVector flat() const { return sx.concat(sz); }
    size_t weight() const { return sx.weight() + sz.weight(); }
    bool none() const { return sx.none() && sz.none(); }
    Syndrome& operator^=(const Syndrome& other);
    bool operator==(const Syndrome& other) const = default;
};

/// Stabilizer code given by binary check matrices, with optional syndrome
/// checks hsx (acting on the outcomes of hx rows) and hsz (on hz rows). In the
/// symplectic form both syndrome checks act on the single outcome vector.
struct CssCode {
    BitMatrix hx;
    BitMatrix hz;
    CheckForm form = CheckForm::kCss;
    std::optional<BitMatrix> hsx;
    std::optional<BitMatrix> hsz;

    CssCode() = default;
    CssCode(BitMatrix x_checks, BitMatrix z_checks, CheckForm check_form = CheckForm::kCss);

    size_t n() const { return hx.cols(); }
    /// Number of stabilizer measurements (rows of the full check matrix).
    size_t num_checks() const;
    /// X parts of every stabilizer, one row per measurement (kCss: [hx; 0]).
    BitMatrix full_x() const;
    /// Z parts of every stabilizer (kCss: [0; hz]).
    BitMatrix full_z() const;
    /// Same code in symplectic form; syndrome checks become block diagonal.
    CssCode to_symplectic() const;
};

/// Throws CommutationError naming the first anticommuting pair, ShapeError on
/// mismatched shapes, and ValidationError if a syndrome check fails to
/// annihilate its check matrix (hsx·hx = 0, hsz·hz = 0).
void validate_css(const CssCode& c);

/// n minus the rank of the stabilizer group.
size_t logical_count(const CssCode& c);

Syndrome syndrome(const CssCode& c, const PauliError& e);

/// Which operators a distance ranges over.
enum class DistanceKind {
    /// Pure-Z operators undetected by the X parts: ker hx outside the stabilizers.
    kX,
    /// Pure-X operators: ker hz outside the stabilizers.
    kZ,
    /// Arbitrary Paulis, counted by Pauli weight.
    kFull,
};

/// Weight-limited search for the lightest nontrivial logical of the given kind.
/// Throws NoLogicalsError when k = 0.
Distance distance(const CssCode& c, DistanceKind kind, size_t max_weight,
                  uint64_t max_nodes = MinWeightSolver::kDefaultNodeBudget);

/// 2k symplectic vectors (ex | ez) completing the stabilizer group to its
/// normalizer. An operator commuting with every stabilizer is a nontrivial
/// logical iff it anticommutes with one of these.
std::vector<PauliError> logical_basis(const CssCode& c);

/// Symplectic inner product: 1 iff the operators anticommute.
bool anticommutes(const PauliError& a, const PauliError& b);

/// A connected component of the check/qubit incidence graph.
struct TannerComponent {
    std::vector<size_t> qubits;
    std::vector<size_t> checks;
};

/// Components of the graph of hx (kind kX) or hz (kind kZ), sorted by
/// smallest qubit. Checks with empty support and qubits touched by no check
/// are not counted.
std::vector<TannerComponent> tanner_components(const CssCode& c, DistanceKind kind);
std::vector<TannerComponent> tanner_components(const BitMatrix& h);

/// Largest stabilizer weight and largest number of stabilizers on one qubit.
struct StabilizerWeights {
    size_t max_check_weight = 0;
    size_t max_qubit_degree = 0;
};
StabilizerWeights stabilizer_weights(const CssCode& c);

/// Solver over Pauli columns: for qubit q, columns 3q, 3q+1, 3q+2 are X, Z and Y
/// with A-part equal to their syndrome contribution. With `with_logicals` the
/// A-part also carries the anticommutation pattern with `logical_basis(c)`.
MinWeightSolver pauli_solver(const CssCode& c, bool with_logicals);
/// Pauli operator from solver column indices.
PauliError pauli_from_columns(const std::vector<size_t>& columns, size_t n);
/// Anticommutation pattern of e against a list of operators.
BitVector commutation_pattern(const std::vector<PauliError>& ops, const PauliError& e);

}  // namespace forge

#endif
