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

#ifndef FORGE_MIN_WEIGHT_H
#define FORGE_MIN_WEIGHT_H

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "forge/bit_matrix.h"

namespace forge {

/// Outcome of a bounded minimum-weight search.
struct SearchResult {
    /// Chosen column indices in increasing order, if a solution was found.
    std::optional<std::vector<size_t>> columns;
    /// Weight of the solution when found; otherwise every weight below this was
    /// fully searched without success (a lower bound on the optimum).
    size_t weight = 0;
    /// True when `weight` is proven optimal.
    bool exact = false;
    /// False when the node budget ran out before the search finished.
    bool complete = true;
    uint64_t nodes = 0;
};

/// Finds minimum-weight selections of columns x with A·x = target, optionally
/// also requiring B·x != 0.
///
/// Columns carry a group id and at most one column per group may be chosen;
/// the weight is the number of chosen columns. With one group per column this
/// is plain Hamming weight; grouping the X, Z and Y columns of a qubit gives
/// Pauli weight.
///
/// Weight w is searched by enumerating (w-1)-subsets and finding the last
/// column through a hash table keyed on A-columns. Among solutions of minimum
/// weight the lexicographically smallest index tuple is returned.
class MinWeightSolver {
   public:
    MinWeightSolver(std::vector<BitVector> a_columns, std::vector<BitVector> b_columns = {},
                    std::vector<size_t> groups = {});
    /// Solver over the columns of `a` (and `b`, if it has any columns).
    static MinWeightSolver from_matrices(const BitMatrix& a, const BitMatrix& b = {});

    size_t num_columns() const { return a_.size(); }
    size_t a_rows() const { return a_rows_; }

    SearchResult solve(const BitVector& target, size_t max_weight, bool require_b_nonzero = false,
                       uint64_t max_nodes = kDefaultNodeBudget) const;

    /// Calls `visit(columns)` for every solution of exactly weight w (in
    /// lexicographic order) until it returns false. Returns false if the node
    /// budget ran out.
    template <typename Visit>
    bool for_each_solution(const BitVector& target, size_t w, bool require_b_nonzero, Visit visit,
                           uint64_t max_nodes = kDefaultNodeBudget) const;

    static constexpr uint64_t kDefaultNodeBudget = uint64_t{1} << 34;

   private:
    bool search_weight(const BitVector& target, size_t w, bool require_b_nonzero, uint64_t& nodes, uint64_t max_nodes,
                       const std::function<bool(const std::vector<size_t>&)>& visit) const;

    size_t a_rows_ = 0;
    size_t b_rows_ = 0;
    std::vector<BitVector> a_;
    std::vector<BitVector> b_;
    std::vector<size_t> groups_;
    std::unordered_map<BitVector, std::vector<size_t>, BitVectorHash> by_a_;
};

template <typename Visit>
bool MinWeightSolver::for_each_solution(const BitVector& target, size_t w, bool require_b_nonzero, Visit visit,
                                        uint64_t max_nodes) const {
    uint64_t nodes = 0;
    std::function<bool(const std::vector<size_t>&)> fn = [&](const std::vector<size_t>& cols) { return visit(cols); };
    search_weight(target, w, require_b_nonzero, nodes, max_nodes, fn);
    return nodes <= max_nodes;
}

}  // namespace forge

#endif
