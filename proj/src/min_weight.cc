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

#include "forge/min_weight.h"

#include "forge/errors.h"

namespace forge {

MinWeightSolver::MinWeightSolver(std::vector<BitVector> a_columns, std::vector<BitVector> b_columns,
                                 std::vector<size_t> groups)
    : a_(std::move(a_columns)), b_(std::move(b_columns)), groups_(std::move(groups)) {
    size_t n = a_.size();
    a_rows_ = n ? a_[0].size() : 0;
    for (const auto& c : a_) {
        if (c.size() != a_rows_) {
            throw ShapeError("solver: A-columns have different lengths");
        }
    }
    if (b_.empty()) {
        b_.assign(n, BitVector(0));
    }
    if (b_.size() != n) {
        throw ShapeError("solver: A and B have different column counts");
    }
    b_rows_ = n ? b_[0].size() : 0;
    for (const auto& c : b_) {
        if (c.size() != b_rows_) {
            throw ShapeError("solver: B-columns have different lengths");
        }
    }
    if (groups_.empty()) {
        groups_.resize(n);
        for (size_t i = 0; i < n; i++) {
            groups_[i] = i;
        }
    }
    if (groups_.size() != n) {
        throw ShapeError("solver: group list does not match column count");
    }
    for (size_t i = 1; i < n; i++) {
        if (groups_[i] < groups_[i - 1]) {
            throw ShapeError("solver: group ids must be nondecreasing in column order");
        }
    }
    for (size_t i = 0; i < n; i++) {
        by_a_[a_[i]].push_back(i);
    }
}

MinWeightSolver MinWeightSolver::from_matrices(const BitMatrix& a, const BitMatrix& b) {
    if (b.cols() != 0 && b.cols() != a.cols()) {
        throw ShapeError("solver: A and B have different column counts");
    }
    auto ac = a.column_vectors();
    if (a.rows() == 0) {
        ac.assign(a.cols(), BitVector(0));
    }
    std::vector<BitVector> bc;
    if (b.cols() != 0) {
        bc = b.column_vectors();
        if (b.rows() == 0) {
            bc.assign(b.cols(), BitVector(0));
        }
    }
    return MinWeightSolver(std::move(ac), std::move(bc));
}

bool MinWeightSolver::search_weight(const BitVector& target, size_t w, bool require_b_nonzero, uint64_t& nodes,
                                    uint64_t max_nodes,
                                    const std::function<bool(const std::vector<size_t>&)>& visit) const {
    if (target.size() != a_rows_ && !a_.empty()) {
        throw ShapeError("solver: target length " + std::to_string(target.size()) + " does not match " +
                         std::to_string(a_rows_) + " rows");
    }
    std::vector<size_t> chosen;
    if (w == 0) {
        if (target.none() && !require_b_nonzero) {
            return !visit(chosen);
        }
        return false;
    }
    const size_t n = a_.size();
    const size_t none = static_cast<size_t>(-1);

    // Returns true when the visitor asked to stop or the budget ran out.
    std::function<bool(size_t, size_t, BitVector&, BitVector&)> rec = [&](size_t start, size_t last_group,
                                                                          BitVector& pa, BitVector& pb) -> bool {
        if (chosen.size() + 1 == w) {
            pa ^= target;
            auto it = by_a_.find(pa);
            pa ^= target;
            if (it == by_a_.end()) {
                return false;
            }
            for (size_t c : it->second) {
                if (last_group != none && groups_[c] <= last_group) {
                    continue;
                }
                if (require_b_nonzero) {
                    pb ^= b_[c];
                    bool zero = pb.none();
                    pb ^= b_[c];
                    if (zero) {
                        continue;
                    }
                }
                chosen.push_back(c);
                bool cont = visit(chosen);
                chosen.pop_back();
                if (!cont) {
                    return true;
                }
            }
            return false;
        }
        for (size_t i = start; i < n; i++) {
            if (last_group != none && groups_[i] <= last_group) {
                continue;
            }
            if (++nodes > max_nodes) {
                return true;
            }
            chosen.push_back(i);
            pa ^= a_[i];
            pb ^= b_[i];
            bool stop = rec(i + 1, groups_[i], pa, pb);
            pa ^= a_[i];
            pb ^= b_[i];
            chosen.pop_back();
            if (stop) {
                return true;
            }
        }
        return false;
    };
    BitVector pa(a_rows_), pb(b_rows_);
    return rec(0, none, pa, pb);
}

SearchResult MinWeightSolver::solve(const BitVector& target, size_t max_weight, bool require_b_nonzero,
                                    uint64_t max_nodes) const {
    SearchResult res;
    for (size_t w = 0; w <= max_weight; w++) {
        std::optional<std::vector<size_t>> found;
        search_weight(target, w, require_b_nonzero, res.nodes, max_nodes, [&](const std::vector<size_t>& cols) {
            found = cols;
            return false;
        });
        if (found) {
            res.columns = std::move(found);
            res.weight = w;
            res.exact = true;
            return res;
        }
        if (res.nodes > max_nodes) {
            res.weight = w;
            res.complete = false;
            return res;
        }
    }
    res.weight = max_weight + 1;
    return res;
}

}  // namespace forge
