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

#include "forge/soundness.h"

#include <algorithm>
#include <sstream>

#include "forge/errors.h"

namespace forge {

namespace {

constexpr size_t kExhaustRankLimit = 20;

uint64_t binomial(uint64_t n, uint64_t k) {
    if (k > n) {
        return 0;
    }
    uint64_t r = 1;
    for (uint64_t i = 1; i <= k; i++) {
        r = r * (n - k + i) / i;
        if (r > (uint64_t{1} << 62)) {
            return uint64_t{1} << 62;
        }
    }
    return r;
}

/// Calls visit(indices) for every k-subset of {0..n-1} in lexicographic order.
template <typename Visit>
void for_each_subset(size_t n, size_t k, Visit visit) {
    if (k > n) {
        return;
    }
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; i++) {
        idx[i] = i;
    }
    while (true) {
        visit(idx);
        size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) {
            i--;
        }
        if (i == 0) {
            return;
        }
        idx[i - 1]++;
        for (size_t j = i; j < k; j++) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// a/b > c/d for nonnegative fractions with positive denominators.
bool greater(uint64_t a, uint64_t b, uint64_t c, uint64_t d) { return a * d > c * b; }

void note_ratio(SoundnessReport& r, const SoundnessFunction& f, size_t x, size_t w) {
    uint64_t num = 4 * static_cast<uint64_t>(w), den = f.quarters(x);
    if (den == 0) {
        return;
    }
    if (greater(num, den, r.max_ratio_num, r.max_ratio_den)) {
        r.max_ratio_num = num;
        r.max_ratio_den = den;
    }
}

/// Scan over syndromes of weight 1..t of a map given by its solver and the
/// columns of a left-kernel matrix (s is in the image iff they XOR to zero on supp s).
SoundnessReport scan(const MinWeightSolver& solver, const BitMatrix& kernel, size_t m, size_t t,
                     const SoundnessFunction& f, const ScanOptions& opt) {
    SoundnessReport rep;
    rep.f_name = f.name;
    rep.syndrome_length = m;
    rep.error_columns = solver.num_columns();
    std::vector<BitVector> kcols = kernel.column_vectors();
    uint64_t budget = opt.max_syndromes;
    size_t reach = 0;
    for (size_t x = 1; x <= t; x++) {
        uint64_t count = binomial(m, x);
        if (count > budget) {
            rep.partial = true;
            break;
        }
        budget -= count;
        reach = x;
    }
    rep.t_scanned = reach;
    for (size_t x = 1; x <= reach; x++) {
        SoundnessRow row;
        row.syndrome_weight = x;
        size_t cap = f.floor_at(x) + opt.extra_weight;
        BitVector acc(kernel.rows());
        for_each_subset(m, x, [&](const std::vector<size_t>& idx) {
            acc = BitVector(kernel.rows());
            for (size_t i : idx) {
                acc ^= kcols[i];
            }
            if (acc.any()) {
                return;
            }
            row.syndromes++;
            BitVector s = BitVector::from_support(m, idx);
            SearchResult r = solver.solve(s, cap, false, opt.max_nodes);
            size_t w = r.weight;
            bool exact = r.columns.has_value() && r.exact;
            if (!r.complete && !r.columns && w <= f.floor_at(x)) {
                // The budget ran out before the bound was decided.
                rep.partial = true;
            }
            bool worse = row.syndromes == 1 || w > row.max_reduced_weight;
            if (worse) {
                row.max_reduced_weight = w;
                row.worst = s;
                row.worst_preimage = r.columns;
            }
            if (!exact) {
                row.exact = false;
            }
            note_ratio(rep, f, x, w);
            if (!f.admits(x, w)) {
                row.violated = true;
                if (rep.violations.size() < opt.max_examples) {
                    rep.violations.push_back({s, r.columns, x, w, exact});
                }
            }
        });
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

/// Gray-code walk over the stabilizer span; returns the lightest element of e·S.
WeightBound exhaust_coset(const std::vector<PauliError>& basis, const PauliError& e) {
    PauliError cur = e, best = e;
    size_t best_w = e.weight();
    uint64_t total = uint64_t{1} << basis.size();
    for (uint64_t i = 1; i < total; i++) {
        size_t bit = static_cast<size_t>(__builtin_ctzll(i));
        cur *= basis[bit];
        size_t w = cur.weight();
        if (w < best_w) {
            best_w = w;
            best = cur;
        }
    }
    return {best_w, true, best};
}

std::vector<PauliError> stabilizer_basis(const CssCode& c) {
    BitMatrix sx = c.full_x(), sz = c.full_z();
    size_t n = c.n();
    std::vector<BitVector> rows;
    for (size_t r = 0; r < sx.rows(); r++) {
        rows.push_back(sx.row(r).concat(sz.row(r)));
    }
    RowEchelon re = row_echelon(BitMatrix::from_rows(2 * n, rows));
    std::vector<PauliError> out;
    for (size_t r = 0; r < re.rank(); r++) {
        out.emplace_back(re.basis.row(r).slice(0, n), re.basis.row(r).slice(n, n));
    }
    return out;
}

/// Below-|e| search shared by the reduced and coset weights.
WeightBound search_below(const MinWeightSolver& solver, const BitVector& target, const PauliError& e, size_t budget,
                         uint64_t max_nodes) {
    size_t we = e.weight();
    if (we == 0) {
        return {0, true, e};
    }
    size_t cap = std::min(budget, we - 1);
    SearchResult r = solver.solve(target, cap, false, max_nodes);
    if (r.columns) {
        return {r.weight, r.exact, pauli_from_columns(*r.columns, e.n())};
    }
    if (r.complete && cap == we - 1) {
        return {we, true, e};
    }
    return {r.weight, false, e};
}

BitVector coset_target(const CssCode& c, const std::vector<PauliError>& logicals, const PauliError& e) {
    return syndrome(c, e).flat().concat(commutation_pattern(logicals, e));
}

}  // namespace

SoundnessFunction SoundnessFunction::quarter_square() {
    return {"x2over4", [](size_t x) { return static_cast<uint64_t>(x) * x; }};
}

SoundnessFunction SoundnessFunction::quarter_cube() {
    return {"x3over4", [](size_t x) { return static_cast<uint64_t>(x) * x * x; }};
}

SoundnessFunction SoundnessFunction::parse(std::string_view name) {
    if (name == "x2over4") {
        return quarter_square();
    }
    if (name == "x3over4") {
        return quarter_cube();
    }
    throw ConfigError("unknown soundness function '" + std::string(name) + "' (expected x2over4 or x3over4)");
}

std::string SoundnessFunction::format_at(size_t x) const {
    uint64_t q = quarters(x);
    static constexpr const char* kFrac[] = {"", ".25", ".5", ".75"};
    return std::to_string(q / 4) + kFrac[q % 4];
}

WeightBound reduced_weight(const CssCode& c, const PauliError& e, size_t budget) {
    return search_below(pauli_solver(c, false), syndrome(c, e).flat(), e, budget,
                        MinWeightSolver::kDefaultNodeBudget);
}

WeightBound coset_min_weight(const CssCode& c, const PauliError& e, size_t budget) {
    std::vector<PauliError> basis = stabilizer_basis(c);
    if (basis.size() <= kExhaustRankLimit) {
        return exhaust_coset(basis, e);
    }
    return search_below(pauli_solver(c, true), coset_target(c, logical_basis(c), e), e, budget,
                        MinWeightSolver::kDefaultNodeBudget);
}

std::string SoundnessReport::csv(const SoundnessFunction& f) const {
    std::ostringstream out;
    out << "syndrome_weight,max_reduced_weight,bound,violated\n";
    for (const auto& r : rows) {
        out << r.syndrome_weight << ',';
        if (r.syndromes == 0) {
            out << "none";
        } else {
            out << (r.exact ? "" : ">=") << r.max_reduced_weight;
        }
        out << ',' << f.format_at(r.syndrome_weight) << ',' << (r.violated ? "true" : "false") << '\n';
    }
    return out.str();
}

SoundnessReport soundness_scan(const BitMatrix& syndrome_map, size_t t, const SoundnessFunction& f,
                               const ScanOptions& options) {
    return scan(MinWeightSolver::from_matrices(syndrome_map), left_kernel(syndrome_map), syndrome_map.rows(), t, f,
                options);
}

SoundnessReport soundness_scan(const CssCode& c, size_t t, const SoundnessFunction& f, const ScanOptions& options) {
    BitMatrix s = hstack({c.full_x(), c.full_z()});
    return scan(pauli_solver(c, false), left_kernel(s), s.rows(), t, f, options);
}

SoundnessReport combine_direct_sum(const SoundnessReport& a, const SoundnessReport& b, const SoundnessFunction& f) {
    SoundnessReport out;
    out.f_name = f.name;
    out.t_scanned = std::min(a.t_scanned, b.t_scanned);
    out.syndrome_length = a.syndrome_length + b.syndrome_length;
    out.error_columns = a.error_columns + b.error_columns;
    out.partial = a.partial || b.partial;
    // Weight-0 class: only the zero syndrome, reduced weight 0.
    auto row_of = [](const SoundnessReport& r, size_t w) -> SoundnessRow {
        if (w == 0) {
            SoundnessRow z;
            z.syndromes = 1;
            z.worst = BitVector(r.syndrome_length);
            z.worst_preimage = std::vector<size_t>{};
            return z;
        }
        return r.rows[w - 1];
    };
    for (size_t x = 1; x <= out.t_scanned; x++) {
        SoundnessRow row;
        row.syndrome_weight = x;
        for (size_t wa = 0; wa <= x; wa++) {
            SoundnessRow ra = row_of(a, wa), rb = row_of(b, x - wa);
            if (ra.syndromes == 0 || rb.syndromes == 0) {
                continue;
            }
            row.syndromes += ra.syndromes * rb.syndromes;
            size_t w = ra.max_reduced_weight + rb.max_reduced_weight;
            row.exact = row.exact && ra.exact && rb.exact;
            if (row.syndromes == ra.syndromes * rb.syndromes || w > row.max_reduced_weight) {
                row.max_reduced_weight = w;
                row.worst = ra.worst->concat(*rb.worst);
                if (ra.worst_preimage && rb.worst_preimage) {
                    std::vector<size_t> cols = *ra.worst_preimage;
                    for (size_t col : *rb.worst_preimage) {
                        cols.push_back(col + a.error_columns);
                    }
                    row.worst_preimage = cols;
                } else {
                    row.worst_preimage.reset();
                }
            }
        }
        if (row.syndromes > 0) {
            note_ratio(out, f, x, row.max_reduced_weight);
            if (!f.admits(x, row.max_reduced_weight)) {
                row.violated = true;
                out.violations.push_back({*row.worst, row.worst_preimage, x, row.max_reduced_weight, row.exact});
            }
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

std::vector<SoundnessReport> inheritance_check(const BitMatrix& d, size_t n, size_t t, const SoundnessFunction& f,
                                               const ScanOptions& options) {
    if (n == 0) {
        throw ConfigError("inheritance check needs n >= 1");
    }
    std::vector<SoundnessReport> out{soundness_scan(d, t, f, options)};
    if (!out[0].clean()) {
        throw ConfigError("base map is not (t,f)-sound on the scanned range");
    }
    if (n == 1) {
        return out;
    }
    BitMatrix i = BitMatrix::identity(n);
    out.push_back(soundness_scan(kron(d, i), t, f, options));
    out.push_back(soundness_scan(kron(i, d), t, f, options));
    for (size_t k = 1; k < out.size(); k++) {
        if (!out[k].violations.empty()) {
            throw ValidationError(std::string("inheritance contradiction: ") + (k == 1 ? "d x I" : "I x d") +
                                  " violates the bound its factor satisfies");
        }
    }
    return out;
}

bool RegimeParams::contains(size_t u_weight, size_t e_weight) const {
    bool u_ok = 2 * u_weight < std::min(d_s, t);
    bool e_ok = f.quarters(2 * u_weight) + 4 * static_cast<uint64_t>(e_weight) < 2 * static_cast<uint64_t>(d);
    return u_ok && e_ok;
}

TwoStageDecoder::TwoStageDecoder(const CssCode& c, size_t max_weight, uint64_t max_nodes)
    : code_(c),
      metacheck_(left_kernel(hstack({c.full_x(), c.full_z()}))),
      logicals_(logical_basis(c)),
      repair_(MinWeightSolver::from_matrices(metacheck_)),
      data_(pauli_solver(c, false)),
      coset_(pauli_solver(c, true)),
      max_weight_(max_weight),
      max_nodes_(max_nodes) {}

DecodeResult TwoStageDecoder::decode(const BitVector& noisy_syndrome) const {
    DecodeResult out{PauliError::identity(code_.n()), noisy_syndrome, 0, false};
    if (noisy_syndrome.size() != num_checks()) {
        throw ShapeError("syndrome has " + std::to_string(noisy_syndrome.size()) + " bits, expected " +
                         std::to_string(num_checks()));
    }
    if (metacheck_.rows() > 0) {
        SearchResult r = repair_.solve(metacheck_ * noisy_syndrome, max_weight_, false, max_nodes_);
        if (!r.columns) {
            return out;
        }
        out.repaired ^= BitVector::from_support(num_checks(), *r.columns);
        out.repair_weight = r.weight;
    }
    SearchResult r = data_.solve(out.repaired, max_weight_, false, max_nodes_);
    if (!r.columns) {
        return out;
    }
    out.recovery = pauli_from_columns(*r.columns, code_.n());
    out.ok = true;
    return out;
}

WeightBound TwoStageDecoder::coset_weight(const PauliError& e) const {
    return search_below(coset_, coset_target(code_, logicals_, e), e, max_weight_, max_nodes_);
}

bool TwoStageDecoder::is_nontrivial_logical(const PauliError& e) const {
    return syndrome(code_, e).none() && commutation_pattern(logicals_, e).any();
}

TrialOutcome single_shot_trial(const TwoStageDecoder& decoder, const PauliError& e, const BitVector& u,
                               const RegimeParams& regime) {
    TrialOutcome out;
    out.in_regime = regime.contains(u.weight(), e.weight());
    BitVector s = syndrome(decoder.code(), e).flat() ^ u;
    DecodeResult d = decoder.decode(s);
    out.decoded = d.ok;
    PauliError residual = d.ok ? d.recovery * e : e;
    WeightBound w = decoder.coset_weight(residual);
    out.residual = w.weight;
    out.residual_exact = w.exact;
    out.logical_fail = decoder.is_nontrivial_logical(residual);
    out.pass = d.ok && w.exact && regime.f.admits(2 * u.weight(), w.weight);
    return out;
}

}  // namespace forge
