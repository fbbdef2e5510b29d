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

#ifndef FORGE_SOUNDNESS_H
#define FORGE_SOUNDNESS_H

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "forge/css_code.h"
#include "forge/min_weight.h"

namespace forge {

/// A soundness function f, held as 4·f(x) so that every comparison is exact:
/// w <= f(x) iff 4w <= quarters(x).
struct SoundnessFunction {
    std::string name;
    std::function<uint64_t(size_t)> quarters;

    /// f(x) = x^2 / 4.
    static SoundnessFunction quarter_square();
    /// g(x) = x^3 / 4.
    static SoundnessFunction quarter_cube();
    /// "x2over4" or "x3over4"; throws ConfigError otherwise.
    static SoundnessFunction parse(std::string_view name);

    /// Largest integer w with w <= f(x).
    size_t floor_at(size_t x) const { return static_cast<size_t>(quarters(x) / 4); }
    bool admits(size_t x, size_t w) const { return 4 * static_cast<uint64_t>(w) <= quarters(x); }
    /// f(x) as a decimal string, e.g. "2.25".
    std::string format_at(size_t x) const;
};

/// Result of a bounded minimum-weight search for an error.
struct WeightBound {
    size_t weight = 0;
    /// False when `weight` is only a lower bound.
    bool exact = true;
    std::optional<PauliError> witness;
};

/// Smallest Pauli weight of an error with the same syndrome as e (the reduced
/// weight used in soundness). Searches weights below |e| up to `budget`.
WeightBound reduced_weight(const CssCode& c, const PauliError& e, size_t budget);

/// Smallest Pauli weight in the stabilizer coset of e. Exhausts the stabilizer
/// span when its rank is at most 20, otherwise searches by weight up to `budget`.
WeightBound coset_min_weight(const CssCode& c, const PauliError& e, size_t budget);

/// Per-weight summary of a scan.
struct SoundnessRow {
    size_t syndrome_weight = 0;
    /// Syndromes of this weight that lie in the image of the map.
    uint64_t syndromes = 0;
    /// Largest minimum-preimage weight among them.
    size_t max_reduced_weight = 0;
    bool exact = true;
    bool violated = false;
    /// A syndrome attaining `max_reduced_weight` and its preimage, if found.
    std::optional<BitVector> worst;
    std::optional<std::vector<size_t>> worst_preimage;
};

struct SoundnessViolation {
    BitVector syndrome;
    /// A minimum-weight preimage when one was found within the search cap.
    std::optional<std::vector<size_t>> preimage;
    size_t syndrome_weight = 0;
    /// Exact minimum preimage weight, or a lower bound when `exact` is false.
    size_t reduced_weight = 0;
    bool exact = true;
};

struct SoundnessReport {
    size_t t_scanned = 0;
    /// Length of the syndromes and number of solver columns of the scanned map.
    size_t syndrome_length = 0;
    size_t error_columns = 0;
    std::string f_name;
    std::vector<SoundnessRow> rows;
    std::vector<SoundnessViolation> violations;
    /// max over scanned syndromes of w / f(|s|), as an unreduced fraction (0/1 if none).
    uint64_t max_ratio_num = 0;
    uint64_t max_ratio_den = 1;
    /// True when the syndrome budget stopped the scan below the requested t.
    bool partial = false;

    bool clean() const { return violations.empty() && !partial; }
    /// CSV with columns syndrome_weight,max_reduced_weight,bound,violated.
    std::string csv(const SoundnessFunction& f) const;
};

struct ScanOptions {
    /// Extra weight searched above floor(f(x)) to report the exact maximum.
    size_t extra_weight = 2;
    uint64_t max_syndromes = uint64_t{1} << 26;
    uint64_t max_nodes = uint64_t{1} << 28;
    /// Keep at most this many violation examples.
    size_t max_examples = 16;
};

/// Checks f(|s|) >= min{|E| : M·E = s} for every s of weight 1..t in the image of M.
SoundnessReport soundness_scan(const BitMatrix& syndrome_map, size_t t, const SoundnessFunction& f,
                               const ScanOptions& options = {});
/// Same with Pauli weight over the syndrome map of a stabilizer code.
SoundnessReport soundness_scan(const CssCode& c, size_t t, const SoundnessFunction& f,
                               const ScanOptions& options = {});

/// Report for a direct sum of two maps acting on disjoint coordinates, where
/// weights add: the worst split of each total weight is combined per sector.
SoundnessReport combine_direct_sum(const SoundnessReport& a, const SoundnessReport& b, const SoundnessFunction& f);

/// Scans d, d x I_n and I_n x d. The base scan must be clean (ConfigError
/// otherwise); a violation in a product throws ValidationError.
std::vector<SoundnessReport> inheritance_check(const BitMatrix& d, size_t n, size_t t, const SoundnessFunction& f,
                                               const ScanOptions& options = {});

/// Parameters of the single-shot regime: |u| < p = min{d_s, t}/2 and
/// f(2|u|) + |e| < q = d/2.
struct RegimeParams {
    size_t d = 0;
    size_t d_s = 0;
    size_t t = 0;
    SoundnessFunction f = SoundnessFunction::quarter_square();

    bool contains(size_t u_weight, size_t e_weight) const;
};

struct DecodeResult {
    PauliError recovery;
    /// Syndrome after the repair stage.
    BitVector repaired;
    /// Weight of the syndrome correction chosen in the repair stage.
    size_t repair_weight = 0;
    /// False when either stage found nothing within its search cap.
    bool ok = false;
};

/// Two-stage decoder: (1) find a minimum-weight u' with M·u' = M·s for the
/// metacheck M (the joint left kernel of the stabilizer matrix, so M·s = 0
/// exactly on valid syndromes); (2) find a minimum-weight Pauli with the
/// repaired syndrome. Syndromes are flat vectors as in `Syndrome::flat`.
class TwoStageDecoder {
   public:
    explicit TwoStageDecoder(const CssCode& c, size_t max_weight = 6, uint64_t max_nodes = uint64_t{1} << 26);

    DecodeResult decode(const BitVector& noisy_syndrome) const;
    const CssCode& code() const { return code_; }
    const BitMatrix& metacheck() const { return metacheck_; }
    size_t num_checks() const { return code_.num_checks(); }
    /// Stabilizer-coset minimum weight of e (searches up to max_weight).
    WeightBound coset_weight(const PauliError& e) const;
    /// e commutes with every stabilizer and is not in the stabilizer group.
    bool is_nontrivial_logical(const PauliError& e) const;

   private:
    CssCode code_;
    BitMatrix metacheck_;
    std::vector<PauliError> logicals_;
    MinWeightSolver repair_;
    MinWeightSolver data_;
    MinWeightSolver coset_;
    size_t max_weight_;
    uint64_t max_nodes_;
};

struct TrialOutcome {
    size_t residual = 0;
    bool residual_exact = true;
    bool pass = false;
    bool in_regime = false;
    bool logical_fail = false;
    bool decoded = false;
};

/// Decodes s = σ(e) + u and checks the residual: pass iff its coset-minimum
/// weight is at most f(2|u|). Out-of-regime trials are still decoded and
/// flagged, never counted as failures of the bound.
TrialOutcome single_shot_trial(const TwoStageDecoder& decoder, const PauliError& e, const BitVector& u,
                               const RegimeParams& regime);

}  // namespace forge

#endif
