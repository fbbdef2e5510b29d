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

#ifndef FORGE_NOISESIM_H
#define FORGE_NOISESIM_H

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "forge/css_code.h"
#include "forge/soundness.h"

namespace forge {

/// SplitMix64 used as a counter-based generator: output i of stream k is a
/// fixed mix of (k, i), so trial streams can be regenerated independently.
class SplitMix64 {
   public:
    using result_type = uint64_t;

    explicit SplitMix64(uint64_t key) : state_(key) {}
    /// Stream for one trial of a seeded run.
    static SplitMix64 for_trial(uint64_t seed, uint64_t trial);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<uint64_t>::max(); }
    result_type operator()();
    /// Uniform double in [0, 1) from the top 53 bits.
    double uniform();

   private:
    uint64_t state_;
};

/// Independent single-qubit Pauli channel plus i.i.d. flips of each measured
/// check outcome.
struct NoiseModel {
    double p = 0;
    double px = 0;
    double py = 0;
    double pz = 0;
    double q_meas = 0;

    static NoiseModel depolarizing(double p, double q_meas = 0);
    /// Z-biased channel with px = py and eta_Z = pz / (px + py); eta may be infinite.
    static NoiseModel z_biased(double p, double eta, double q_meas = 0);

    /// Throws ConfigError unless every rate is in [0,1] and px+py+pz = p.
    void validate() const;
    /// eta_i = p_i / (sum of the other two); infinite when they vanish. i in {'X','Y','Z'}.
    double bias(char pauli) const;
};

PauliError sample_error(const NoiseModel& model, size_t n, SplitMix64& rng);
BitVector sample_flips(double q, size_t m, SplitMix64& rng);

struct TrialRecord {
    uint64_t trial = 0;
    size_t ex_weight = 0;
    size_t ez_weight = 0;
    size_t u_weight = 0;
    size_t residual = 0;
    bool residual_exact = true;
    bool logical_fail = false;
    bool in_regime = false;
    bool pass = false;
};

struct ExperimentOptions {
    uint64_t trials = 1000;
    uint64_t seed = 0;
    size_t threads = 1;
    RegimeParams regime;
    /// Search cap of both decoder stages.
    size_t max_weight = 6;
    /// Node budget per search; residuals left undecided are reported as lower bounds.
    uint64_t max_nodes = uint64_t{1} << 20;
};

struct ExperimentSummary {
    uint64_t trials = 0;
    uint64_t in_regime = 0;
    uint64_t in_regime_pass = 0;
    uint64_t logical_failures = 0;
    double failure_rate = 0;
    /// 95% Wilson score interval of the logical failure rate.
    double ci_low = 0;
    double ci_high = 0;
    size_t max_residual = 0;
};

struct ExperimentResult {
    ExperimentSummary summary;
    /// In trial order regardless of thread count.
    std::vector<TrialRecord> records;
};

/// Runs `trials` independent decoding rounds. Deterministic in (seed, trials):
/// trial i draws from SplitMix64::for_trial(seed, i). Throws ConfigError if
/// q_meas > 0 and the code has no syndrome checks.
ExperimentResult run_experiment(const CssCode& code, const NoiseModel& model, const ExperimentOptions& options);

/// 95% Wilson score interval for k successes in n trials.
std::pair<double, double> wilson_interval(uint64_t k, uint64_t n);

/// CSV with header trial,ex_weight,ez_weight,u_weight,residual,logical_fail,in_regime.
std::string records_csv(const std::vector<TrialRecord>& records);

}  // namespace forge

#endif
