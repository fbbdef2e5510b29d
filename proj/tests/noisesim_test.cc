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

#include "forge/noisesim.h"

#include <gtest/gtest.h>

#include <cmath>

#include "forge/classical_code.h"
#include "forge/constructions.h"
#include "forge/errors.h"

using namespace forge;

namespace {

const BlockTaggedCss& bsh_rep(size_t n) {
    static std::map<size_t, BlockTaggedCss> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        ClassicalCode r = repetition_closed_loop(n);
        it = cache.emplace(n, bsh(sehgp(r, r, r, r))).first;
    }
    return it->second;
}

}  // namespace

TEST(split_mix, streams_are_reproducible_and_distinct) {
    SplitMix64 a = SplitMix64::for_trial(5, 3), b = SplitMix64::for_trial(5, 3), c = SplitMix64::for_trial(5, 4);
    uint64_t x = a(), y = b(), z = c();
    EXPECT_EQ(x, y);
    EXPECT_NE(x, z);
    for (int i = 0; i < 1000; i++) {
        double u = a.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
}

TEST(noise_model, validation_and_bias) {
    EXPECT_NO_THROW(NoiseModel::depolarizing(0.3).validate());
    EXPECT_THROW((NoiseModel{0.1, 0.1, 0.1, 0.1, 0}).validate(), ConfigError);
    EXPECT_THROW((NoiseModel{1.5, 0.5, 0.5, 0.5, 0}).validate(), ConfigError);
    EXPECT_THROW(NoiseModel::depolarizing(0.1, -0.1).validate(), ConfigError);
    EXPECT_DOUBLE_EQ(NoiseModel::depolarizing(0.3).bias('Z'), 0.5);
    NoiseModel m = NoiseModel::z_biased(0.3, 10);
    EXPECT_NEAR(m.bias('Z'), 10, 1e-9);
    EXPECT_DOUBLE_EQ(m.px, m.py);
    EXPECT_TRUE(std::isinf(NoiseModel::z_biased(0.3, INFINITY).bias('Z')));
}

TEST(sample_error, zero_rate_is_identity) {
    SplitMix64 rng(1);
    EXPECT_TRUE(sample_error(NoiseModel::depolarizing(0), 500, rng).is_identity());
}

TEST(sample_error, infinite_z_bias_has_no_x_part) {
    SplitMix64 rng(2);
    NoiseModel m = NoiseModel::z_biased(0.4, INFINITY);
    size_t zs = 0;
    for (int i = 0; i < 50; i++) {
        PauliError e = sample_error(m, 200, rng);
        EXPECT_TRUE(e.ex.none());
        zs += e.ez.weight();
    }
    EXPECT_GT(zs, 0u);
}

TEST(sample_error, depolarizing_rates_within_three_sigma) {
    SplitMix64 rng(3);
    const size_t n = 10000;
    PauliError e = sample_error(NoiseModel::depolarizing(0.1), n, rng);
    size_t x = 0, y = 0, z = 0;
    for (size_t q = 0; q < n; q++) {
        bool a = e.ex.get(q), b = e.ez.get(q);
        x += a && !b;
        y += a && b;
        z += !a && b;
    }
    double mean = n * 0.1 / 3, sigma = std::sqrt(n * (0.1 / 3) * (1 - 0.1 / 3));
    for (size_t c : {x, y, z}) {
        EXPECT_LT(std::abs(static_cast<double>(c) - mean), 3 * sigma);
    }
}

TEST(wilson_interval, known_values) {
    auto [lo, hi] = wilson_interval(0, 100);
    EXPECT_DOUBLE_EQ(lo, 0);
    EXPECT_NEAR(hi, 0.03699, 1e-4);
    auto [lo2, hi2] = wilson_interval(50, 100);
    EXPECT_NEAR(lo2, 0.4038, 1e-3);
    EXPECT_NEAR(hi2, 0.5962, 1e-3);
}

TEST(run_experiment, zero_noise_never_fails) {
    const CssCode& c = bsh_rep(2).css;
    ExperimentOptions opt;
    opt.trials = 20;
    opt.regime = {3, 2, 2, SoundnessFunction::quarter_square()};
    ExperimentResult r = run_experiment(c, NoiseModel::depolarizing(0), opt);
    EXPECT_EQ(r.summary.logical_failures, 0u);
    EXPECT_EQ(r.summary.in_regime, 20u);
    EXPECT_EQ(r.summary.in_regime_pass, 20u);
    EXPECT_EQ(r.summary.max_residual, 0u);
}

TEST(run_experiment, deterministic_across_thread_counts) {
    const CssCode& c = bsh_rep(2).css;
    ExperimentOptions opt;
    opt.trials = 40;
    opt.seed = 99;
    opt.regime = {3, 2, 2, SoundnessFunction::quarter_square()};
    NoiseModel m = NoiseModel::depolarizing(0.02, 0.01);
    std::string one = records_csv(run_experiment(c, m, opt).records);
    opt.threads = 4;
    std::string four = records_csv(run_experiment(c, m, opt).records);
    EXPECT_EQ(one, four);
    EXPECT_EQ(one.substr(0, one.find('\n')), "trial,ex_weight,ez_weight,u_weight,residual,logical_fail,in_regime");
    opt.seed = 100;
    EXPECT_NE(records_csv(run_experiment(c, m, opt).records), one);
}

TEST(run_experiment, measurement_noise_needs_syndrome_checks) {
    CssCode c = hgp(repetition_closed_loop(3).h(), repetition_closed_loop(3).h()).css;
    ExperimentOptions opt;
    opt.trials = 1;
    EXPECT_THROW(run_experiment(c, NoiseModel::depolarizing(0.1, 0.1), opt), ConfigError);
    EXPECT_NO_THROW(run_experiment(c, NoiseModel::depolarizing(0.1, 0), opt));
}

TEST(single_shot, bsh_rep3_corrects_every_weight_one_error) {
    const CssCode& c = bsh_rep(3).css;
    TwoStageDecoder dec(c);
    RegimeParams regime{3, 4, 3, SoundnessFunction::quarter_square()};
    BitVector u(c.num_checks());
    size_t failures = 0;
    for (size_t q = 0; q < c.n(); q++) {
        for (int kind = 0; kind < 3; kind++) {
            PauliError e = PauliError::identity(c.n());
            if (kind != 1) {
                e.ex.set(q);
            }
            if (kind != 0) {
                e.ez.set(q);
            }
            TrialOutcome t = single_shot_trial(dec, e, u, regime);
            failures += !(t.pass && t.residual == 0 && !t.logical_fail);
        }
    }
    EXPECT_EQ(failures, 0u);
}

TEST(single_shot, bsh_rep2_single_flips_leave_small_residual) {
    const CssCode& c = bsh_rep(2).css;
    TwoStageDecoder dec(c);
    RegimeParams regime{4, 4, 3, SoundnessFunction::quarter_square()};
    PauliError e = PauliError::identity(c.n());
    for (size_t i = 0; i < c.num_checks(); i++) {
        BitVector u = BitVector::from_support(c.num_checks(), {i});
        TrialOutcome t = single_shot_trial(dec, e, u, regime);
        ASSERT_TRUE(t.in_regime);
        EXPECT_LE(t.residual, 1u) << "flip " << i;
        EXPECT_TRUE(t.pass);
    }
}

TEST(bias_decoupling, z_only_noise_lights_only_x_checks) {
    const BlockTaggedCss& code = bsh_rep(2);
    BitMatrix fx = code.css.full_x();
    SplitMix64 rng(4);
    NoiseModel m = NoiseModel::z_biased(0.2, INFINITY);
    for (int i = 0; i < 20; i++) {
        PauliError e = sample_error(m, code.css.n(), rng);
        BitVector s = syndrome(code.css, e).flat();
        for (size_t r : s.support()) {
            EXPECT_TRUE(fx.row(r).any()) << "check " << r << " has no X part";
        }
    }
}
