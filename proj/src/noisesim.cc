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

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "forge/errors.h"

namespace forge {

namespace {

constexpr uint64_t kGamma = 0x9e3779b97f4a7c15ull;

uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

bool in_unit(double v) { return v >= 0 && v <= 1; }

}  // namespace

SplitMix64 SplitMix64::for_trial(uint64_t seed, uint64_t trial) {
    return SplitMix64(mix(seed + kGamma) ^ mix(trial * kGamma + 1));
}

SplitMix64::result_type SplitMix64::operator()() {
    state_ += kGamma;
    return mix(state_);
}

double SplitMix64::uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

NoiseModel NoiseModel::depolarizing(double p, double q_meas) { return {p, p / 3, p / 3, p / 3, q_meas}; }

NoiseModel NoiseModel::z_biased(double p, double eta, double q_meas) {
    if (std::isinf(eta)) {
        return {p, 0, 0, p, q_meas};
    }
    if (!(eta >= 0)) {
        throw ConfigError("bias must be nonnegative");
    }
    double side = p / (2 * (eta + 1));
    return {p, side, side, p - 2 * side, q_meas};
}

void NoiseModel::validate() const {
    for (double v : {p, px, py, pz, q_meas}) {
        if (!in_unit(v)) {
            throw ConfigError("noise probabilities must lie in [0,1]");
        }
    }
    if (std::abs(px + py + pz - p) > 1e-12) {
        throw ConfigError("px + py + pz must equal p");
    }
}

double NoiseModel::bias(char pauli) const {
    double mine = pauli == 'X' ? px : pauli == 'Y' ? py : pz;
    double rest = px + py + pz - mine;
    if (rest == 0) {
        return std::numeric_limits<double>::infinity();
    }
    return mine / rest;
}

PauliError sample_error(const NoiseModel& model, size_t n, SplitMix64& rng) {
    PauliError e = PauliError::identity(n);
    for (size_t q = 0; q < n; q++) {
        double r = rng.uniform();
        if (r < model.px) {
            e.ex.set(q);
        } else if (r < model.px + model.py) {
            e.ex.set(q);
            e.ez.set(q);
        } else if (r < model.px + model.py + model.pz) {
            e.ez.set(q);
        }
    }
    return e;
}

BitVector sample_flips(double q, size_t m, SplitMix64& rng) {
    BitVector u(m);
    for (size_t i = 0; i < m; i++) {
        if (rng.uniform() < q) {
            u.set(i);
        }
    }
    return u;
}

std::pair<double, double> wilson_interval(uint64_t k, uint64_t n) {
    if (n == 0) {
        return {0, 1};
    }
    constexpr double z = 1.959963984540054;
    double nn = static_cast<double>(n), phat = static_cast<double>(k) / nn;
    double denom = 1 + z * z / nn;
    double center = (phat + z * z / (2 * nn)) / denom;
    double half = z * std::sqrt(phat * (1 - phat) / nn + z * z / (4 * nn * nn)) / denom;
    // The interval touches 0 (or 1) exactly when no (or every) trial succeeded.
    return {k == 0 ? 0.0 : center - half, k == n ? 1.0 : center + half};
}

ExperimentResult run_experiment(const CssCode& code, const NoiseModel& model, const ExperimentOptions& options) {
    model.validate();
    if (model.q_meas > 0 && !(code.hsx || code.hsz)) {
        throw ConfigError("measurement noise needs syndrome checks (hsx/hsz), but the code has none");
    }
    TwoStageDecoder decoder(code, options.max_weight, options.max_nodes);
    ExperimentResult out;
    out.records.resize(options.trials);
    size_t threads = std::max<size_t>(1, std::min<uint64_t>(options.threads, std::max<uint64_t>(1, options.trials)));
    auto work = [&](size_t tid) {
        for (uint64_t i = tid; i < options.trials; i += threads) {
            SplitMix64 rng = SplitMix64::for_trial(options.seed, i);
            PauliError e = sample_error(model, code.n(), rng);
            BitVector u = sample_flips(model.q_meas, code.num_checks(), rng);
            TrialOutcome t = single_shot_trial(decoder, e, u, options.regime);
            out.records[i] = {i,         e.ex.weight(),  e.ez.weight(), u.weight(), t.residual, t.residual_exact,
                              t.logical_fail, t.in_regime, t.pass};
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (size_t tid = 0; tid < threads; tid++) {
            pool.emplace_back(work, tid);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    ExperimentSummary& s = out.summary;
    s.trials = options.trials;
    for (const auto& r : out.records) {
        s.in_regime += r.in_regime;
        s.in_regime_pass += r.in_regime && r.pass;
        s.logical_failures += r.logical_fail;
        s.max_residual = std::max(s.max_residual, r.residual);
    }
    s.failure_rate = s.trials ? static_cast<double>(s.logical_failures) / static_cast<double>(s.trials) : 0;
    std::tie(s.ci_low, s.ci_high) = wilson_interval(s.logical_failures, s.trials);
    return out;
}

std::string records_csv(const std::vector<TrialRecord>& records) {
    std::ostringstream out;
    out << "trial,ex_weight,ez_weight,u_weight,residual,logical_fail,in_regime\n";
    for (const auto& r : records) {
        out << r.trial << ',' << r.ex_weight << ',' << r.ez_weight << ',' << r.u_weight << ','
            << (r.residual_exact ? "" : ">=") << r.residual << ',' << int(r.logical_fail) << ',' << int(r.in_regime)
            << '\n';
    }
    return out.str();
}

}  // namespace forge
