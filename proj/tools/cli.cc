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

#include "cli.h"

#include <cmath>
#include <filesystem>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "forge/bundle.h"
#include "forge/classical_code.h"
#include "forge/constructions.h"
#include "forge/errors.h"
#include "forge/matrix_io.h"
#include "forge/noisesim.h"
#include "forge/soundness.h"
#include "json.hpp"

namespace forge::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

/// Everything a subcommand needs beyond its own flags.
struct Context {
    std::string command_line;
    std::string config_path;
    uint64_t seed = 0;
    size_t threads = 1;
    std::ostream* out = nullptr;
};

std::string hex64(uint64_t v) {
    std::ostringstream s;
    s << std::hex << std::setw(16) << std::setfill('0') << v;
    return s.str();
}

std::string digest_file(const fs::path& p) { return hex64(fnv1a(read_text_file(p))); }

/// Writes `path` as the run manifest of a command that read `inputs` and wrote `outputs`.
void write_run_manifest(const Context& ctx, const fs::path& path, const std::vector<fs::path>& inputs,
                        const std::vector<fs::path>& outputs) {
    json in = json::object();
    for (const auto& p : inputs) {
        in[p.string()] = digest_file(p);
    }
    json outs = json::array(), out_digests = json::object();
    for (const auto& p : outputs) {
        outs.push_back(p.string());
        out_digests[p.string()] = digest_file(p);
    }
    json m = {{"command_line", ctx.command_line},
              {"config_hash", ctx.config_path.empty() ? "none" : digest_file(ctx.config_path)},
              {"version", kVersion},
              {"seed", ctx.seed},
              {"inputs", in},
              {"outputs", outs},
              {"output_digests", out_digests}};
    write_text_file(path, m.dump(2) + "\n");
}

std::vector<fs::path> bundle_files(const fs::path& dir) {
    return {dir / "hx.alist", dir / "hz.alist", dir / "hsx.alist", dir / "hsz.alist", dir / "manifest.json"};
}

/// rep:N (ring), rep-open:N (line), hamming, or alist:PATH.
ClassicalCode parse_base(const std::string& base) {
    auto number = [&](size_t prefix) {
        try {
            size_t used = 0;
            long v = std::stol(base.substr(prefix), &used);
            if (used != base.size() - prefix || v < 2) {
                throw ConfigError("");
            }
            return static_cast<size_t>(v);
        } catch (const std::exception&) {
            throw ConfigError("bad base code '" + base + "': the length must be an integer >= 2");
        }
    };
    if (base.rfind("rep:", 0) == 0) {
        return repetition_closed_loop(number(4));
    }
    if (base.rfind("rep-open:", 0) == 0) {
        return repetition_open(number(9));
    }
    if (base == "hamming") {
        return hamming_7_4();
    }
    if (base.rfind("alist:", 0) == 0) {
        return ClassicalCode(load_alist(base.substr(6)), base.substr(6));
    }
    throw ConfigError("bad base code '" + base + "' (expected rep:N, rep-open:N, hamming or alist:PATH)");
}

json distance_json(const Distance& d) {
    json j = {{"kind", d.is_exact() ? "exact" : d.is_undefined() ? "undefined" : "lower_bound"}, {"value", d.value}};
    if (d.upper_bound) {
        j["upper_bound"] = *d.upper_bound;
    }
    j["text"] = d.str();
    return j;
}

/// Distance, or "undefined" when the code encodes nothing.
Distance distance_or_undefined(const CssCode& c, DistanceKind kind, size_t max_weight) {
    try {
        return distance(c, kind, max_weight);
    } catch (const NoLogicalsError&) {
        return Distance::undefined();
    }
}

/// Largest weight known to be at most the true distance.
size_t conservative(const Distance& d) { return d.is_exact() ? d.value : d.value + 1; }

int cmd_build(const Context& ctx, const std::string& family, const std::string& base, const fs::path& out_dir,
              size_t max_weight) {
    std::optional<Family> f = parse_family(family);
    if (!f) {
        throw ConfigError("unknown family '" + family + "'");
    }
    BlockTaggedCss t = build_family(*f, parse_base(base));
    json meta = t.metadata;
    meta["base"] = base;
    json measured = {{"n", t.css.n()}, {"checks", t.css.num_checks()}, {"k", logical_count(t.css)}};
    if (max_weight > 0) {
        measured["d"] = distance_json(distance_or_undefined(t.css, DistanceKind::kFull, max_weight));
    }
    meta["measured"] = measured;
    save_bundle(out_dir, t.css, meta);
    std::vector<fs::path> inputs;
    if (base.rfind("alist:", 0) == 0) {
        inputs.push_back(base.substr(6));
    }
    write_run_manifest(ctx, out_dir / "run_manifest.json", inputs, bundle_files(out_dir));
    const json& fm = meta["formula"];
    *ctx.out << "built " << family << ": n=" << measured["n"] << " checks=" << measured["checks"]
             << " k=" << measured["k"];
    if (measured.contains("d")) {
        *ctx.out << " d=" << measured["d"]["text"].get<std::string>();
    }
    if (fm.is_object()) {
        std::string d = !fm.contains("d") ? "?" : fm["d"].is_string() ? fm["d"].get<std::string>() : fm["d"].dump();
        *ctx.out << " (formula [[" << fm["n"] << "," << fm["k"] << "," << d << "]])";
    }
    *ctx.out << "\n";
    return 0;
}

int cmd_params(const Context& ctx, const fs::path& code_dir, size_t max_weight) {
    Bundle b = load_bundle(code_dir);
    const CssCode& c = b.code;
    json j = {{"n", c.n()}, {"checks", c.num_checks()}, {"k", logical_count(c)}, {"max_weight", max_weight}};
    if (c.form == CheckForm::kCss) {
        Distance dx = distance_or_undefined(c, DistanceKind::kX, max_weight);
        Distance dz = distance_or_undefined(c, DistanceKind::kZ, max_weight);
        j["dX"] = distance_json(dx);
        j["dZ"] = distance_json(dz);
    }
    j["d"] = distance_json(distance_or_undefined(c, DistanceKind::kFull, max_weight));
    *ctx.out << j.dump(2) << "\n";
    return 0;
}

int cmd_verify(const Context& ctx, const fs::path& code_dir) {
    Bundle b = load_bundle(code_dir);
    const json& m = b.manifest;
    std::string family = m.value("family", "");
    if (m.contains("block_map") && parse_family(family)) {
        validate_tagged(tagged_from_block_map(b.code, *parse_family(family), m["block_map"]));
    } else {
        validate_css(b.code);
    }
    json measured = {{"n", b.code.n()}, {"checks", b.code.num_checks()}, {"k", logical_count(b.code)}};
    for (const char* key : {"n", "checks"}) {
        if (m.contains(key) && m[key] != measured[key]) {
            throw ValidationError(std::string("parameter identity failed: ") + key + " = " + measured[key].dump() +
                                  " but the manifest records " + m[key].dump());
        }
    }
    const json& f = m.contains("formula") ? m["formula"] : json();
    bool checked = f.is_object() && f.value("guaranteed", false);
    if (checked) {
        for (const char* key : {"n", "checks", "k"}) {
            if (f.contains(key) && f[key].is_number() && f[key] != measured[key]) {
                throw ValidationError(std::string("parameter identity failed: ") + key + " = " +
                                      measured[key].dump() + " but the " + family + " formula gives " +
                                      f[key].dump());
            }
        }
    }
    *ctx.out << "ok: " << (family.empty() ? "code" : family) << " n=" << measured["n"]
             << " checks=" << measured["checks"] << " k=" << measured["k"]
             << (checked ? " (formula identities hold)" : "") << "\n";
    return 0;
}

int cmd_soundness(const Context& ctx, const fs::path& code_dir, size_t t, const std::string& fname,
                  const fs::path& report, const std::string& map, uint64_t max_syndromes) {
    Bundle b = load_bundle(code_dir);
    SoundnessFunction f = SoundnessFunction::parse(fname);
    ScanOptions opt;
    opt.max_syndromes = max_syndromes;
    SoundnessReport r;
    if (map == "pauli") {
        r = soundness_scan(b.code, t, f, opt);
    } else {
        const std::optional<BitMatrix> m = map == "hx"    ? std::optional<BitMatrix>(b.code.hx)
                                           : map == "hz"  ? std::optional<BitMatrix>(b.code.hz)
                                           : map == "hsx" ? b.code.hsx
                                                          : b.code.hsz;
        if (!m) {
            throw ConfigError("the code has no " + map + " matrix");
        }
        r = soundness_scan(*m, t, f, opt);
    }
    if (report.has_parent_path()) {
        fs::create_directories(report.parent_path());
    }
    write_text_file(report, r.csv(f));
    std::vector<fs::path> inputs = bundle_files(code_dir);
    write_run_manifest(ctx, report.string() + ".manifest.json", inputs, {report});
    if (!r.violations.empty()) {
        const SoundnessViolation& v = r.violations.front();
        throw ValidationError("soundness violated: syndrome weight " + std::to_string(v.syndrome_weight) +
                              " needs reduced weight " + (v.exact ? "" : ">=") + std::to_string(v.reduced_weight) +
                              " > " + f.name + "(" + std::to_string(v.syndrome_weight) +
                              ") = " + f.format_at(v.syndrome_weight));
    }
    if (r.partial) {
        throw ValidationError("soundness scan incomplete: budget reached at syndrome weight " +
                              std::to_string(r.t_scanned + 1));
    }
    *ctx.out << "sound: t=" << t << " f=" << f.name << " map=" << map << " max_ratio=" << r.max_ratio_num << "/"
             << r.max_ratio_den << "\n";
    return 0;
}

NoiseModel parse_noise(double p, const std::string& bias, double q_meas) {
    if (bias.empty() || bias == "depolarizing") {
        return NoiseModel::depolarizing(p, q_meas);
    }
    if (bias.rfind("etaZ:", 0) != 0) {
        throw ConfigError("bad bias '" + bias + "' (expected etaZ:F, etaZ:inf or depolarizing)");
    }
    std::string v = bias.substr(5);
    double eta = 0;
    if (v == "inf") {
        eta = INFINITY;
    } else {
        try {
            eta = std::stod(v);
        } catch (const std::exception&) {
            throw ConfigError("bad bias value '" + v + "'");
        }
    }
    return NoiseModel::z_biased(p, eta, q_meas);
}

struct SimulateArgs {
    fs::path code;
    double p = 0;
    std::string bias;
    double q_meas = 0;
    uint64_t trials = 1000;
    fs::path out = "results.csv";
    size_t d = 0;
    size_t d_s = 0;
    size_t t = 2;
    size_t max_weight = 6;
    size_t regime_search = 3;
};

int cmd_simulate(const Context& ctx, const SimulateArgs& a) {
    Bundle b = load_bundle(a.code);
    NoiseModel model = parse_noise(a.p, a.bias, a.q_meas);
    ExperimentOptions opt;
    opt.trials = a.trials;
    opt.seed = ctx.seed;
    opt.threads = ctx.threads;
    opt.max_weight = a.max_weight;
    // Unset regime parameters are measured by bounded search; a lower bound
    // only shrinks the regime, so the check stays conservative.
    size_t d = a.d ? a.d : conservative(distance_or_undefined(b.code, DistanceKind::kFull, a.regime_search));
    size_t d_s = a.d_s;
    if (!d_s) {
        d_s = a.t;
        for (const auto& h : {b.code.hsx, b.code.hsz}) {
            if (h) {
                d_s = std::min(d_s, conservative(classical_distance(*h, a.regime_search)));
            }
        }
    }
    opt.regime = {d, d_s, a.t, SoundnessFunction::quarter_square()};
    ExperimentResult r = run_experiment(b.code, model, opt);
    if (a.out.has_parent_path()) {
        fs::create_directories(a.out.parent_path());
    }
    write_text_file(a.out, records_csv(r.records));
    write_run_manifest(ctx, a.out.string() + ".manifest.json", bundle_files(a.code), {a.out});
    const ExperimentSummary& s = r.summary;
    json j = {{"trials", s.trials},
              {"logical_failures", s.logical_failures},
              {"failure_rate", s.failure_rate},
              {"ci95", {s.ci_low, s.ci_high}},
              {"in_regime", s.in_regime},
              {"in_regime_pass", s.in_regime_pass},
              {"max_residual", s.max_residual},
              {"regime", {{"d", d}, {"d_s", d_s}, {"t", a.t}}}};
    *ctx.out << j.dump() << "\n";
    return 0;
}

int cmd_export(const Context& ctx, const fs::path& code_dir, const fs::path& out_dir, const std::string& format) {
    Bundle b = load_bundle(code_dir);
    std::vector<fs::path> outputs;
    if (format == "alist") {
        save_bundle(out_dir, b.code, b.manifest);
        outputs = bundle_files(out_dir);
    } else if (format == "dense") {
        fs::create_directories(out_dir);
        auto put = [&](const std::string& name, const BitMatrix& m) {
            write_text_file(out_dir / (name + ".txt"), to_dense(m));
            outputs.push_back(out_dir / (name + ".txt"));
        };
        put("hx", b.code.hx);
        put("hz", b.code.hz);
        if (b.code.hsx) {
            put("hsx", *b.code.hsx);
        }
        if (b.code.hsz) {
            put("hsz", *b.code.hsz);
        }
        write_text_file(out_dir / "manifest.json", b.manifest.dump(2) + "\n");
        outputs.push_back(out_dir / "manifest.json");
    } else {
        throw ConfigError("unknown export format '" + format + "' (expected alist or dense)");
    }
    write_run_manifest(ctx, out_dir / "run_manifest.json", bundle_files(code_dir), outputs);
    *ctx.out << "exported " << outputs.size() << " files to " << out_dir.string() << "\n";
    return 0;
}

}  // namespace

uint64_t fnv1a(std::string_view data) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h = (h ^ c) * 0x100000001b3ull;
    }
    return h;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Construct, verify and simulate syndrome-encoded product codes.", "forge"};
    app.set_version_flag("--version", std::string("forge ") + kVersion);
    app.set_config("--config", "", "key=value file of defaults; subcommand keys as command.key=value");
    app.require_subcommand(1);
    app.fallthrough();
    Context ctx;
    ctx.out = &out;
    app.add_option("--seed", ctx.seed, "Random seed")->capture_default_str();
    app.add_option("--threads", ctx.threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();

    std::string family, base;
    fs::path code_dir, out_dir, report;
    size_t max_weight = 0, t = 2;
    std::string fname = "x2over4", map = "pauli", format = "alist";
    uint64_t max_syndromes = uint64_t{1} << 26;
    SimulateArgs sim;

    auto* build = app.add_subcommand("build", "Build a code family and write its alist bundle");
    build->add_option("--family", family, "hgp|sehgp|bsh|ssh|bssh|rsh1|rsh2|brsh1|brsh2|xzzx3d")->required();
    build->add_option("--base", base, "rep:N | rep-open:N | hamming | alist:PATH")->required();
    build->add_option("--out", out_dir, "Output directory")->required();
    build->add_option("--max-weight", max_weight, "Also search the distance up to this weight (0 = skip)");

    auto* params = app.add_subcommand("params", "Report n, k and a bounded distance search");
    params->add_option("--code", code_dir, "Bundle directory")->required();
    size_t params_weight = 4;
    params->add_option("--max-weight", params_weight, "Largest weight searched")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Check commutation, block structure and parameter identities");
    verify->add_option("--code", code_dir, "Bundle directory")->required();

    auto* sound = app.add_subcommand("soundness", "Exhaustive soundness scan up to syndrome weight t");
    sound->add_option("--code", code_dir, "Bundle directory")->required();
    sound->add_option("--t", t, "Largest syndrome weight")->capture_default_str();
    sound->add_option("--f", fname, "x2over4 | x3over4")->capture_default_str();
    sound->add_option("--report", report, "CSV report path")->required();
    sound->add_option("--map", map, "pauli | hx | hz | hsx | hsz")
        ->check(CLI::IsMember({"pauli", "hx", "hz", "hsx", "hsz"}))
        ->capture_default_str();
    sound->add_option("--max-syndromes", max_syndromes, "Syndrome budget")->capture_default_str();

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo single-shot decoding experiment");
    simulate->add_option("--code", sim.code, "Bundle directory")->required();
    simulate->add_option("--p", sim.p, "Physical error rate")->required();
    simulate->add_option("--bias", sim.bias, "etaZ:F, etaZ:inf or depolarizing");
    simulate->add_option("--qmeas", sim.q_meas, "Measurement flip rate")->capture_default_str();
    simulate->add_option("--trials", sim.trials, "Number of trials")->capture_default_str();
    simulate->add_option("--out", sim.out, "CSV output path")->capture_default_str();
    simulate->add_option("--d", sim.d, "Regime distance (0 = measure)");
    simulate->add_option("--ds", sim.d_s, "Regime single-shot distance (0 = measure)");
    simulate->add_option("--t", sim.t, "Regime soundness range")->capture_default_str();
    simulate->add_option("--max-weight", sim.max_weight, "Decoder search cap")->capture_default_str();

    auto* exp = app.add_subcommand("export", "Rewrite a bundle as alist or dense text");
    exp->add_option("--code", code_dir, "Bundle directory")->required();
    exp->add_option("--out", out_dir, "Output directory")->required();
    exp->add_option("--format", format, "alist | dense")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e, out, err);
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }
    for (int i = 0; i < argc; i++) {
        ctx.command_line += (i ? " " : "") + std::string(argv[i]);
    }
    if (auto* opt = app.get_config_ptr(); opt && opt->count() > 0) {
        ctx.config_path = opt->as<std::string>();
    }
    try {
        if (*build) {
            return cmd_build(ctx, family, base, out_dir, max_weight);
        }
        if (*params) {
            return cmd_params(ctx, code_dir, params_weight);
        }
        if (*verify) {
            return cmd_verify(ctx, code_dir);
        }
        if (*sound) {
            return cmd_soundness(ctx, code_dir, t, fname, report, map, max_syndromes);
        }
        if (*simulate) {
            return cmd_simulate(ctx, sim);
        }
        return cmd_export(ctx, code_dir, out_dir, format);
    } catch (const std::exception& e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        err << "error: " << msg << "\n";
        return 1;
    }
}

}  // namespace forge::cli
