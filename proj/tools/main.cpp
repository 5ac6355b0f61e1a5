// SPDX-License-Identifier: Apache-2.0
//
// twrnoma - performance analysis of two-way relay NOMA systems
// Copyright (C) 2026 The twrnoma Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "twrnoma/cli/config_io.hpp"
#include "twrnoma/cli/presets.hpp"
#include "twrnoma/cli/sweep.hpp"
#include "twrnoma/cli/validation.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

namespace {

namespace cli = twrnoma::cli;

constexpr int kOk = 0;
constexpr int kConfigError = 1;
constexpr int kValidateFailed = 2;

struct Args {
    std::string config_path;
    std::string preset;
    std::optional<std::string> metric;
    std::optional<std::string> signals;
    std::optional<std::string> mode;
    std::optional<std::string> snr;
    std::optional<std::uint64_t> iterations;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> workers;
    std::optional<std::string> out;
    bool with_oma = false;
    bool with_asymptotic = false;
    bool emit_plot = false;
    bool crn = false;
    bool print_default = false;
    std::string profile = "default";
    std::vector<int> checks;
};

cli::LoadedConfig base_config(const Args& a)
{
    if (a.config_path.empty())
        return {twrnoma::SystemConfig::reference(), 20.0};
    return cli::load_config(a.config_path);
}

void apply_overrides(const Args& a, cli::SweepSpec& spec)
{
    if (a.metric)
        spec.metric = cli::parse_metric(*a.metric);
    if (a.signals)
        spec.signals = cli::parse_signals(*a.signals);
    if (a.mode)
        spec.modes = cli::parse_modes(*a.mode);
    if (a.snr)
        cli::parse_snr_range(*a.snr, spec);
    if (a.iterations)
        spec.mc_iterations = *a.iterations;
    if (a.seed)
        spec.master_seed = *a.seed;
    if (a.workers)
        spec.workers = *a.workers;
    if (a.out)
        spec.output_path = *a.out;
    spec.include_oma = spec.include_oma || a.with_oma;
    spec.include_asymptotic = spec.include_asymptotic || a.with_asymptotic;
    spec.common_random_numbers = spec.common_random_numbers || a.crn;
}

int run_sweeps(const Args& a)
{
    const auto loaded = base_config(a);

    std::vector<cli::PresetVariant> jobs;
    if (a.preset.empty())
        jobs.push_back({"", cli::SweepSpec{}, loaded.system});
    else
        jobs = cli::make_preset(a.preset, loaded.system);

    for (auto& job : jobs) {
        apply_overrides(a, job.spec);
        job.spec.output_path = cli::variant_path(job.spec.output_path, job.suffix);
        job.spec.validate();
        job.config.validate();
    }
    for (const auto& job : jobs) {
        const auto table = cli::run_sweep(job.spec, job.config);
        cli::write_csv(job.spec.output_path, table);
        std::cout << "wrote " << table.size() << " rows to " << job.spec.output_path.string() << "\n";
        if (a.emit_plot)
            std::cout << "wrote " << cli::write_plot_script(job.spec.output_path, job.spec.metric).string() << "\n";
    }
    return kOk;
}

int run_validate(const Args& a)
{
    const auto loaded = base_config(a);
    cli::ValidateOptions opt;
    opt.profile = cli::parse_profile(a.profile);
    if (a.iterations)
        opt.iterations = *a.iterations;
    if (a.seed)
        opt.seed = *a.seed;
    if (a.workers)
        opt.workers = *a.workers;

    bool ok = true;
    std::size_t passed = 0;
    std::vector<int> ids = a.checks;
    if (ids.empty())
        for (int i = 1; i <= cli::kCheckCount; ++i)
            ids.push_back(i);
    std::cout << "profile " << cli::to_string(opt.profile) << ", " << opt.iterations << " trials, seed " << opt.seed
              << "\n";
    for (int id : ids) {
        const auto r = cli::run_check(id, loaded.system, opt);
        std::cout << cli::format_check(r) << std::endl;
        ok = ok && r.passed;
        passed += r.passed ? 1 : 0;
    }
    std::cout << passed << "/" << ids.size() << " checks passed\n";
    return ok ? kOk : kValidateFailed;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Two-way relay NOMA performance sweeps and validation"};
    app.set_version_flag("--version", "twrnoma 1.0.0");
    Args a;

    auto add_common = [&](CLI::App& sub) {
        sub.add_option("--config", a.config_path, "Configuration file")->check(CLI::ExistingFile);
        sub.add_option("--iterations", a.iterations, "Monte Carlo trials per point");
        sub.add_option("--seed", a.seed, "Master seed");
        sub.add_option("--workers", a.workers, "Worker threads")->check(CLI::Range(1U, 256U));
    };

    add_common(app);
    app.add_option("--preset", a.preset, "Figure preset fig2..fig8");
    app.add_option("--metric", a.metric, "outage|ergodic_rate|throughput_dl|throughput_dt|ee_dl|ee_dt");
    app.add_option("--signals", a.signals, "Comma-separated subset of x1,x2,x3,x4");
    app.add_option("--mode", a.mode, "ipsic|psic|both");
    app.add_option("--snr", a.snr, "SNR grid a:b:step in dB");
    app.add_option("--out", a.out, "Output CSV path");
    app.add_flag("--with-oma", a.with_oma, "Add OMA baseline rows");
    app.add_flag("--with-asymptotic", a.with_asymptotic, "Fill the asymptotic column");
    app.add_flag("--emit-plot", a.emit_plot, "Write a plotting script next to each CSV");
    app.add_flag("--crn", a.crn, "Common random numbers across the SNR grid");
    app.add_flag("--print-default-config", a.print_default, "Print the reference configuration and exit");

    auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep (the default)");
    sweep->fallthrough();
    auto* validate = app.add_subcommand("validate", "Run the analytic vs Monte Carlo checks");
    validate->fallthrough();
    validate->add_option("--profile", a.profile, "default|strict");
    validate->add_option("--check", a.checks, "Run only these check numbers")
        ->check(CLI::Range(1, cli::kCheckCount));
    app.require_subcommand(0, 1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        if (a.print_default) {
            std::cout << cli::default_config_text();
            return kOk;
        }
        if (validate->parsed())
            return run_validate(a);
        return run_sweeps(a);
    } catch (const twrnoma::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    }
}
