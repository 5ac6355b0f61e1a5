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

#include "twrnoma/cli/sweep.hpp"

#include "twrnoma/analysis.hpp"
#include "twrnoma/cli/config_io.hpp"
#include "twrnoma/ergodic.hpp"
#include "twrnoma/metrics.hpp"
#include "twrnoma/montecarlo.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace twrnoma::cli {

namespace {

enum class RowMode { ipsic = 0, psic = 1, oma = 2 };

std::string_view mode_name(RowMode m)
{
    switch (m) {
    case RowMode::ipsic:
        return "ipsic";
    case RowMode::psic:
        return "psic";
    case RowMode::oma:
        return "oma";
    }
    return "";
}

struct RowTask {
    std::size_t grid_index;
    double snr_db;
    int node;  // 0 for system metrics
    RowMode mode;
};

constexpr std::array<Signal, 4> kAllSignals{Signal::x1, Signal::x2, Signal::x3, Signal::x4};

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (true) {
        const auto next = text.find(sep, pos);
        parts.push_back(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
        if (next == std::string_view::npos)
            break;
        pos = next + 1;
    }
    return parts;
}

// Same estimate in a uniform shape for combining.
struct Mc {
    double mean;
    double half;
};

Mc as_mc(const McEstimate& e) { return {e.mean, e.half_width_95}; }

std::optional<double> analytic_rate(const SystemConfig& c, Signal s)
{
    const auto idx = index_of(s);
    const bool no_is = c.varpi1 == 0.0 && c.varpi2 == 0.0;
    try {
        if (kind_of(s) == SignalKind::strong) {
            if (no_is)
                return ergodic_rate_strong_closed(c, idx);
            if (c.sic == SicMode::imperfect && c.varpi1 > 0.0 && c.varpi2 > 0.0)
                return ergodic_rate_strong_numeric(c, idx);
            return std::nullopt;
        }
        if (no_is)
            return ergodic_rate_weak_numeric(c, idx);
    } catch (const QuadratureError&) {
        return std::nullopt;
    }
    return std::nullopt;
}

std::optional<double> asymptotic_rate(const SystemConfig& c, Signal s)
{
    if (c.varpi1 != 0.0 || c.varpi2 != 0.0)
        return std::nullopt;
    const auto idx = index_of(s);
    return kind_of(s) == SignalKind::strong ? ergodic_rate_strong_asymptotic(c, idx) : ergodic_rate_weak_highsnr(c, idx);
}

class RowComputer {
public:
    RowComputer(const SweepSpec& spec, const SystemConfig& config) : spec_(spec), config_(config) {}

    MetricPoint compute(const RowTask& task) const
    {
        MetricPoint p;
        p.snr_db = task.snr_db;
        p.metric = spec_.metric;
        p.mode = std::string(mode_name(task.mode));
        p.signal = task.node == 0 ? "all" : std::string(to_string(static_cast<Signal>(task.node)));

        auto cfg = config_.with_snr_db(task.snr_db);
        if (task.mode != RowMode::oma)
            cfg = cfg.with_sic(task.mode == RowMode::ipsic ? SicMode::imperfect : SicMode::perfect);

        if (task.node != 0)
            signal_row(task, cfg, p);
        else
            system_row(task, cfg, p);
        return p;
    }

private:
    McOptions options(const RowTask& task, Signal s) const
    {
        const std::uint64_t grid = spec_.common_random_numbers ? 0 : task.grid_index;
        const auto slot = static_cast<std::uint64_t>(task.mode) * 4 + static_cast<std::uint64_t>(node_of(s) - 1);
        return {grid * 16 + slot, 1};
    }

    Mc mc_signal(const RowTask& task, const SystemConfig& cfg, Signal s, bool outage_metric) const
    {
        const auto opt = options(task, s);
        const auto n = spec_.mc_iterations;
        const auto seed = spec_.master_seed;
        if (task.mode == RowMode::oma) {
            const auto oma = mc_oma_baseline(cfg, s, n, seed, opt);
            return as_mc(outage_metric ? oma.outage : oma.rate);
        }
        const auto idx = index_of(s);
        return as_mc(outage_metric ? mc_outage(cfg, idx, kind_of(s), n, seed, opt)
                                   : mc_ergodic(cfg, idx, kind_of(s), n, seed, opt));
    }

    static void set_mc(MetricPoint& p, Mc mc)
    {
        p.mc_mean = mc.mean;
        p.mc_ci_low = mc.mean - mc.half;
        p.mc_ci_high = mc.mean + mc.half;
    }

    void signal_row(const RowTask& task, const SystemConfig& cfg, MetricPoint& p) const
    {
        const auto s = static_cast<Signal>(task.node);
        if (spec_.metric == Metric::outage) {
            const auto est = task.mode == RowMode::oma
                                 ? mc_oma_baseline(cfg, s, spec_.mc_iterations, spec_.master_seed, options(task, s)).outage
                                 : mc_outage(cfg, index_of(s), kind_of(s), spec_.mc_iterations, spec_.master_seed,
                                             options(task, s));
            p.mc_mean = est.mean;
            p.mc_ci_low = est.ci_low;
            p.mc_ci_high = est.ci_high;
            if (task.mode != RowMode::oma) {
                const auto r = outage(cfg, s);
                p.analytic = r.p_exact;
                if (spec_.include_asymptotic)
                    p.asymptotic = r.p_asymptotic;
                p.feasible = r.feasible;
            }
            return;
        }

        set_mc(p, mc_signal(task, cfg, s, false));
        if (task.mode != RowMode::oma) {
            p.analytic = analytic_rate(cfg, s);
            if (spec_.include_asymptotic)
                p.asymptotic = asymptotic_rate(cfg, s);
        }
    }

    void system_row(const RowTask& task, const SystemConfig& cfg, MetricPoint& p) const
    {
        const bool limited = spec_.metric == Metric::throughput_dl || spec_.metric == Metric::ee_dl;
        const bool efficiency = spec_.metric == Metric::ee_dl || spec_.metric == Metric::ee_dt;
        const bool noma = task.mode != RowMode::oma;

        std::array<double, 4> analytic{};
        std::array<double, 4> asym{};
        bool have_analytic = noma;
        bool have_asym = noma && spec_.include_asymptotic;
        double mc_mean = 0.0;
        double mc_var = 0.0;

        for (std::size_t i = 0; i < 4; ++i) {
            const Signal s = kAllSignals[i];
            const double weight = limited ? cfg.rate_of(node_of(s)) : 1.0;
            const Mc mc = mc_signal(task, cfg, s, limited);
            mc_mean += limited ? weight * (1.0 - mc.mean) : mc.mean;
            mc_var += (weight * mc.half) * (weight * mc.half);

            if (!noma)
                continue;
            if (limited) {
                const auto r = outage(cfg, s);
                analytic[i] = r.p_exact;
                asym[i] = r.p_asymptotic;
                p.feasible = p.feasible && r.feasible;
            } else {
                const auto a = analytic_rate(cfg, s);
                const auto b = have_asym ? asymptotic_rate(cfg, s) : std::nullopt;
                have_analytic = have_analytic && a.has_value();
                have_asym = have_asym && b.has_value();
                analytic[i] = a.value_or(0.0);
                asym[i] = b.value_or(0.0);
            }
        }

        const double scale = efficiency ? energy_efficiency(SystemThroughput{{}, 1.0, {}}, cfg) : 1.0;
        auto total = [&](const std::array<double, 4>& v) {
            return limited ? throughput_delay_limited(v, cfg.rate).value : throughput_delay_tolerant(v).value;
        };
        if (have_analytic)
            p.analytic = scale * total(analytic);
        if (have_asym)
            p.asymptotic = scale * total(asym);
        set_mc(p, {scale * mc_mean, scale * std::sqrt(mc_var)});
    }

    const SweepSpec& spec_;
    const SystemConfig& config_;
};

}  // namespace

std::string_view to_string(Metric m)
{
    switch (m) {
    case Metric::outage:
        return "outage";
    case Metric::ergodic_rate:
        return "ergodic_rate";
    case Metric::throughput_dl:
        return "throughput_dl";
    case Metric::throughput_dt:
        return "throughput_dt";
    case Metric::ee_dl:
        return "ee_dl";
    case Metric::ee_dt:
        return "ee_dt";
    }
    return "";
}

Metric parse_metric(std::string_view text)
{
    for (auto m : {Metric::outage, Metric::ergodic_rate, Metric::throughput_dl, Metric::throughput_dt, Metric::ee_dl,
                   Metric::ee_dt})
        if (text == to_string(m))
            return m;
    throw ConfigError("unknown metric '" + std::string(text) +
                      "' (expected outage, ergodic_rate, throughput_dl, throughput_dt, ee_dl or ee_dt)");
}

bool is_system_metric(Metric m) { return m != Metric::outage && m != Metric::ergodic_rate; }

void SweepSpec::validate() const
{
    if (!std::isfinite(snr_start_db) || !std::isfinite(snr_stop_db) || !(snr_step_db > 0.0))
        throw ConfigError("sweep: SNR step must be > 0 and bounds finite");
    if (snr_start_db > snr_stop_db)
        throw ConfigError("sweep: SNR start must not exceed stop");
    if (signals.empty())
        throw ConfigError("sweep: signal set is empty");
    if (modes.empty())
        throw ConfigError("sweep: mode set is empty");
    if (mc_iterations < kMinTrials)
        throw ConfigError("sweep: need at least " + std::to_string(kMinTrials) + " Monte Carlo iterations");
}

std::vector<double> SweepSpec::grid_db() const
{
    const auto count = static_cast<std::size_t>(std::floor((snr_stop_db - snr_start_db) / snr_step_db + 1e-9)) + 1;
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i)
        grid[i] = snr_start_db + static_cast<double>(i) * snr_step_db;
    return grid;
}

void parse_snr_range(std::string_view text, SweepSpec& spec)
{
    const auto parts = split(text, ':');
    if (parts.size() != 3)
        throw ConfigError("--snr expects start:stop:step in dB, got '" + std::string(text) + "'");
    std::array<double, 3> v{};
    for (std::size_t i = 0; i < 3; ++i) {
        const auto* end = parts[i].data() + parts[i].size();
        const auto [ptr, ec] = std::from_chars(parts[i].data(), end, v[i]);
        if (ec != std::errc{} || ptr != end || parts[i].empty())
            throw ConfigError("--snr: '" + std::string(parts[i]) + "' is not a number");
    }
    spec.snr_start_db = v[0];
    spec.snr_stop_db = v[1];
    spec.snr_step_db = v[2];
}

std::vector<Signal> parse_signals(std::string_view text)
{
    if (text.empty())
        throw ConfigError("empty signal list (expected a subset of x1,x2,x3,x4)");
    std::vector<Signal> out;
    for (auto part : split(text, ',')) {
        const auto s = parse_signal(part);
        if (std::find(out.begin(), out.end(), s) == out.end())
            out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SicMode> parse_modes(std::string_view text)
{
    if (text == "both")
        return {SicMode::imperfect, SicMode::perfect};
    std::vector<SicMode> out;
    for (auto part : split(text, ',')) {
        const auto m = parse_sic_mode(part);
        if (std::find(out.begin(), out.end(), m) == out.end())
            out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MetricPoint> run_sweep(const SweepSpec& spec, const SystemConfig& config)
{
    spec.validate();
    config.validate();

    std::vector<RowMode> row_modes;
    for (auto m : spec.modes)
        row_modes.push_back(m == SicMode::imperfect ? RowMode::ipsic : RowMode::psic);
    if (spec.include_oma)
        row_modes.push_back(RowMode::oma);

    std::vector<int> nodes;
    if (is_system_metric(spec.metric))
        nodes.push_back(0);
    else
        for (auto s : spec.signals)
            nodes.push_back(node_of(s));

    std::vector<RowTask> tasks;
    const auto grid = spec.grid_db();
    for (std::size_t g = 0; g < grid.size(); ++g)
        for (int node : nodes)
            for (auto m : row_modes)
                tasks.push_back({g, grid[g], node, m});

    std::vector<MetricPoint> rows(tasks.size());
    const RowComputer computer(spec, config);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                rows[i] = computer.compute(tasks[i]);
            } catch (...) {
                const std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };

    const unsigned pool = std::max(1u, std::min<unsigned>(spec.workers, static_cast<unsigned>(tasks.size())));
    if (pool == 1) {
        worker();
    } else {
        std::vector<std::jthread> threads;
        for (unsigned w = 0; w < pool; ++w)
            threads.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);
    return rows;
}

std::string to_csv(std::span<const MetricPoint> table)
{
    auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
    std::ostringstream os;
    os << kCsvHeader << '\n';
    for (const auto& p : table) {
        os << format_double(p.snr_db) << ',' << p.signal << ',' << to_string(p.metric) << ',' << p.mode << ','
           << opt(p.analytic) << ',' << opt(p.asymptotic) << ',' << format_double(p.mc_mean) << ','
           << format_double(p.mc_ci_low) << ',' << format_double(p.mc_ci_high) << ','
           << (p.feasible ? "true" : "false") << '\n';
    }
    return os.str();
}

void write_csv(const std::filesystem::path& path, std::span<const MetricPoint> table)
{
    if (table.empty())
        throw std::invalid_argument("write_csv: empty table");
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << to_csv(table);
    if (!out.flush())
        throw std::runtime_error("failed writing '" + path.string() + "'");
}

std::string plot_script(const std::filesystem::path& csv_path, Metric metric)
{
    const bool log_y = metric == Metric::outage;
    std::ostringstream os;
    os << R"(#!/usr/bin/env python3
"""Plot a twrnoma sweep CSV: one curve per (signal, mode)."""
import csv
import os
import sys
from collections import defaultdict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

HERE = os.path.dirname(os.path.abspath(__file__))
CSV = sys.argv[1] if len(sys.argv) > 1 else os.path.join(HERE, ")"
       << csv_path.filename().string() << R"(")
LOG_Y = )" << (log_y ? "True" : "False") << R"py(


def number(text):
    return float(text) if text != "" else None


curves = defaultdict(lambda: defaultdict(list))
metric = None
with open(CSV, newline="") as fh:
    for row in csv.DictReader(fh):
        metric = row["metric"]
        c = curves[(row["signal"], row["mode"])]
        c["snr"].append(float(row["snr_db"]))
        c["analytic"].append(number(row["analytic"]))
        c["asymptotic"].append(number(row["asymptotic"]))
        c["mc"].append(float(row["mc_mean"]))
        c["lo"].append(float(row["mc_ci_low"]))
        c["hi"].append(float(row["mc_ci_high"]))

fig, ax = plt.subplots(figsize=(6.4, 4.8))
for i, ((signal, mode), c) in enumerate(sorted(curves.items())):
    color = "C%d" % (i % 10)
    label = "%s %s" % (signal, mode)
    pts = [(s, v) for s, v in zip(c["snr"], c["analytic"]) if v is not None and (v > 0 or not LOG_Y)]
    if pts:
        ax.plot(*zip(*pts), "-", color=color, label=label + " analytic")
    pts = [(s, v) for s, v in zip(c["snr"], c["asymptotic"]) if v is not None and (v > 0 or not LOG_Y)]
    if pts:
        ax.plot(*zip(*pts), "--", color=color, label=label + " asymptotic")
    err = [[m - lo for m, lo in zip(c["mc"], c["lo"])], [hi - m for m, hi in zip(c["mc"], c["hi"])]]
    ax.errorbar(c["snr"], c["mc"], yerr=err, fmt="o", mfc="none", color=color, label=label + " Monte Carlo")

if LOG_Y:
    ax.set_yscale("log")
ax.set_xlabel("SNR (dB)")
ax.set_ylabel(metric or "")
ax.grid(True, which="both", alpha=0.3)
ax.legend(fontsize="small")
fig.tight_layout()
out = os.path.splitext(CSV)[0] + ".png"
fig.savefig(out, dpi=150)
print(out)
)py";
    return os.str();
}

std::filesystem::path write_plot_script(const std::filesystem::path& csv_path, Metric metric)
{
    auto script = csv_path;
    script.replace_extension(".py");
    std::ofstream out(script, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + script.string() + "' for writing");
    out << plot_script(csv_path, metric);
    if (!out.flush())
        throw std::runtime_error("failed writing '" + script.string() + "'");
    return script;
}

}  // namespace twrnoma::cli
