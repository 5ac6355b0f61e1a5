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

#include "twrnoma/cli/presets.hpp"

#include "twrnoma/cli/config_io.hpp"

namespace twrnoma::cli {

namespace {

constexpr std::uint64_t kFigureIterations = 1000000;

SweepSpec figure_spec(Metric metric)
{
    SweepSpec s;
    s.metric = metric;
    s.snr_start_db = 0.0;
    s.snr_stop_db = 50.0;
    s.snr_step_db = 5.0;
    s.signals = {Signal::x1, Signal::x2};
    s.modes = {SicMode::imperfect, SicMode::perfect};
    s.mc_iterations = kFigureIterations;
    s.include_asymptotic = true;
    return s;
}

// Shared by every figure preset: R1 = 0.1, R2 = 0.01 BPCU.
SystemConfig figure_config(const SystemConfig& base, double varpi, double omega_i_db)
{
    auto c = base.with_varpi(varpi, varpi);
    c.omega_i = db_to_linear(omega_i_db);
    c.rate = {0.1, 0.01, 0.1, 0.01};
    return c;
}

}  // namespace

std::vector<std::string_view> preset_names() { return {"fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8"}; }

std::vector<PresetVariant> make_preset(std::string_view name, const SystemConfig& base)
{
    std::vector<PresetVariant> out;

    if (name == "fig2") {
        auto spec = figure_spec(Metric::outage);
        spec.include_oma = true;
        out.push_back({"", spec, figure_config(base, 0.01, -20.0)});
    } else if (name == "fig3") {
        for (double v : {0.0, 0.01, 0.05, 0.1})
            out.push_back({"varpi" + format_double(v), figure_spec(Metric::outage), figure_config(base, v, -20.0)});
    } else if (name == "fig4") {
        auto spec = figure_spec(Metric::outage);
        spec.modes = {SicMode::imperfect};
        for (double db : {-20.0, -10.0, 0.0})
            out.push_back({"omegaI" + format_double(db) + "dB", spec, figure_config(base, 0.0, db)});
    } else if (name == "fig5") {
        auto spec = figure_spec(Metric::throughput_dl);
        spec.include_oma = true;
        for (double db : {-20.0, -10.0})
            out.push_back({"omegaI" + format_double(db) + "dB", spec, figure_config(base, 0.01, db)});
    } else if (name == "fig6" || name == "fig7") {
        const auto spec = figure_spec(name == "fig6" ? Metric::ergodic_rate : Metric::throughput_dt);
        out.push_back({"is", spec, figure_config(base, 0.01, -20.0)});
        out.push_back({"nois", spec, figure_config(base, 0.0, -20.0)});
    } else if (name == "fig8") {
        auto power = [](SystemConfig c) {
            c.pu = 10.0;
            c.pr = 10.0;
            c.T = 1.0;
            return c;
        };
        out.push_back({"dl", figure_spec(Metric::ee_dl), power(figure_config(base, 0.01, -20.0))});
        out.push_back({"dt", figure_spec(Metric::ee_dt), power(figure_config(base, 0.0, -20.0))});
    } else {
        throw ConfigError("unknown preset '" + std::string(name) + "' (expected fig2..fig8)");
    }
    return out;
}

std::filesystem::path variant_path(const std::filesystem::path& base, const std::string& suffix)
{
    if (suffix.empty())
        return base;
    auto p = base;
    const auto ext = base.extension().string();
    p.replace_filename(base.stem().string() + "_" + suffix + (ext.empty() ? ".csv" : ext));
    return p;
}

}  // namespace twrnoma::cli
