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

#ifndef TWRNOMA_CLI_SWEEP_HPP
#define TWRNOMA_CLI_SWEEP_HPP

#include "twrnoma/config.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace twrnoma::cli {

enum class Metric { outage, ergodic_rate, throughput_dl, throughput_dt, ee_dl, ee_dt };

std::string_view to_string(Metric m);
Metric parse_metric(std::string_view text);
bool is_system_metric(Metric m);

struct SweepSpec {
    double snr_start_db = 0.0;
    double snr_stop_db = 40.0;
    double snr_step_db = 5.0;
    Metric metric = Metric::outage;
    std::vector<Signal> signals{Signal::x1, Signal::x2};
    std::vector<SicMode> modes{SicMode::imperfect};
    std::uint64_t mc_iterations = 100000;
    std::uint64_t master_seed = 1;
    bool include_asymptotic = false;
    bool include_oma = false;
    bool common_random_numbers = false;
    unsigned workers = 1;
    std::filesystem::path output_path = "sweep.csv";

    /// Throws ConfigError on an empty grid, empty signal or mode list, or
    /// fewer than 1000 iterations.
    void validate() const;
    std::vector<double> grid_db() const;
};

/// Parses "a:b:step" (dB).
void parse_snr_range(std::string_view text, SweepSpec& spec);
std::vector<Signal> parse_signals(std::string_view text);
std::vector<SicMode> parse_modes(std::string_view text);

struct MetricPoint {
    double snr_db = 0.0;
    std::string signal;  // x1..x4, or "all" for system metrics
    Metric metric = Metric::outage;
    std::string mode;    // ipsic, psic or oma
    std::optional<double> analytic;
    std::optional<double> asymptotic;
    double mc_mean = 0.0;
    double mc_ci_low = 0.0;
    double mc_ci_high = 0.0;
    bool feasible = true;
};

/// One row per (grid point, signal, mode), ordered by (snr, signal, mode);
/// OMA rows follow the NOMA modes. Output depends only on (spec, config),
/// never on spec.workers.
std::vector<MetricPoint> run_sweep(const SweepSpec& spec, const SystemConfig& config);

inline constexpr std::string_view kCsvHeader =
    "snr_db,signal,metric,mode,analytic,asymptotic,mc_mean,mc_ci_low,mc_ci_high,feasible";

std::string to_csv(std::span<const MetricPoint> table);

/// Writes the CSV; throws std::runtime_error naming the path on failure.
void write_csv(const std::filesystem::path& path, std::span<const MetricPoint> table);

/// Self-contained matplotlib script that plots the CSV it names, one curve
/// per (signal, mode).
std::string plot_script(const std::filesystem::path& csv_path, Metric metric);
std::filesystem::path write_plot_script(const std::filesystem::path& csv_path, Metric metric);

}  // namespace twrnoma::cli

#endif  // TWRNOMA_CLI_SWEEP_HPP
