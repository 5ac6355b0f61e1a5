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

#ifndef TWRNOMA_ANALYSIS_HPP
#define TWRNOMA_ANALYSIS_HPP

#include "twrnoma/config.hpp"
#include "twrnoma/specfun.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace twrnoma {

/// Closed-form building blocks shared by the strong- and weak-signal outage
/// expressions of one group pairing.
struct OutageIntermediates {
    double gamma_l = 0.0;  // threshold of x_l
    double gamma_t = 0.0;  // threshold of x_t
    double beta_l = 0.0;
    double beta_t = 0.0;
    double tau_l = 0.0;     // +inf when b_l <= varpi2 gamma_l
    double xi_t = 0.0;      // +inf when b_t <= (b_l + varpi2) gamma_t
    double theta_l = 0.0;   // max(tau_l, xi_t)
    double varphi_t = 0.0;
    bool tau_feasible = false;
    bool xi_feasible = false;

    double lambda1 = 0.0;  // 1 / (rho a_t Omega_t)
    // {lambda1, lambda2, lambda3} and {lambda1', lambda2'}; empty when
    // varpi1 == 0, where the interference sum collapses.
    std::optional<specfun::HypoExponential> z;
    std::optional<specfun::HypoExponential> z_prime;

    std::vector<std::string> diagnostics;
};

OutageIntermediates outage_intermediates(const SystemConfig& config, const SignalIndex& idx);

/// Raw values outside [-kRawSlack, 1 + kRawSlack] point at a broken formula.
inline constexpr double kRawSlack = 1e-9;

struct AsymptoticOutage {
    double value = 1.0;  // clamped to [0, 1]
    double raw = 1.0;
    bool in_range = true;
    double floor = 1.0;  // same expression at rho = 1e12
};

struct OutageResult {
    double p_exact = 1.0;
    double p_asymptotic = 1.0;
    double floor = 1.0;
    bool feasible = false;
    double raw_exact = 1.0;
    bool exact_in_range = true;
    bool asymptotic_in_range = true;
    OutageIntermediates intermediates;
    std::vector<std::string> diagnostics;
};

/// Outage of the strong signal x_l (mode picked from config.sic).
OutageResult outage_strong(const SystemConfig& config, const SignalIndex& idx);

/// Outage of the weak signal x_t.
OutageResult outage_weak(const SystemConfig& config, const SignalIndex& idx);

/// High-SNR outage expression evaluated at config.rho, plus its floor.
AsymptoticOutage outage_asymptotic(const SystemConfig& config, const SignalIndex& idx, SignalKind kind);

/// Dispatches on the signal's kind.
OutageResult outage(const SystemConfig& config, Signal signal);

struct CurvePoint {
    double rho;    // linear SNR
    double value;  // outage probability or rate
};

/// -d log p / d log rho over the last two points.
double diversity_order_estimate(std::span<const CurvePoint> curve);

}  // namespace twrnoma

#endif  // TWRNOMA_ANALYSIS_HPP
