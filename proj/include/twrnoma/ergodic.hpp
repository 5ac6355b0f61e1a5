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

#ifndef TWRNOMA_ERGODIC_HPP
#define TWRNOMA_ERGODIC_HPP

#include "twrnoma/analysis.hpp"
#include "twrnoma/config.hpp"
#include "twrnoma/quadrature.hpp"

#include <span>
#include <string>
#include <vector>

namespace twrnoma {

/// Constants of the ergodic-rate expressions for one pairing.
struct RateIntermediates {
    static constexpr double kCoincidenceTolerance = 1e-9;
    static constexpr double kPerturbation = 1e-7;

    double Lambda1 = 0.0;  // eps Omega_I / (b_l Omega_k)
    double Lambda2 = 0.0;  // a_t Omega_t / (a_l Omega_l)
    double Lambda3 = 0.0;  // eps Omega_I / (a_t Omega_t)
    double Psi = 0.0;      // (a_l Omega_l + b_l Omega_k) / (rho a_l b_l Omega_l Omega_k)
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;
    double lambda_tilde1 = 0.0;  // 1 / (eps rho Omega_I), +inf under pSIC
    double lambda_tilde2 = 0.0;  // 1 / (rho varpi2 Omega_k), +inf when varpi2 = 0

    // Inputs of the weighting factors of the two-dimensional CDF.
    double a_l = 0.0;
    double b_l = 0.0;
    double omega_l = 0.0;
    double omega_k = 0.0;

    bool perturbed = false;
    std::vector<std::string> diagnostics;

    /// (a_l (w+1) Omega_l + b_l (z+1) Omega_k) / (a_l (w+1) Omega_l Omega_k)
    double varphi(double w, double z) const;
    /// (a_l (w+1) Omega_l + b_l (z+1) Omega_k) / (b_l (z+1) Omega_k Omega_l)
    double vartheta(double w, double z) const;
};

RateIntermediates rate_intermediates(const SystemConfig& config, const SignalIndex& idx);

/// Rate of x_l from the two-dimensional CDF by nested adaptive quadrature.
/// Needs varpi1, varpi2 > 0 and imperfect SIC; throws PreconditionError
/// otherwise and QuadratureError when any level fails to converge.
double ergodic_rate_strong_numeric(const SystemConfig& config, const SignalIndex& idx,
                                   const QuadratureSpec& q = {});

/// Exponential-integral closed form of the x_l rate; varpi1 = varpi2 = 0.
double ergodic_rate_strong_closed(const SystemConfig& config, const SignalIndex& idx);

/// Finite-interval integral over (0, b_t/b_l) for the x_t rate;
/// varpi1 = varpi2 = 0. The IS case is Monte Carlo only.
double ergodic_rate_weak_numeric(const SystemConfig& config, const SignalIndex& idx, const QuadratureSpec& q = {});

/// High-SNR approximation of the x_t rate; varpi1 = varpi2 = 0.
double ergodic_rate_weak_highsnr(const SystemConfig& config, const SignalIndex& idx);

/// High-SNR expansion of the x_l closed form; varpi1 = varpi2 = 0.
double ergodic_rate_strong_asymptotic(const SystemConfig& config, const SignalIndex& idx);

/// dR / d log2(rho) over the last two points.
double high_snr_slope_estimate(std::span<const CurvePoint> curve);

}  // namespace twrnoma

#endif  // TWRNOMA_ERGODIC_HPP
