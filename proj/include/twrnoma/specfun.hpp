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

#ifndef TWRNOMA_SPECFUN_HPP
#define TWRNOMA_SPECFUN_HPP

#include <array>
#include <cstddef>
#include <initializer_list>
#include <numbers>
#include <span>
#include <string>

namespace twrnoma::specfun {

inline constexpr double kEulerGamma = std::numbers::egamma_v<double>;

/// Exponential integral Ei(x) = -PV int_{-x}^inf e^{-t}/t dt.
/// Throws std::domain_error for x == 0 or NaN.
double expint_ei(double x);

/// E1(y) = int_1^inf e^{-y t}/t dt for y > 0; Ei(-y) = -E1(y).
double expint_e1(double y);

/// e^y E1(y) for y > 0, evaluated without overflow for large y. This is
/// the Laplace-type integral int_0^inf e^{-y u}/(1+u) du.
double exp_scaled_e1(double y);

/// Density of a sum of two or three independent exponential variables with
/// distinct rates (hypoexponential distribution).
///
/// Coincident rates make the partial-fraction coefficients diverge. When
/// two rates are within 1e-9 relative of each other the smaller one is
/// moved 1e-7 (relative) below the larger and perturbed() reports it; the
/// induced density error is O(1e-7), far below Monte Carlo resolution.
class HypoExponential {
public:
    static constexpr double kCoincidenceTolerance = 1e-9;
    static constexpr double kPerturbation = 1e-7;

    explicit HypoExponential(std::span<const double> rates);
    HypoExponential(std::initializer_list<double> rates)
        : HypoExponential(std::span<const double>(rates.begin(), rates.size()))
    {}

    std::size_t size() const { return n_; }
    /// Rates actually used (after any perturbation), in input order.
    std::span<const double> rates() const { return {rates_.data(), n_}; }
    bool perturbed() const { return perturbed_; }
    const std::string& diagnostic() const { return diagnostic_; }

    /// Three rates: Phi_1, Phi_2, Phi_3 with
    ///   pdf(z) = l1 l2 l3 (Phi_1 e^{-l1 z} - Phi_2 e^{-l2 z} + Phi_3 e^{-l3 z}).
    /// Two rates: {1/(l2 - l1), 1/(l2 - l1)} with
    ///   pdf(z) = l1 l2 (Phi_1 e^{-l1 z} - Phi_2 e^{-l2 z}).
    std::array<double, 3> phi() const;

    /// Throws std::domain_error for non-finite or negative z.
    double pdf(double z) const;

    /// E[e^{-sZ}] for s >= 0.
    double laplace(double s) const;

    double mean() const;

private:
    std::array<double, 3> rates_{};
    std::size_t n_ = 0;
    bool perturbed_ = false;
    std::string diagnostic_;
};

/// Free-function form of HypoExponential::pdf.
double hypoexp_pdf(const HypoExponential& params, double z);

}  // namespace twrnoma::specfun

#endif  // TWRNOMA_SPECFUN_HPP
