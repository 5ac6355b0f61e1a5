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

#include "twrnoma/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace twrnoma::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxTerms = 1000;

// Crossovers: the alternating E1 series loses digits to cancellation once
// y exceeds ~1, where the continued fraction already converges quickly. The
// positive-argument asymptotic series reaches double precision only for
// x >~ 37.
constexpr double kE1SeriesLimit = 1.0;
constexpr double kEiSeriesLimit = 40.0;

// E1(y) = -gamma - ln y - sum_{k>=1} (-y)^k / (k k!), 0 < y <= 1.
double e1_series(double y)
{
    double term = 1.0;
    double sum = 0.0;
    for (int k = 1; k < kMaxTerms; ++k) {
        term *= -y / k;
        const double contrib = term / k;
        sum += contrib;
        if (std::abs(contrib) < kEps * std::abs(sum))
            break;
    }
    return -kEulerGamma - std::log(y) - sum;
}

// e^y E1(y) by the continued fraction
//   1/(y+1- 1/(y+3- 4/(y+5- ...))), modified Lentz, y > 1.
double e1_scaled_cf(double y)
{
    constexpr double tiny = 1e-300;
    double b = y + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < kMaxTerms; ++i) {
        const double an = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        const double del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < kEps)
            return h;
    }
    throw std::runtime_error("expint: continued fraction failed to converge");
}

// Ei(x) = gamma + ln x + sum_{k>=1} x^k / (k k!), x > 0.
double ei_series(double x)
{
    double term = 1.0;
    double sum = 0.0;
    for (int k = 1; k < kMaxTerms; ++k) {
        term *= x / k;
        const double contrib = term / k;
        sum += contrib;
        if (contrib < kEps * sum)
            break;
    }
    return kEulerGamma + std::log(x) + sum;
}

// Ei(x) ~ e^x/x sum_k k!/x^k, truncated at the smallest term.
double ei_asymptotic(double x)
{
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < kMaxTerms; ++k) {
        const double prev = term;
        term *= k / x;
        if (term >= prev)
            break;
        sum += term;
        if (term < kEps * sum)
            break;
    }
    return std::exp(x) / x * sum;
}

}  // namespace

double expint_e1(double y)
{
    if (!(y > 0.0))
        throw std::domain_error("expint_e1: argument must be > 0");
    if (y <= kE1SeriesLimit)
        return e1_series(y);
    return e1_scaled_cf(y) * std::exp(-y);
}

double exp_scaled_e1(double y)
{
    if (!(y > 0.0))
        throw std::domain_error("exp_scaled_e1: argument must be > 0");
    if (y <= kE1SeriesLimit)
        return std::exp(y) * e1_series(y);
    return e1_scaled_cf(y);
}

double expint_ei(double x)
{
    if (std::isnan(x))
        throw std::domain_error("expint_ei: NaN argument");
    if (x == 0.0)
        throw std::domain_error("expint_ei: logarithmic singularity at x = 0");
    if (x < 0.0)
        return -expint_e1(-x);
    if (x <= kEiSeriesLimit)
        return ei_series(x);
    return ei_asymptotic(x);
}

HypoExponential::HypoExponential(std::span<const double> rates)
{
    if (rates.size() != 2 && rates.size() != 3)
        throw std::invalid_argument("HypoExponential: need 2 or 3 rates, got " + std::to_string(rates.size()));
    n_ = rates.size();
    for (std::size_t i = 0; i < n_; ++i) {
        if (!(rates[i] > 0.0) || !std::isfinite(rates[i]))
            throw std::invalid_argument("HypoExponential: rates must be positive and finite");
        rates_[i] = rates[i];
    }

    // Walk the rates from largest to smallest; any rate that coincides with
    // its (already separated) upper neighbour is pushed below it.
    std::array<std::size_t, 3> order{0, 1, 2};
    std::sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_),
              [this](std::size_t i, std::size_t j) { return rates_[i] < rates_[j]; });
    std::ostringstream note;
    for (std::size_t pos = n_ - 1; pos-- > 0;) {
        const double upper = rates_[order[pos + 1]];
        double& lower = rates_[order[pos]];
        if (upper - lower < kCoincidenceTolerance * upper) {
            note << (perturbed_ ? "; " : "") << "rate " << lower << " coincides with " << upper;
            lower = upper * (1.0 - kPerturbation);
            perturbed_ = true;
        }
    }
    if (perturbed_)
        diagnostic_ = "hypoexponential: coincident rates perturbed by 1e-7 relative (" + note.str() + ")";
}

std::array<double, 3> HypoExponential::phi() const
{
    const double l1 = rates_[0];
    const double l2 = rates_[1];
    if (n_ == 2) {
        const double c = 1.0 / (l2 - l1);
        return {c, c, 0.0};
    }
    const double l3 = rates_[2];
    return {1.0 / ((l2 - l1) * (l3 - l1)), 1.0 / ((l3 - l2) * (l2 - l1)), 1.0 / ((l3 - l1) * (l3 - l2))};
}

double HypoExponential::pdf(double z) const
{
    if (!std::isfinite(z) || z < 0.0)
        throw std::domain_error("hypoexp_pdf: z must be finite and >= 0");

    // Divided differences of e^{-lambda z} over the sorted rates; the
    // first-order differences use expm1 so a close pair stays accurate.
    std::array<double, 3> s = rates_;
    std::sort(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(n_));
    auto first_diff = [z](double a, double b) { return std::exp(-a * z) * std::expm1(-(b - a) * z) / (b - a); };

    if (n_ == 2)
        return -s[0] * s[1] * first_diff(s[0], s[1]);

    const double second = (first_diff(s[1], s[2]) - first_diff(s[0], s[1])) / (s[2] - s[0]);
    return s[0] * s[1] * s[2] * second;
}

double HypoExponential::laplace(double s) const
{
    double v = 1.0;
    for (std::size_t i = 0; i < n_; ++i)
        v *= rates_[i] / (rates_[i] + s);
    return v;
}

double HypoExponential::mean() const
{
    double m = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
        m += 1.0 / rates_[i];
    return m;
}

double hypoexp_pdf(const HypoExponential& params, double z) { return params.pdf(z); }

}  // namespace twrnoma::specfun
