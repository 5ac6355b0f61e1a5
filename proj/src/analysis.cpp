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

#include "twrnoma/analysis.hpp"

#include "twrnoma/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace twrnoma {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kFloorRho = 1e12;

// prod(lambda) (Phi1 W/(W l1 + b) - Phi2 W/(W l2 + b) + Phi3 W/(W l3 + b)),
// without the e^{-beta/Omega_l} prefactor. Two rates when varpi1 = 0 is
// replaced by the single-exponential form.
double j1_core(const OutageIntermediates& im, double omega_l)
{
    const double b = im.beta_l;
    if (!im.z)
        return im.lambda1 * omega_l / (omega_l * im.lambda1 + b);
    const auto l = im.z->rates();
    const auto phi = im.z->phi();
    const double prod = l[0] * l[1] * l[2];
    return prod * (phi[0] * omega_l / (omega_l * l[0] + b) - phi[1] * omega_l / (omega_l * l[1] + b) +
                   phi[2] * omega_l / (omega_l * l[2] + b));
}

// lambda1' lambda2' / (lambda2' - lambda1') (W/(beta_l + beta_t W varphi + W l1')
// - W/(... + W l2')), the Laplace factor of the relay interference sum.
double theta1_laplace(const OutageIntermediates& im, double omega_l)
{
    if (!im.z_prime)
        return 1.0;
    const auto l = im.z_prime->rates();
    const double base = im.beta_l + im.beta_t * omega_l * im.varphi_t;
    return l[0] * l[1] / (l[1] - l[0]) * (omega_l / (base + omega_l * l[0]) - omega_l / (base + omega_l * l[1]));
}

double clamp_unit(double v) { return std::clamp(v, 0.0, 1.0); }

bool raw_ok(double v) { return v >= -kRawSlack && v <= 1.0 + kRawSlack; }

double asymptotic_raw(const SystemConfig& config, const SignalIndex& idx, SignalKind kind)
{
    const auto im = outage_intermediates(config, idx);
    const double eps = config.epsilon();
    const double omega_l = config.omega_of(idx.l);
    const double omega_t = config.omega_of(idx.t);
    const double omega_k = config.omega_of(idx.k);

    if (kind == SignalKind::strong) {
        if (!im.tau_feasible || !im.xi_feasible)
            return 1.0;
        const double core = j1_core(im, omega_l);
        if (eps == 0.0)
            return 1.0 - core;
        const double c = eps * im.tau_l * config.rho * config.omega_i;
        const double bracket = 1.0 - im.theta_l / omega_k -
                               c / (omega_k + c) * (1.0 - im.theta_l * (omega_k + c) / (c * omega_k));
        return 1.0 - core * bracket;
    }

    if (!im.xi_feasible)
        return 1.0;
    const double denom = im.varphi_t * omega_t * (1.0 + eps * config.rho * im.beta_t * im.varphi_t * config.omega_i);
    return 1.0 - theta1_laplace(im, omega_l) / denom;
}

}  // namespace

OutageIntermediates outage_intermediates(const SystemConfig& config, const SignalIndex& idx)
{
    OutageIntermediates im;
    const double rho = config.rho;
    const double a_l = config.a_of(idx.l);
    const double a_t = config.a_of(idx.t);
    const double b_l = config.b_of(idx.l);
    const double b_t = config.b_of(idx.t);
    const double omega_l = config.omega_of(idx.l);
    const double omega_t = config.omega_of(idx.t);
    const double omega_k = config.omega_of(idx.k);
    const double omega_r = config.omega_of(idx.r);

    im.gamma_l = gamma_threshold(config.rate_of(idx.l));
    im.gamma_t = gamma_threshold(config.rate_of(idx.t));
    im.beta_l = im.gamma_l / (rho * a_l);
    im.beta_t = im.gamma_t / (rho * a_t);

    const double tau_den = b_l - config.varpi2 * im.gamma_l;
    const double xi_den = b_t - b_l * im.gamma_t - config.varpi2 * im.gamma_t;
    im.tau_feasible = tau_den > 0.0;
    im.xi_feasible = xi_den > 0.0;
    im.tau_l = im.tau_feasible ? im.gamma_l / (rho * tau_den) : kInf;
    im.xi_t = im.xi_feasible ? im.gamma_t / (rho * xi_den) : kInf;
    im.theta_l = std::max(im.tau_l, im.xi_t);
    im.varphi_t = (omega_l + rho * im.beta_l * a_t * omega_t) / (omega_l * omega_t);

    im.lambda1 = 1.0 / (rho * a_t * omega_t);
    if (config.varpi1 > 0.0) {
        const double l2 = 1.0 / (rho * config.varpi1 * config.a_of(idx.k) * omega_k);
        const double l3 = 1.0 / (rho * config.varpi1 * config.a_of(idx.r) * omega_r);
        im.z.emplace(std::initializer_list<double>{im.lambda1, l2, l3});
        im.z_prime.emplace(std::initializer_list<double>{l2, l3});
        if (im.z->perturbed())
            im.diagnostics.push_back(im.z->diagnostic());
        if (im.z_prime->perturbed())
            im.diagnostics.push_back(im.z_prime->diagnostic());
    }
    return im;
}

AsymptoticOutage outage_asymptotic(const SystemConfig& config, const SignalIndex& idx, SignalKind kind)
{
    AsymptoticOutage r;
    r.raw = asymptotic_raw(config, idx, kind);
    r.in_range = raw_ok(r.raw);
    r.value = clamp_unit(r.raw);
    auto far = config;
    far.rho = kFloorRho;
    r.floor = clamp_unit(asymptotic_raw(far, idx, kind));
    return r;
}

OutageResult outage_strong(const SystemConfig& config, const SignalIndex& idx)
{
    config.validate();
    OutageResult r;
    r.intermediates = outage_intermediates(config, idx);
    const auto& im = r.intermediates;
    r.diagnostics = im.diagnostics;
    r.feasible = im.tau_feasible && im.xi_feasible;

    if (!r.feasible) {
        r.diagnostics.push_back(!im.tau_feasible ? "infeasible: b_l <= varpi2 gamma_l"
                                                 : "infeasible: b_t <= (b_l + varpi2) gamma_t");
    } else {
        const double omega_l = config.omega_of(idx.l);
        const double omega_k = config.omega_of(idx.k);
        const double j1 = std::exp(-im.beta_l / omega_l) * j1_core(im, omega_l);

        double j2 = std::exp(-im.theta_l / omega_k);
        const double eps = config.epsilon();
        if (eps > 0.0) {
            const double c = eps * im.tau_l * config.rho * config.omega_i;
            j2 -= c / (omega_k + c) * std::exp(-im.theta_l / omega_k - (im.theta_l - im.tau_l) / c);
        }
        r.raw_exact = 1.0 - j1 * j2;
    }
    r.exact_in_range = raw_ok(r.raw_exact);
    if (!r.exact_in_range)
        r.diagnostics.push_back("exact outage raw value outside [0,1]: " + std::to_string(r.raw_exact));
    r.p_exact = clamp_unit(r.raw_exact);

    const auto asym = outage_asymptotic(config, idx, SignalKind::strong);
    r.p_asymptotic = asym.value;
    r.floor = asym.floor;
    r.asymptotic_in_range = asym.in_range;
    return r;
}

OutageResult outage_weak(const SystemConfig& config, const SignalIndex& idx)
{
    config.validate();
    OutageResult r;
    r.intermediates = outage_intermediates(config, idx);
    const auto& im = r.intermediates;
    r.diagnostics = im.diagnostics;
    r.feasible = im.xi_feasible;

    if (!r.feasible) {
        r.diagnostics.push_back("infeasible: b_t <= (b_l + varpi2) gamma_t");
    } else {
        const double omega_l = config.omega_of(idx.l);
        const double omega_t = config.omega_of(idx.t);
        const double omega_k = config.omega_of(idx.k);
        const double omega_r = config.omega_of(idx.r);
        const double eps = config.epsilon();

        const double expo = -im.beta_l / omega_l - im.beta_t * im.varphi_t - im.xi_t / omega_k - im.xi_t / omega_r;
        const double denom = im.varphi_t * omega_t * (1.0 + eps * im.beta_t * config.rho * im.varphi_t * config.omega_i);
        r.raw_exact = 1.0 - std::exp(expo) / denom * theta1_laplace(im, omega_l);
    }
    r.exact_in_range = raw_ok(r.raw_exact);
    if (!r.exact_in_range)
        r.diagnostics.push_back("exact outage raw value outside [0,1]: " + std::to_string(r.raw_exact));
    r.p_exact = clamp_unit(r.raw_exact);

    const auto asym = outage_asymptotic(config, idx, SignalKind::weak);
    r.p_asymptotic = asym.value;
    r.floor = asym.floor;
    r.asymptotic_in_range = asym.in_range;
    return r;
}

OutageResult outage(const SystemConfig& config, Signal signal)
{
    const auto idx = index_of(signal);
    return kind_of(signal) == SignalKind::strong ? outage_strong(config, idx) : outage_weak(config, idx);
}

double diversity_order_estimate(std::span<const CurvePoint> curve)
{
    if (curve.size() < 2)
        throw std::invalid_argument("diversity_order_estimate: need at least 2 points");
    for (std::size_t i = 0; i < curve.size(); ++i) {
        if (!(curve[i].value > 0.0) || !std::isfinite(curve[i].value))
            throw std::invalid_argument("diversity_order_estimate: outage values must be > 0");
        if (!(curve[i].rho > 0.0) || (i > 0 && !(curve[i].rho > curve[i - 1].rho)))
            throw std::invalid_argument("diversity_order_estimate: rho must be positive and increasing");
    }
    const auto& p0 = curve[curve.size() - 2];
    const auto& p1 = curve[curve.size() - 1];
    const double dlogp = std::log(p1.value) - std::log(p0.value);
    if (dlogp == 0.0)
        return 0.0;
    return -dlogp / (std::log(p1.rho) - std::log(p0.rho));
}

}  // namespace twrnoma
