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

#include "twrnoma/ergodic.hpp"

#include "twrnoma/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace twrnoma {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kHalfInvLn2 = 0.5 / std::numbers::ln2;

void require_no_is(const SystemConfig& config, const char* who)
{
    if (config.varpi1 != 0.0 || config.varpi2 != 0.0) {
        std::ostringstream os;
        os << who << ": requires varpi1 = varpi2 = 0 (got " << config.varpi1 << ", " << config.varpi2
           << "); use ergodic_rate_strong_numeric or Monte Carlo for the IS case";
        throw PreconditionError(os.str());
    }
}

bool near(double x, double y)
{
    return std::abs(x - y) < RateIntermediates::kCoincidenceTolerance * std::max(std::abs(x), std::abs(y));
}

QuadratureSpec tightened(const QuadratureSpec& q)
{
    QuadratureSpec inner = q;
    inner.abs_tol = q.abs_tol * 1e-2;
    inner.rel_tol = q.rel_tol * 1e-2;
    return inner;
}

}  // namespace

double RateIntermediates::varphi(double w, double z) const
{
    const double lhs = a_l * (w + 1.0) * omega_l;
    return (lhs + b_l * (z + 1.0) * omega_k) / (lhs * omega_k);
}

double RateIntermediates::vartheta(double w, double z) const
{
    const double rhs = b_l * (z + 1.0) * omega_k;
    return (a_l * (w + 1.0) * omega_l + rhs) / (rhs * omega_l);
}

RateIntermediates rate_intermediates(const SystemConfig& config, const SignalIndex& idx)
{
    RateIntermediates ri;
    const double eps = config.epsilon();
    const double rho = config.rho;
    ri.a_l = config.a_of(idx.l);
    ri.b_l = config.b_of(idx.l);
    ri.omega_l = config.omega_of(idx.l);
    ri.omega_k = config.omega_of(idx.k);
    const double a_t = config.a_of(idx.t);
    const double omega_t = config.omega_of(idx.t);

    ri.Lambda1 = eps * config.omega_i / (ri.b_l * ri.omega_k);
    ri.Lambda2 = a_t * omega_t / (ri.a_l * ri.omega_l);
    ri.Lambda3 = eps * config.omega_i / (a_t * omega_t);
    ri.Psi = (ri.a_l * ri.omega_l + ri.b_l * ri.omega_k) / (rho * ri.a_l * ri.b_l * ri.omega_l * ri.omega_k);
    ri.lambda_tilde1 = eps > 0.0 ? 1.0 / (eps * rho * config.omega_i) : kInf;
    ri.lambda_tilde2 = config.varpi2 > 0.0 ? 1.0 / (rho * config.varpi2 * ri.omega_k) : kInf;

    auto nudge = [&ri](double& v, const char* what) {
        std::ostringstream os;
        os << "ergodic: " << what << " (" << v << ") perturbed by 1e-7 relative";
        v *= 1.0 - RateIntermediates::kPerturbation;
        ri.perturbed = true;
        ri.diagnostics.push_back(os.str());
    };
    if (near(ri.Lambda2, 1.0))
        nudge(ri.Lambda2, "Lambda2 coincides with 1");
    if (eps > 0.0) {
        if (near(ri.Lambda1, 1.0))
            nudge(ri.Lambda1, "Lambda1 coincides with 1");
        if (near(ri.Lambda1, ri.Lambda2)) {
            if (ri.Lambda1 <= ri.Lambda2)
                nudge(ri.Lambda1, "Lambda1 coincides with Lambda2");
            else
                nudge(ri.Lambda2, "Lambda2 coincides with Lambda1");
        }
    }

    const double L1 = ri.Lambda1;
    const double L2 = ri.Lambda2;
    ri.A = 1.0 / (L1 * L2 - L2 - L1 + 1.0);
    ri.B = (ri.A * (L1 - L1 * L2) - L1) / (L2 - L1);
    ri.C = 1.0 - ri.A - ri.B;
    return ri;
}

double ergodic_rate_strong_numeric(const SystemConfig& config, const SignalIndex& idx, const QuadratureSpec& q)
{
    config.validate();
    q.validate();
    if (!(config.varpi1 > 0.0) || !(config.varpi2 > 0.0))
        throw PreconditionError("ergodic_rate_strong_numeric: requires varpi1, varpi2 > 0; use "
                                "ergodic_rate_strong_closed when both vanish");
    if (config.sic != SicMode::imperfect)
        throw PreconditionError("ergodic_rate_strong_numeric: defined for imperfect SIC only; the perfect-SIC "
                                "IS case is Monte Carlo only");

    const auto ri = rate_intermediates(config, idx);
    const double rho = config.rho;
    const double a_t = config.a_of(idx.t);
    const double omega_t = config.omega_of(idx.t);
    const double l1 = 1.0 / (rho * a_t * omega_t);
    const double l2 = 1.0 / (rho * config.varpi1 * config.a_of(idx.k) * config.omega_of(idx.k));
    const double l3 = 1.0 / (rho * config.varpi1 * config.a_of(idx.r) * config.omega_of(idx.r));
    const specfun::HypoExponential fz{l1, l2, l3};
    const specfun::HypoExponential fw{ri.lambda_tilde1, ri.lambda_tilde2};

    const QuadratureSpec mid = tightened(q);
    const QuadratureSpec inner = tightened(mid);

    // 1 - F_X(x): the two weights 1/(varphi Omega_k) and 1/(vartheta Omega_l)
    // sum to one, leaving only the exponential terms.
    auto survival = [&](double x) {
        auto over_w = [&](double w) {
            auto over_z = [&](double z) {
                const double vp = ri.varphi(w, z);
                const double vt = ri.vartheta(w, z);
                const double term = std::exp(-x * (w + 1.0) * vp / (rho * ri.b_l)) / (vp * ri.omega_k) +
                                    std::exp(-x * (z + 1.0) * vt / (rho * ri.a_l)) / (vt * ri.omega_l);
                return fz.pdf(z) * term;
            };
            return fw.pdf(w) * integrate_semi_infinite(over_z, inner, fz.mean());
        };
        return integrate_semi_infinite(over_w, mid, fw.mean());
    };

    const double psi_mean = (fw.mean() + 1.0) / (rho * ri.b_l * ri.omega_k) + (fz.mean() + 1.0) / (rho * ri.a_l * ri.omega_l);
    const double scale = 1.0 + 1.0 / psi_mean;
    return kHalfInvLn2 * integrate_semi_infinite([&](double x) { return survival(x) / (1.0 + x); }, q, scale);
}

double ergodic_rate_strong_closed(const SystemConfig& config, const SignalIndex& idx)
{
    config.validate();
    require_no_is(config, "ergodic_rate_strong_closed");
    const auto ri = rate_intermediates(config, idx);
    using specfun::exp_scaled_e1;

    // -e^y Ei(-y) = e^y E1(y)
    double sum = ri.A * exp_scaled_e1(ri.Psi) + ri.C / ri.Lambda2 * exp_scaled_e1(ri.Psi / ri.Lambda2);
    if (config.sic == SicMode::imperfect)
        sum += ri.B / ri.Lambda1 * exp_scaled_e1(ri.Psi / ri.Lambda1);
    return kHalfInvLn2 * sum;
}

double ergodic_rate_weak_numeric(const SystemConfig& config, const SignalIndex& idx, const QuadratureSpec& q)
{
    config.validate();
    q.validate();
    require_no_is(config, "ergodic_rate_weak_numeric");
    const auto ri = rate_intermediates(config, idx);
    const double rho = config.rho;
    const double b_l = config.b_of(idx.l);
    const double b_t = config.b_of(idx.t);
    const double s = 1.0 / (rho * config.a_of(idx.t) * config.omega_of(idx.t));
    const double kill = (1.0 / config.omega_of(idx.k) + 1.0 / config.omega_of(idx.r)) / rho;
    const double L3 = ri.Lambda3;

    // y = x / (b_t - x b_l) sends the essential singularity at x = b_t/b_l
    // to an exponential tail.
    auto f = [=](double y) {
        const double den = 1.0 + b_l * y;
        const double x = b_t * y / den;
        const double jac = b_t / (den * den);
        return std::exp(-x * s - y * kill) * jac / ((1.0 + x) * (1.0 + x * L3));
    };
    return kHalfInvLn2 * integrate_semi_infinite(f, q, 1.0 / b_l);
}

double ergodic_rate_weak_highsnr(const SystemConfig& config, const SignalIndex& idx)
{
    config.validate();
    require_no_is(config, "ergodic_rate_weak_highsnr");
    const double b_l = config.b_of(idx.l);
    const double b_t = config.b_of(idx.t);

    if (config.sic == SicMode::imperfect) {
        const double L3 = rate_intermediates(config, idx).Lambda3;
        const double c = b_t / b_l;
        // [ln(1+c) - ln(1+c L3)] / (1 - L3), continuous through L3 = 1.
        const double d = c * (1.0 - L3) / (1.0 + c * L3);
        const double ratio = d == 0.0 ? 1.0 : std::log1p(d) / d;
        return kHalfInvLn2 * ratio * c / (1.0 + c * L3);
    }

    using specfun::exp_scaled_e1;
    const double s = 1.0 / (config.rho * config.a_of(idx.t) * config.omega_of(idx.t));
    // e^s [Ei(-s/b_l) - Ei(-s)] = e^s E1(s) - e^{s - s/b_l} e^{s/b_l} E1(s/b_l)
    return kHalfInvLn2 * (exp_scaled_e1(s) - std::exp(s - s / b_l) * exp_scaled_e1(s / b_l));
}

double ergodic_rate_strong_asymptotic(const SystemConfig& config, const SignalIndex& idx)
{
    config.validate();
    require_no_is(config, "ergodic_rate_strong_asymptotic");
    const auto ri = rate_intermediates(config, idx);
    constexpr double Ec = specfun::kEulerGamma;

    auto expand = [Ec](double y) { return (1.0 + y) * (std::log(y) + Ec); };
    double sum = ri.A * expand(ri.Psi) + ri.C / ri.Lambda2 * expand(ri.Psi / ri.Lambda2);
    if (config.sic == SicMode::imperfect)
        sum += ri.B / ri.Lambda1 * expand(ri.Psi / ri.Lambda1);
    return -kHalfInvLn2 * sum;
}

double high_snr_slope_estimate(std::span<const CurvePoint> curve)
{
    if (curve.size() < 2)
        throw std::invalid_argument("high_snr_slope_estimate: need at least 2 points");
    for (const auto& p : curve) {
        if (!std::isfinite(p.value) || !(p.rho > 0.0))
            throw std::invalid_argument("high_snr_slope_estimate: rates must be finite and rho positive");
    }
    const auto& p0 = curve[curve.size() - 2];
    const auto& p1 = curve[curve.size() - 1];
    const double dr = p1.value - p0.value;
    if (dr == 0.0)
        return 0.0;
    return dr / (std::log2(p1.rho) - std::log2(p0.rho));
}

}  // namespace twrnoma
