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

#include "twrnoma/config.hpp"

#include <cmath>
#include <sstream>

namespace twrnoma {

namespace {

constexpr double kSumTolerance = 1e-12;
constexpr double kGeometryTolerance = 1e-12;

[[noreturn]] void fail(const std::string& invariant, const std::string& detail)
{
    throw ConfigError("invalid configuration: invariant '" + invariant + "' violated (" + detail + ")");
}

std::string num(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

bool close_rel(double x, double y, double tol)
{
    return std::abs(x - y) <= tol * std::max(std::abs(x), std::abs(y));
}

}  // namespace

std::string_view to_string(SicMode mode)
{
    return mode == SicMode::imperfect ? "ipsic" : "psic";
}

SicMode parse_sic_mode(std::string_view text)
{
    if (text == "ipsic" || text == "ipSIC" || text == "imperfect")
        return SicMode::imperfect;
    if (text == "psic" || text == "pSIC" || text == "perfect")
        return SicMode::perfect;
    throw ConfigError("unknown SIC mode '" + std::string(text) + "' (expected ipsic or psic)");
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

void SystemConfig::validate() const
{
    if (!(rho > 0.0) || !std::isfinite(rho))
        fail("rho > 0", "rho = " + num(rho));

    for (int i = 1; i <= 4; ++i) {
        const auto si = std::to_string(i);
        if (!(a_of(i) > 0.0) || !std::isfinite(a_of(i)))
            fail("a" + si + " > 0", "a" + si + " = " + num(a_of(i)));
        if (!(b_of(i) > 0.0) || !std::isfinite(b_of(i)))
            fail("b" + si + " > 0", "b" + si + " = " + num(b_of(i)));
        if (!(omega_of(i) > 0.0) || !std::isfinite(omega_of(i)))
            fail("omega" + si + " > 0", "omega" + si + " = " + num(omega_of(i)));
        if (!(rate_of(i) >= 0.0) || !std::isfinite(rate_of(i)))
            fail("R" + si + " >= 0", "R" + si + " = " + num(rate_of(i)));
    }

    if (std::abs(b[0] + b[1] - 1.0) > kSumTolerance)
        fail("b1 + b2 = 1", "b1 + b2 = " + num(b[0] + b[1]));
    if (std::abs(b[2] + b[3] - 1.0) > kSumTolerance)
        fail("b3 + b4 = 1", "b3 + b4 = " + num(b[2] + b[3]));
    if (!(b[1] > b[0]))
        fail("b2 > b1", "b1 = " + num(b[0]) + ", b2 = " + num(b[1]));
    if (!(b[3] > b[2]))
        fail("b4 > b3", "b3 = " + num(b[2]) + ", b4 = " + num(b[3]));

    if (!(varpi1 >= 0.0 && varpi1 <= 1.0))
        fail("varpi1 in [0,1]", "varpi1 = " + num(varpi1));
    if (!(varpi2 >= 0.0 && varpi2 <= 1.0))
        fail("varpi2 in [0,1]", "varpi2 = " + num(varpi2));
    if (!(omega_i > 0.0) || !std::isfinite(omega_i))
        fail("omega_I > 0", "omega_I = " + num(omega_i));

    if (alpha > 0.0 && d1 > 0.0 && d2 > 0.0) {
        const double near = std::pow(d1, -alpha);
        const double far = std::pow(d2, -alpha);
        if (!close_rel(omega[0], near, kGeometryTolerance) || !close_rel(omega[2], near, kGeometryTolerance))
            fail("omega1 = omega3 = d1^-alpha", "d1^-alpha = " + num(near) + ", omega1 = " + num(omega[0]) +
                                                    ", omega3 = " + num(omega[2]));
        if (!close_rel(omega[1], far, kGeometryTolerance) || !close_rel(omega[3], far, kGeometryTolerance))
            fail("omega2 = omega4 = d2^-alpha", "d2^-alpha = " + num(far) + ", omega2 = " + num(omega[1]) +
                                                    ", omega4 = " + num(omega[3]));
    }

    if (!(T > 0.0))
        fail("T > 0", "T = " + num(T));
    if (!(pu > 0.0))
        fail("Pu > 0", "Pu = " + num(pu));
    if (!(pr > 0.0))
        fail("Pr > 0", "Pr = " + num(pr));
}

SystemConfig SystemConfig::with_snr_db(double snr_db) const
{
    auto c = *this;
    c.rho = db_to_linear(snr_db);
    return c;
}

SystemConfig SystemConfig::with_sic(SicMode mode) const
{
    auto c = *this;
    c.sic = mode;
    return c;
}

SystemConfig SystemConfig::with_varpi(double v1, double v2) const
{
    auto c = *this;
    c.varpi1 = v1;
    c.varpi2 = v2;
    return c;
}

SystemConfig SystemConfig::with_geometry(double path_loss_exponent, double near_m, double far_m) const
{
    auto c = *this;
    c.alpha = path_loss_exponent;
    c.d1 = near_m;
    c.d2 = far_m;
    const double near = std::pow(near_m, -path_loss_exponent);
    const double far = std::pow(far_m, -path_loss_exponent);
    c.omega = {near, far, near, far};
    return c;
}

SystemConfig SystemConfig::with_omegas(const std::array<double, 4>& variances) const
{
    auto c = *this;
    c.omega = variances;
    c.alpha = 0.0;
    c.d1 = 0.0;
    c.d2 = 0.0;
    return c;
}

SystemConfig SystemConfig::reference()
{
    SystemConfig c;
    c.rho = db_to_linear(20.0);
    c.a = {0.8, 0.2, 0.8, 0.2};
    c.b = {0.2, 0.8, 0.2, 0.8};
    c.varpi1 = 0.01;
    c.varpi2 = 0.01;
    c.omega_i = db_to_linear(-20.0);
    c.rate = {0.1, 0.01, 0.1, 0.01};
    c.sic = SicMode::imperfect;
    c.T = 1.0;
    c.pu = 10.0;
    c.pr = 10.0;
    return c.with_geometry(2.0, 2.0, 10.0);
}

SignalIndex SignalIndex::make(int l, int t)
{
    if (l != 1 && l != 3)
        throw std::invalid_argument("signal index: l must be 1 or 3, got " + std::to_string(l));
    if (t != 2 && t != 4)
        throw std::invalid_argument("signal index: t must be 2 or 4, got " + std::to_string(t));
    return SignalIndex{l, 4 - l, t, 6 - t};
}

SignalIndex SignalIndex::group(int g)
{
    if (g == 1)
        return make(1, 2);
    if (g == 2)
        return make(3, 4);
    throw std::invalid_argument("signal index: group must be 1 or 2, got " + std::to_string(g));
}

SignalIndex index_of(Signal s)
{
    return node_of(s) <= 2 ? SignalIndex::group(1) : SignalIndex::group(2);
}

std::string_view to_string(Signal s)
{
    switch (s) {
    case Signal::x1: return "x1";
    case Signal::x2: return "x2";
    case Signal::x3: return "x3";
    case Signal::x4: return "x4";
    }
    return "?";
}

Signal parse_signal(std::string_view text)
{
    if (text == "x1") return Signal::x1;
    if (text == "x2") return Signal::x2;
    if (text == "x3") return Signal::x3;
    if (text == "x4") return Signal::x4;
    throw std::invalid_argument("unknown signal '" + std::string(text) + "' (expected x1..x4)");
}

}  // namespace twrnoma
