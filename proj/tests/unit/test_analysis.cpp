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
#include "twrnoma/montecarlo.hpp"

#include <doctest.h>

#include <array>
#include <cmath>

using namespace twrnoma;

namespace {

constexpr std::array kAll{Signal::x1, Signal::x2, Signal::x3, Signal::x4};

double three_sigma(double p, double n) { return 3.0 * std::sqrt(p * (1.0 - p) / n); }

}  // namespace

TEST_CASE("vanishing SNR means certain outage")
{
    const auto c = SystemConfig::reference().with_snr_db(-60.0);
    for (auto s : kAll)
        CHECK(outage(c, s).p_exact == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("infeasible thresholds are flagged, not evaluated")
{
    auto c = SystemConfig::reference().with_varpi(0.01, 0.1);
    c.rate[0] = 1.0;  // gamma = 3, varpi2 gamma = 0.3 > b1 = 0.2
    const auto r = outage(c, Signal::x1);
    CHECK_FALSE(r.feasible);
    CHECK(r.p_exact == 1.0);
    CHECK(outage_intermediates(c, SignalIndex::group(1)).tau_feasible == false);
}

TEST_CASE("intermediates are positive when feasible")
{
    const auto im = outage_intermediates(SystemConfig::reference(), SignalIndex::group(2));
    CHECK(im.tau_feasible);
    CHECK(im.xi_feasible);
    for (double v : {im.beta_l, im.beta_t, im.tau_l, im.xi_t, im.theta_l, im.varphi_t, im.lambda1})
        CHECK(v > 0.0);
    CHECK(im.theta_l == std::max(im.tau_l, im.xi_t));
}

TEST_CASE("exact outage agrees with simulation at 20 dB")
{
    const std::uint64_t n = 1000000;
    for (auto mode : {SicMode::imperfect, SicMode::perfect}) {
        const auto c = SystemConfig::reference().with_sic(mode);
        std::uint64_t point = 0;
        for (auto s : kAll) {
            const double p = outage(c, s).p_exact;
            const auto mc = mc_outage(c, index_of(s), kind_of(s), n, 31, {point++, 1});
            CHECK(std::abs(mc.mean - p) <= three_sigma(p, double(n)));
        }
    }
}

TEST_CASE("weak-signal outage: relay IS limit matches the no-IS branch")
{
    for (double db : {0.0, 20.0, 40.0}) {
        const auto base = SystemConfig::reference().with_snr_db(db);
        const auto tiny = base.with_varpi(1e-9, 0.01);
        const auto none = base.with_varpi(0.0, 0.01);
        for (auto s : {Signal::x2, Signal::x4})
            CHECK(outage(tiny, s).p_exact == doctest::Approx(outage(none, s).p_exact).epsilon(1e-8));
    }
}

TEST_CASE("floors")
{
    const auto c = SystemConfig::reference().with_snr_db(60.0);
    for (auto s : kAll) {
        const auto r = outage(c, s);
        CHECK(std::abs(r.p_exact - r.p_asymptotic) / r.p_asymptotic <= 0.05);
        const auto ip = outage(c.with_sic(SicMode::imperfect), s);
        const auto p = outage(c.with_sic(SicMode::perfect), s);
        CHECK(p.floor <= ip.floor);
    }
    const auto clean = c.with_varpi(0.0, 0.0).with_sic(SicMode::perfect);
    for (auto s : {Signal::x1, Signal::x3}) {
        const double v = outage(clean, s).p_asymptotic;
        CHECK(v > 0.0);
        CHECK(v < 1.0);
    }
}

TEST_CASE("diversity order estimates")
{
    for (auto mode : {SicMode::imperfect, SicMode::perfect}) {
        const auto c50 = SystemConfig::reference().with_snr_db(50.0).with_sic(mode);
        const auto c60 = SystemConfig::reference().with_snr_db(60.0).with_sic(mode);
        for (auto s : {Signal::x1, Signal::x2}) {
            const std::array<CurvePoint, 2> curve{{{c50.rho, outage(c50, s).p_exact}, {c60.rho, outage(c60, s).p_exact}}};
            CHECK(std::abs(diversity_order_estimate(curve)) <= 0.1);
        }
    }
    const std::array<CurvePoint, 2> power{{{1e3, 5.0 / 1e6}, {1e4, 5.0 / 1e8}}};
    CHECK(diversity_order_estimate(power) == doctest::Approx(2.0).epsilon(1e-9));
    const std::array<CurvePoint, 2> flat{{{1e3, 0.3}, {1e4, 0.3}}};
    CHECK(diversity_order_estimate(flat) == 0.0);
    const std::array<CurvePoint, 2> zero{{{1e3, 0.0}, {1e4, 0.1}}};
    CHECK_THROWS(diversity_order_estimate(zero));
}

TEST_CASE("outage values stay in [0, 1] over a wide SNR range")
{
    for (double db = -20.0; db <= 80.0; db += 10.0) {
        for (auto mode : {SicMode::imperfect, SicMode::perfect}) {
            const auto c = SystemConfig::reference().with_snr_db(db).with_sic(mode);
            for (auto s : kAll) {
                const auto r = outage(c, s);
                CHECK(r.p_exact >= 0.0);
                CHECK(r.p_exact <= 1.0);
                CHECK(r.exact_in_range);
            }
        }
    }
}
