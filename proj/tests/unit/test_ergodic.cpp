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
#include "twrnoma/montecarlo.hpp"
#include "twrnoma/quadrature.hpp"

#include <doctest.h>

#include <array>
#include <cmath>

using namespace twrnoma;

namespace {

SystemConfig clean(double db, SicMode m = SicMode::imperfect)
{
    return SystemConfig::reference().with_varpi(0.0, 0.0).with_snr_db(db).with_sic(m);
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// 1-D integral form of the x_l rate with no IS, straight from the channel
// statistics.
double strong_oracle(const SystemConfig& c, const SignalIndex& i)
{
    const double al = c.a_of(i.l), bl = c.b_of(i.l), at = c.a_of(i.t);
    const double wl = c.omega_of(i.l), wk = c.omega_of(i.k), wt = c.omega_of(i.t);
    const double psi = (al * wl + bl * wk) / (c.rho * al * bl * wl * wk);
    const double l1 = c.epsilon() * c.omega_i / (bl * wk);
    const double l2 = at * wt / (al * wl);
    const auto f = [=](double u) { return std::exp(-u * psi) / ((1 + u) * (1 + l1 * u) * (1 + l2 * u)); };
    return integrate_semi_infinite(f, {1e-14, 1e-12, 10000, TailMap::rational}, 1.0 / psi) / (2.0 * std::log(2.0));
}

}  // namespace

TEST_CASE("partial-fraction coefficients sum to one")
{
    const auto ri = rate_intermediates(clean(20.0), SignalIndex::group(1));
    CHECK(ri.A + ri.B + ri.C == doctest::Approx(1.0).epsilon(1e-12));
    for (double u : {0.0, 0.3, 5.0, 400.0}) {
        const double lhs = 1.0 / ((1 + u) * (1 + ri.Lambda1 * u) * (1 + ri.Lambda2 * u));
        const double rhs = ri.A / (1 + u) + ri.B / (1 + ri.Lambda1 * u) + ri.C / (1 + ri.Lambda2 * u);
        CHECK(rhs == doctest::Approx(lhs).epsilon(1e-10));
    }
}

TEST_CASE("strong-signal closed form matches its integral")
{
    for (auto m : {SicMode::imperfect, SicMode::perfect})
        for (double db : {0.0, 20.0, 40.0, 60.0})
            for (int g : {1, 2}) {
                const auto c = clean(db, m);
                const auto idx = SignalIndex::group(g);
                CHECK(rel(ergodic_rate_strong_closed(c, idx), strong_oracle(c, idx)) <= 1e-8);
            }
}

TEST_CASE("perfect SIC never lowers the rate")
{
    for (double db : {0.0, 10.0, 20.0, 30.0, 40.0}) {
        const auto idx = SignalIndex::group(1);
        CHECK(ergodic_rate_strong_closed(clean(db, SicMode::perfect), idx) >=
              ergodic_rate_strong_closed(clean(db, SicMode::imperfect), idx));
        CHECK(ergodic_rate_weak_numeric(clean(db, SicMode::perfect), idx) >=
              ergodic_rate_weak_numeric(clean(db, SicMode::imperfect), idx));
    }
}

TEST_CASE("closed forms against simulation")
{
    const std::uint64_t n = 1000000;
    const auto g1 = SignalIndex::group(1);
    const auto p30 = clean(30.0, SicMode::perfect);
    CHECK(rel(ergodic_rate_strong_closed(p30, g1), mc_ergodic(p30, g1, SignalKind::strong, n, 3).mean) <= 0.02);
    const auto p20 = clean(20.0, SicMode::perfect);
    CHECK(rel(ergodic_rate_weak_numeric(p20, g1), mc_ergodic(p20, g1, SignalKind::weak, n, 3, {1, 1}).mean) <= 0.02);
}

// The triple-integral form treats the user-side IS and the relay's k-link
// leakage as independent of |h_k|^2; the simulated SINRs share it.
TEST_CASE("strong-signal rate with interference: integral form vs simulation" * doctest::test_suite("model_gap"))
{
    const auto c = SystemConfig::reference();  // 20 dB, varpi = 0.01, Omega_I = -20 dB
    const auto g1 = SignalIndex::group(1);
    const double a = ergodic_rate_strong_numeric(c, g1);
    const double mc = mc_ergodic(c, g1, SignalKind::strong, 1000000, 17).mean;
    CHECK(rel(a, mc) <= 0.02);
}

TEST_CASE("strong-signal rate with interference: limits and monotonicity")
{
    const auto c = SystemConfig::reference();
    const auto g1 = SignalIndex::group(1);
    CHECK(ergodic_rate_strong_numeric(c.with_snr_db(-40.0), g1) <= 1e-4);
    double prev = 0.0;
    for (double db = 0.0; db <= 40.0; db += 10.0) {
        const double r = ergodic_rate_strong_numeric(c.with_snr_db(db), g1);
        CHECK(r >= prev);
        prev = r;
    }
}

TEST_CASE("preconditions")
{
    const auto c = SystemConfig::reference();
    CHECK_THROWS_AS(ergodic_rate_strong_closed(c, SignalIndex::group(1)), PreconditionError);
    CHECK_THROWS_AS(ergodic_rate_weak_numeric(c, SignalIndex::group(1)), PreconditionError);
    CHECK_THROWS_AS(ergodic_rate_strong_numeric(c.with_sic(SicMode::perfect), SignalIndex::group(1)),
                    PreconditionError);
}

TEST_CASE("weak-signal high-SNR ceiling")
{
    auto c = clean(40.0);
    c.omega_i = 1e-14;
    const auto g1 = SignalIndex::group(1);
    const double limit = std::log(1.0 + 0.8 / 0.2) / (2.0 * std::log(2.0));
    CHECK(ergodic_rate_weak_highsnr(c, g1) == doctest::Approx(limit).epsilon(1e-9));

    const auto d = clean(40.0);
    const double v = ergodic_rate_weak_highsnr(d, g1);
    CHECK(v > 0.0);
    CHECK(std::isfinite(v));
    CHECK(ergodic_rate_weak_highsnr(clean(70.0), g1) == v);
}

TEST_CASE("strong-signal high-SNR expansion")
{
    for (auto m : {SicMode::imperfect, SicMode::perfect}) {
        const auto c = clean(50.0, m);
        const auto g1 = SignalIndex::group(1);
        CHECK(rel(ergodic_rate_strong_asymptotic(c, g1), ergodic_rate_strong_closed(c, g1)) <= 0.05);
        const std::array<CurvePoint, 2> curve{
            {{c.rho, ergodic_rate_strong_asymptotic(c, g1)},
             {clean(60.0, m).rho, ergodic_rate_strong_asymptotic(clean(60.0, m), g1)}}};
        CHECK(std::abs(high_snr_slope_estimate(curve)) <= 0.05);
    }
    CHECK(ergodic_rate_strong_asymptotic(clean(50.0, SicMode::perfect), SignalIndex::group(2)) >=
          ergodic_rate_strong_asymptotic(clean(50.0, SicMode::imperfect), SignalIndex::group(2)));
}

TEST_CASE("slope estimator")
{
    const std::array<CurvePoint, 2> lin{{{1e5, std::log2(1e5)}, {1e6, std::log2(1e6)}}};
    CHECK(high_snr_slope_estimate(lin) == doctest::Approx(1.0).epsilon(1e-9));
    const std::array<CurvePoint, 2> flat{{{1e5, 2.0}, {1e6, 2.0}}};
    CHECK(high_snr_slope_estimate(flat) == 0.0);
    const auto g1 = SignalIndex::group(1);
    const std::array<CurvePoint, 2> closed{
        {{clean(50.0).rho, ergodic_rate_strong_closed(clean(50.0), g1)},
         {clean(60.0).rho, ergodic_rate_strong_closed(clean(60.0), g1)}}};
    CHECK(std::abs(high_snr_slope_estimate(closed)) <= 0.05);
}
