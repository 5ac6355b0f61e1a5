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
#include "twrnoma/ergodic.hpp"
#include "twrnoma/metrics.hpp"
#include "twrnoma/montecarlo.hpp"

#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

using namespace twrnoma;

namespace {
const std::array<double, 4> kRates{0.1, 0.01, 0.1, 0.01};
}

TEST_CASE("delay-limited throughput")
{
    const std::array<double, 4> ones{1, 1, 1, 1};
    const std::array<double, 4> zeros{};
    CHECK(throughput_delay_limited(ones, kRates).value == 0.0);
    const auto t = throughput_delay_limited(zeros, kRates);
    CHECK(t.value == doctest::Approx(0.22).epsilon(1e-15));
    CHECK(t.mode == TransmissionMode::delay_limited);
    CHECK(t.contribution[1] == doctest::Approx(0.01));

    const std::vector<double> three{0, 0, 0};
    CHECK_THROWS(throughput_delay_limited(three, kRates));
    const std::array<double, 4> bad{0, 0, 0, 1.5};
    CHECK_THROWS(throughput_delay_limited(bad, kRates));
}

TEST_CASE("delay-limited throughput: analysis vs simulated outages at 30 dB")
{
    const auto c = SystemConfig::reference().with_snr_db(30.0);
    std::array<double, 4> pa{};
    std::array<double, 4> pm{};
    double var = 0.0;
    for (int i = 0; i < 4; ++i) {
        const auto s = static_cast<Signal>(i + 1);
        pa[i] = outage(c, s).p_exact;
        const auto e = mc_outage(c, index_of(s), kind_of(s), 1000000, 8, {std::uint64_t(i), 1});
        pm[i] = e.mean;
        var += std::pow(kRates[i] * e.half_width_95, 2);
    }
    const double a = throughput_delay_limited(pa, kRates).value;
    const double m = throughput_delay_limited(pm, kRates).value;
    CHECK(std::abs(a - m) <= std::sqrt(var));
}

TEST_CASE("delay-tolerant throughput")
{
    const std::array<double, 4> zeros{};
    CHECK(throughput_delay_tolerant(zeros).value == 0.0);

    const auto c = SystemConfig::reference().with_varpi(0.0, 0.0).with_sic(SicMode::perfect);
    auto total = [](const SystemConfig& k) {
        std::array<double, 4> r{};
        for (int g : {1, 2}) {
            const auto idx = SignalIndex::group(g);
            r[idx.l - 1] = ergodic_rate_strong_closed(k, idx);
            r[idx.t - 1] = ergodic_rate_weak_numeric(k, idx);
        }
        return std::pair{throughput_delay_tolerant(r), r};
    };
    const auto [t40, r40] = total(c.with_snr_db(40.0));
    CHECK(t40.value == r40[0] + r40[1] + r40[2] + r40[3]);
    const auto [t50, r50] = total(c.with_snr_db(50.0));
    const auto [t60, r60] = total(c.with_snr_db(60.0));
    CHECK(std::abs(t60.value - t50.value) / t50.value < 0.02);
}

TEST_CASE("energy efficiency")
{
    auto c = SystemConfig::reference();
    c.pu = 10.0;
    c.pr = 10.0;
    c.T = 1.0;
    SystemThroughput t{TransmissionMode::delay_limited, 0.22, {}};
    CHECK(energy_efficiency(t, c) == doctest::Approx(0.022).epsilon(1e-15));
    CHECK(energy_efficiency({TransmissionMode::delay_limited, 0.0, {}}, c) == 0.0);
    auto d = c;
    d.pu *= 2;
    d.pr *= 2;
    CHECK(energy_efficiency(t, d) == doctest::Approx(energy_efficiency(t, c) / 2));
}
