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

#include "twrnoma/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace twrnoma {

std::string_view to_string(TransmissionMode mode)
{
    return mode == TransmissionMode::delay_limited ? "delay_limited" : "delay_tolerant";
}

SystemThroughput throughput_delay_limited(std::span<const double> outages, std::span<const double> target_rates)
{
    if (outages.size() != 4 || target_rates.size() != 4)
        throw std::invalid_argument("throughput_delay_limited: expected 4 outages and 4 rates, got " +
                                    std::to_string(outages.size()) + " and " + std::to_string(target_rates.size()));
    SystemThroughput t;
    t.mode = TransmissionMode::delay_limited;
    for (std::size_t i = 0; i < 4; ++i) {
        if (!(outages[i] >= 0.0 && outages[i] <= 1.0))
            throw std::invalid_argument("throughput_delay_limited: outage of x" + std::to_string(i + 1) +
                                        " outside [0,1]");
        if (!(target_rates[i] >= 0.0))
            throw std::invalid_argument("throughput_delay_limited: negative target rate");
        t.contribution[i] = (1.0 - outages[i]) * target_rates[i];
        t.value += t.contribution[i];
    }
    return t;
}

SystemThroughput throughput_delay_tolerant(std::span<const double> rates)
{
    if (rates.size() != 4)
        throw std::invalid_argument("throughput_delay_tolerant: expected 4 rates, got " +
                                    std::to_string(rates.size()));
    SystemThroughput t;
    t.mode = TransmissionMode::delay_tolerant;
    for (std::size_t i = 0; i < 4; ++i) {
        if (!(rates[i] >= 0.0) || !std::isfinite(rates[i]))
            throw std::invalid_argument("throughput_delay_tolerant: rate of x" + std::to_string(i + 1) +
                                        " must be finite and >= 0");
        t.contribution[i] = rates[i];
        t.value += rates[i];
    }
    return t;
}

double energy_efficiency(const SystemThroughput& throughput, const SystemConfig& config)
{
    if (!(config.T > 0.0) || !(config.pu > 0.0) || !(config.pr > 0.0))
        throw std::invalid_argument("energy_efficiency: T, Pu and Pr must be > 0");
    return 2.0 * throughput.value / (config.T * config.pu + config.T * config.pr);
}

}  // namespace twrnoma
