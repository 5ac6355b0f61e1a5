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

#ifndef TWRNOMA_METRICS_HPP
#define TWRNOMA_METRICS_HPP

#include "twrnoma/config.hpp"

#include <array>
#include <span>
#include <string_view>

namespace twrnoma {

enum class TransmissionMode { delay_limited, delay_tolerant };

std::string_view to_string(TransmissionMode mode);

struct SystemThroughput {
    TransmissionMode mode = TransmissionMode::delay_limited;
    double value = 0.0;                    // BPCU
    std::array<double, 4> contribution{};  // x1..x4
};

/// sum_i (1 - P_i) R_i. Throws on size mismatch or P outside [0, 1].
SystemThroughput throughput_delay_limited(std::span<const double> outages, std::span<const double> target_rates);

/// sum of the four ergodic rates. Throws on size mismatch or negative rate.
SystemThroughput throughput_delay_tolerant(std::span<const double> rates);

/// 2 R / (T Pu + T Pr).
double energy_efficiency(const SystemThroughput& throughput, const SystemConfig& config);

}  // namespace twrnoma

#endif  // TWRNOMA_METRICS_HPP
