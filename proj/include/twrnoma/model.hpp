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

#ifndef TWRNOMA_MODEL_HPP
#define TWRNOMA_MODEL_HPP

#include "twrnoma/config.hpp"
#include "twrnoma/rng.hpp"

#include <array>

namespace twrnoma {

/// SINR threshold 2^(2R) - 1 for a two-slot target rate R (BPCU).
double gamma_threshold(double target_rate);

/// Threshold for a rate carried over `slots` orthogonal slots: 2^(slots R) - 1.
double gamma_threshold(double target_rate, int slots);

// One realization of the channel power gains.
struct ChannelDraw {
    std::array<double, 4> h{};  // |h_i|^2, node-indexed through gain()
    double g = 0.0;             // residual-IS gain |g|^2

    double gain(int node) const { return h.at(static_cast<std::size_t>(node - 1)); }
};

/// Draws |h_1|^2..|h_4|^2 then |g|^2, each exponential with its configured
/// mean, consuming the stream in that order.
ChannelDraw sample_channel_draw(const SystemConfig& config, CounterStream& stream);

// Linear SINRs of one signal pair for one draw.
struct SinrSet {
    double relay_strong = 0.0;       // relay detects x_l
    double relay_weak = 0.0;         // relay detects x_t after SIC
    double near_decodes_weak = 0.0;  // D_k detects x_t
    double near_decodes_own = 0.0;   // D_k detects x_l after SIC
    double far_decodes_weak = 0.0;   // D_r detects x_t
};

SinrSet sinr_set(const SystemConfig& config, const ChannelDraw& draw, const SignalIndex& idx);

}  // namespace twrnoma

#endif  // TWRNOMA_MODEL_HPP
