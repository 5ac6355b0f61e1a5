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

#include "twrnoma/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace twrnoma {

double gamma_threshold(double target_rate) { return gamma_threshold(target_rate, 2); }

double gamma_threshold(double target_rate, int slots)
{
    if (!(target_rate >= 0.0))
        throw std::invalid_argument("gamma_threshold: target rate must be >= 0, got " + std::to_string(target_rate));
    return std::expm1(static_cast<double>(slots) * target_rate * std::log(2.0));
}

ChannelDraw sample_channel_draw(const SystemConfig& config, CounterStream& stream)
{
    ChannelDraw d;
    for (int i = 0; i < 4; ++i)
        d.h[static_cast<std::size_t>(i)] = stream.next_exponential(config.omega[static_cast<std::size_t>(i)]);
    d.g = stream.next_exponential(config.omega_i);
    return d;
}

SinrSet sinr_set(const SystemConfig& config, const ChannelDraw& draw, const SignalIndex& idx)
{
    const double rho = config.rho;
    const double eps = config.epsilon();
    const double hl = draw.gain(idx.l);
    const double ht = draw.gain(idx.t);
    const double hk = draw.gain(idx.k);
    const double hr = draw.gain(idx.r);

    // Inter-antenna leakage of the other group at the relay.
    const double relay_is = rho * config.varpi1 * (hk * config.a_of(idx.k) + hr * config.a_of(idx.r));

    SinrSet s;
    s.relay_strong = rho * hl * config.a_of(idx.l) / (rho * ht * config.a_of(idx.t) + relay_is + 1.0);
    s.relay_weak = rho * ht * config.a_of(idx.t) / (eps * rho * draw.g + relay_is + 1.0);

    const double bl = config.b_of(idx.l);
    const double bt = config.b_of(idx.t);
    s.near_decodes_weak = rho * hk * bt / (rho * hk * bl + rho * config.varpi2 * hk + 1.0);
    s.near_decodes_own = rho * hk * bl / (eps * rho * draw.g + rho * config.varpi2 * hk + 1.0);
    s.far_decodes_weak = rho * hr * bt / (rho * hr * bl + rho * config.varpi2 * hr + 1.0);
    return s;
}

}  // namespace twrnoma
