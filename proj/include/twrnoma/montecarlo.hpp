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

#ifndef TWRNOMA_MONTECARLO_HPP
#define TWRNOMA_MONTECARLO_HPP

#include "twrnoma/config.hpp"
#include "twrnoma/model.hpp"

#include <cstdint>

namespace twrnoma {

struct McEstimate {
    double mean = 0.0;
    double half_width_95 = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
};

struct McOptions {
    // Selects the substream; sweeps pass the grid index, or 0 for common
    // random numbers across the grid.
    std::uint64_t point_index = 0;
    unsigned workers = 1;
};

inline constexpr std::uint64_t kMinTrials = 1000;
inline constexpr std::uint64_t kChunkTrials = std::uint64_t{1} << 14;

/// Normal-approximation 95% interval for k successes in n trials, switching
/// to the Wilson score interval when fewer than 10 successes or failures.
McEstimate proportion_estimate(std::uint64_t successes, std::uint64_t n, std::uint64_t seed = 0);

/// Normal-approximation 95% interval from a running sum and sum of squares.
McEstimate mean_estimate(double sum, double sum_sq, std::uint64_t n, std::uint64_t seed = 0);

/// Channel draw of one trial; every trial owns its own Philox counter range.
ChannelDraw trial_draw(const SystemConfig& config, std::uint64_t seed, std::uint64_t point_index,
                       std::uint64_t trial);

/// Success events of one realization (strict threshold comparisons).
bool strong_succeeds(const SinrSet& s, double gamma_l, double gamma_t);
bool weak_succeeds(const SinrSet& s, double gamma_l, double gamma_t);

/// (1/2) log2(1 + min(...)) over the signal's detection chain.
double strong_rate(const SinrSet& s);
double weak_rate(const SinrSet& s);

McEstimate mc_outage(const SystemConfig& config, const SignalIndex& idx, SignalKind kind, std::uint64_t n,
                     std::uint64_t seed, const McOptions& options = {});

McEstimate mc_ergodic(const SystemConfig& config, const SignalIndex& idx, SignalKind kind, std::uint64_t n,
                      std::uint64_t seed, const McOptions& options = {});

struct OmaEstimate {
    McEstimate outage;
    McEstimate rate;
};

/// Five orthogonal full-power slots; each signal's end-to-end SNR is the
/// minimum of its uplink and downlink hop.
OmaEstimate mc_oma_baseline(const SystemConfig& config, Signal signal, std::uint64_t n, std::uint64_t seed,
                            const McOptions& options = {});

}  // namespace twrnoma

#endif  // TWRNOMA_MONTECARLO_HPP
