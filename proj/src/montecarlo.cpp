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

#include "twrnoma/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace twrnoma {

namespace {

constexpr double kZ95 = 1.959963984540054;
constexpr std::uint64_t kWilsonCount = 10;

struct Accum {
    double sum = 0.0;
    double sum_sq = 0.0;
    std::uint64_t hits = 0;
};

void require_trials(std::uint64_t n)
{
    if (n < kMinTrials)
        throw std::invalid_argument("Monte Carlo: need at least " + std::to_string(kMinTrials) + " trials, got " +
                                    std::to_string(n));
}

// Chunks are fixed-size and reduced in index order, so the result does not
// depend on how many workers ran them.
template <typename TrialFn>
Accum run_chunks(std::uint64_t n, unsigned workers, TrialFn trial)
{
    const std::uint64_t chunks = (n + kChunkTrials - 1) / kChunkTrials;
    std::vector<Accum> partial(chunks);

    auto work_chunk = [&](std::uint64_t c) {
        Accum acc;
        const std::uint64_t end = std::min(n, (c + 1) * kChunkTrials);
        for (std::uint64_t i = c * kChunkTrials; i < end; ++i)
            trial(i, acc);
        partial[c] = acc;
    };

    const unsigned pool = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(chunks)));
    if (pool == 1) {
        for (std::uint64_t c = 0; c < chunks; ++c)
            work_chunk(c);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::jthread> threads;
        threads.reserve(pool);
        for (unsigned w = 0; w < pool; ++w) {
            threads.emplace_back([&] {
                for (std::uint64_t c = next++; c < chunks; c = next++)
                    work_chunk(c);
            });
        }
    }

    Accum total;
    for (const auto& p : partial) {
        total.sum += p.sum;
        total.sum_sq += p.sum_sq;
        total.hits += p.hits;
    }
    return total;
}

}  // namespace

McEstimate proportion_estimate(std::uint64_t successes, std::uint64_t n, std::uint64_t seed)
{
    if (n == 0 || successes > n)
        throw std::invalid_argument("proportion_estimate: need 0 <= successes <= n, n >= 1");
    McEstimate e;
    e.n = n;
    e.seed = seed;
    const double nn = static_cast<double>(n);
    const double p = static_cast<double>(successes) / nn;
    e.mean = p;
    if (successes < kWilsonCount || n - successes < kWilsonCount) {
        const double z2 = kZ95 * kZ95;
        const double denom = 1.0 + z2 / nn;
        const double center = (p + z2 / (2.0 * nn)) / denom;
        const double half = kZ95 / denom * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn));
        e.ci_low = std::max(0.0, std::min(p, center - half));
        e.ci_high = std::min(1.0, std::max(p, center + half));
        e.half_width_95 = 0.5 * (e.ci_high - e.ci_low);
    } else {
        e.half_width_95 = kZ95 * std::sqrt(p * (1.0 - p) / nn);
        e.ci_low = std::max(0.0, p - e.half_width_95);
        e.ci_high = std::min(1.0, p + e.half_width_95);
    }
    return e;
}

McEstimate mean_estimate(double sum, double sum_sq, std::uint64_t n, std::uint64_t seed)
{
    if (n < 2)
        throw std::invalid_argument("mean_estimate: need n >= 2");
    McEstimate e;
    e.n = n;
    e.seed = seed;
    const double nn = static_cast<double>(n);
    e.mean = sum / nn;
    const double var = std::max(0.0, (sum_sq - nn * e.mean * e.mean) / (nn - 1.0));
    e.half_width_95 = kZ95 * std::sqrt(var / nn);
    e.ci_low = e.mean - e.half_width_95;
    e.ci_high = e.mean + e.half_width_95;
    return e;
}

ChannelDraw trial_draw(const SystemConfig& config, std::uint64_t seed, std::uint64_t point_index, std::uint64_t trial)
{
    CounterStream stream(seed, point_index, trial);
    return sample_channel_draw(config, stream);
}

bool strong_succeeds(const SinrSet& s, double gamma_l, double gamma_t)
{
    return s.relay_strong > gamma_l && s.near_decodes_weak > gamma_t && s.near_decodes_own > gamma_l;
}

bool weak_succeeds(const SinrSet& s, double gamma_l, double gamma_t)
{
    return s.relay_weak > gamma_t && s.relay_strong > gamma_l && s.near_decodes_weak > gamma_t &&
           s.far_decodes_weak > gamma_t;
}

double strong_rate(const SinrSet& s) { return 0.5 * std::log2(1.0 + std::min(s.relay_strong, s.near_decodes_own)); }

double weak_rate(const SinrSet& s)
{
    return 0.5 * std::log2(1.0 + std::min({s.relay_weak, s.near_decodes_weak, s.far_decodes_weak}));
}

McEstimate mc_outage(const SystemConfig& config, const SignalIndex& idx, SignalKind kind, std::uint64_t n,
                     std::uint64_t seed, const McOptions& options)
{
    require_trials(n);
    config.validate();
    const double gl = gamma_threshold(config.rate_of(idx.l));
    const double gt = gamma_threshold(config.rate_of(idx.t));
    const auto key = substream_key(seed, options.point_index);

    const auto total = run_chunks(n, options.workers, [&](std::uint64_t i, Accum& acc) {
        CounterStream stream(key, i);
        const auto s = sinr_set(config, sample_channel_draw(config, stream), idx);
        const bool ok = kind == SignalKind::strong ? strong_succeeds(s, gl, gt) : weak_succeeds(s, gl, gt);
        acc.hits += ok ? 0 : 1;
    });
    return proportion_estimate(total.hits, n, seed);
}

McEstimate mc_ergodic(const SystemConfig& config, const SignalIndex& idx, SignalKind kind, std::uint64_t n,
                      std::uint64_t seed, const McOptions& options)
{
    require_trials(n);
    config.validate();
    const auto key = substream_key(seed, options.point_index);

    const auto total = run_chunks(n, options.workers, [&](std::uint64_t i, Accum& acc) {
        CounterStream stream(key, i);
        const auto s = sinr_set(config, sample_channel_draw(config, stream), idx);
        const double r = kind == SignalKind::strong ? strong_rate(s) : weak_rate(s);
        acc.sum += r;
        acc.sum_sq += r * r;
    });
    return mean_estimate(total.sum, total.sum_sq, n, seed);
}

OmaEstimate mc_oma_baseline(const SystemConfig& config, Signal signal, std::uint64_t n, std::uint64_t seed,
                            const McOptions& options)
{
    require_trials(n);
    config.validate();
    const int up = node_of(signal);
    // x1 -> D3, x2 -> D4, x3 -> D1, x4 -> D2
    const int down = up <= 2 ? up + 2 : up - 2;
    const double threshold = gamma_threshold(config.rate_of(up), 5);
    const double rho = config.rho;
    const auto key = substream_key(seed, options.point_index);

    const auto total = run_chunks(n, options.workers, [&](std::uint64_t i, Accum& acc) {
        CounterStream stream(key, i);
        const auto d = sample_channel_draw(config, stream);
        const double snr = rho * std::min(d.gain(up), d.gain(down));
        acc.hits += snr > threshold ? 0 : 1;
        const double r = 0.2 * std::log2(1.0 + snr);
        acc.sum += r;
        acc.sum_sq += r * r;
    });
    return {proportion_estimate(total.hits, n, seed), mean_estimate(total.sum, total.sum_sq, n, seed)};
}

}  // namespace twrnoma
