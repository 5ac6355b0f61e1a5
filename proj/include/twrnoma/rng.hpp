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

#ifndef TWRNOMA_RNG_HPP
#define TWRNOMA_RNG_HPP

#include <array>
#include <cstdint>

namespace twrnoma {

/// Philox4x32-10 block function. Stateless: the output is a pure function
/// of (counter, key).
struct Philox4x32 {
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Counter block(Counter ctr, Key key);
};

std::uint64_t splitmix64(std::uint64_t x);

/// Derives the Philox key for a substream from (master seed, point index).
Philox4x32::Key substream_key(std::uint64_t master_seed, std::uint64_t point_index);

// A sequential stream over one (key, replicate) pair. Consecutive blocks
// advance the low counter words; the replicate index occupies the high
// words, so every replicate is an independent, randomly addressable
// sequence and trial results do not depend on how trials are partitioned.
class CounterStream {
public:
    CounterStream(Philox4x32::Key key, std::uint64_t replicate);
    CounterStream(std::uint64_t master_seed, std::uint64_t point_index, std::uint64_t replicate)
        : CounterStream(substream_key(master_seed, point_index), replicate)
    {}

    std::uint32_t next_u32();
    std::uint64_t next_u64();

    /// Uniform on (0, 1], 53-bit resolution.
    double next_uniform_open0();

    /// Exponential with the given mean (power gain of a Rayleigh channel).
    double next_exponential(double mean);

private:
    void refill();

    Philox4x32::Key key_;
    std::uint64_t replicate_;
    std::uint64_t block_index_ = 0;
    Philox4x32::Counter buffer_{};
    int used_ = 4;
};

}  // namespace twrnoma

#endif  // TWRNOMA_RNG_HPP
