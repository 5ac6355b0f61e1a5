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

#ifndef TWRNOMA_CLI_VALIDATION_HPP
#define TWRNOMA_CLI_VALIDATION_HPP

#include "twrnoma/config.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace twrnoma::cli {

enum class Profile { standard, strict };

Profile parse_profile(std::string_view text);
std::string_view to_string(Profile p);

struct ValidateOptions {
    Profile profile = Profile::standard;
    std::uint64_t iterations = 1000000;
    std::uint64_t seed = 1;
    unsigned workers = 1;
};

struct CheckResult {
    int id = 0;
    std::string title;
    std::string tolerance;  // human-readable band
    double observed = 0.0;  // worst deviation found
    bool passed = false;
    std::string detail;     // where the worst case sits, or what failed
    double seconds = 0.0;
};

struct ValidationReport {
    std::vector<CheckResult> checks;

    bool passed() const;
    std::string to_text() const;
};

/// Runs every analytic-vs-Monte-Carlo and analytic-vs-oracle check with
/// `base` as the reference configuration. The strict profile halves every
/// numeric band. Failures are report entries, never exceptions.
ValidationReport validate(const SystemConfig& base, const ValidateOptions& options = {});

/// A single check by number (1..11); throws std::out_of_range otherwise.
CheckResult run_check(int id, const SystemConfig& base, const ValidateOptions& options = {});

inline constexpr int kCheckCount = 11;

/// One line: "PASS  3  <title>  observed ... tolerance ...  (<detail>)".
std::string format_check(const CheckResult& c);

}  // namespace twrnoma::cli

#endif  // TWRNOMA_CLI_VALIDATION_HPP
