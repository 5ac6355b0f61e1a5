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

#ifndef TWRNOMA_CLI_PRESETS_HPP
#define TWRNOMA_CLI_PRESETS_HPP

#include "twrnoma/cli/sweep.hpp"
#include "twrnoma/config.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace twrnoma::cli {

/// One curve family of a figure reproduction. Figures that compare several
/// parameter values expand into one variant per value.
struct PresetVariant {
    std::string suffix;  // empty for single-variant presets
    SweepSpec spec;
    SystemConfig config;
};

std::vector<std::string_view> preset_names();

/// `base` supplies every parameter the preset leaves open. Throws
/// ConfigError for an unknown name.
std::vector<PresetVariant> make_preset(std::string_view name, const SystemConfig& base);

/// out.csv + "varpi0.01" -> out_varpi0.01.csv
std::filesystem::path variant_path(const std::filesystem::path& base, const std::string& suffix);

}  // namespace twrnoma::cli

#endif  // TWRNOMA_CLI_PRESETS_HPP
