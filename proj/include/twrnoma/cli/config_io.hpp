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

#ifndef TWRNOMA_CLI_CONFIG_IO_HPP
#define TWRNOMA_CLI_CONFIG_IO_HPP

#include "twrnoma/config.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace twrnoma::cli {

inline constexpr int kSchemaVersion = 1;

/// Parsed configuration file. snr_db is where `validate` evaluates
/// single-point checks; sweeps override it.
struct LoadedConfig {
    SystemConfig system;
    double snr_db = 20.0;
};

/// Flat `section.key = value` text, `#` comments. `schema_version` is
/// required; unknown keys are errors; absent keys keep the reference values.
/// Throws ConfigError naming the line or the violated invariant.
LoadedConfig parse_config(std::string_view text);
LoadedConfig load_config(const std::filesystem::path& path);

/// The reference parameter set in the file format above.
std::string default_config_text();

/// Shortest round-trip decimal text of a double.
std::string format_double(double v);

}  // namespace twrnoma::cli

#endif  // TWRNOMA_CLI_CONFIG_IO_HPP
