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

#include "twrnoma/cli/config_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

namespace twrnoma::cli {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(std::string_view text, int line, std::string_view key)
{
    double v = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc{} || ptr != end)
        throw ConfigError("config line " + std::to_string(line) + ": value of '" + std::string(key) +
                          "' is not a number: '" + std::string(text) + "'");
    return v;
}

struct Fields {
    std::optional<double> alpha, d1, d2;
    std::array<std::optional<double>, 4> omega;
};

}  // namespace

std::string format_double(double v)
{
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ec == std::errc{} ? ptr : buf.data());
}

LoadedConfig parse_config(std::string_view text)
{
    LoadedConfig out;
    out.system = SystemConfig::reference();
    out.snr_db = 20.0;
    SystemConfig& c = out.system;
    Fields geo;
    bool have_version = false;

    using Setter = std::function<void(std::string_view, int, std::string_view)>;
    auto number = [](double& slot) -> Setter {
        return [&slot](std::string_view v, int line, std::string_view key) { slot = parse_number(v, line, key); };
    };
    auto optional_number = [](std::optional<double>& slot) -> Setter {
        return [&slot](std::string_view v, int line, std::string_view key) { slot = parse_number(v, line, key); };
    };

    std::map<std::string, Setter, std::less<>> keys{
        {"schema_version",
         [&have_version](std::string_view v, int line, std::string_view key) {
             const double version = parse_number(v, line, key);
             if (version != kSchemaVersion)
                 throw ConfigError("config line " + std::to_string(line) + ": unsupported schema_version " +
                                   std::string(v) + " (expected " + std::to_string(kSchemaVersion) + ")");
             have_version = true;
         }},
        {"system.snr_db", number(out.snr_db)},
        {"sic.mode", [&c](std::string_view v, int, std::string_view) { c.sic = parse_sic_mode(v); }},
        {"sic.omega_i", number(c.omega_i)},
        {"is.varpi1", number(c.varpi1)},
        {"is.varpi2", number(c.varpi2)},
        {"channel.alpha", optional_number(geo.alpha)},
        {"channel.d1", optional_number(geo.d1)},
        {"channel.d2", optional_number(geo.d2)},
        {"energy.T", number(c.T)},
        {"energy.pu", number(c.pu)},
        {"energy.pr", number(c.pr)},
    };
    for (std::size_t i = 0; i < 4; ++i) {
        const auto n = std::to_string(i + 1);
        keys.emplace("noma.a" + n, number(c.a[i]));
        keys.emplace("noma.b" + n, number(c.b[i]));
        keys.emplace("rate.R" + n, number(c.rate[i]));
        keys.emplace("channel.omega" + n, optional_number(geo.omega[i]));
    }

    std::map<std::string, int, std::less<>> seen;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        const auto it = keys.find(key);
        if (it == keys.end())
            throw ConfigError("config line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
        if (const auto [prev, fresh] = seen.emplace(std::string(key), line_no); !fresh)
            throw ConfigError("config line " + std::to_string(line_no) + ": duplicate key '" + std::string(key) +
                              "' (first set on line " + std::to_string(prev->second) + ")");
        if (value.empty())
            throw ConfigError("config line " + std::to_string(line_no) + ": empty value for '" + std::string(key) +
                              "'");
        it->second(value, line_no, key);
    }
    if (!have_version)
        throw ConfigError("config: missing required key 'schema_version'");

    // Geometry keys re-derive the variances; explicit variances without any
    // geometry key detach the geometry altogether.
    const bool any_geo = geo.alpha || geo.d1 || geo.d2;
    const bool any_omega = geo.omega[0] || geo.omega[1] || geo.omega[2] || geo.omega[3];
    if (any_geo)
        c = c.with_geometry(geo.alpha.value_or(c.alpha), geo.d1.value_or(c.d1), geo.d2.value_or(c.d2));
    if (any_omega) {
        auto omegas = c.omega;
        for (std::size_t i = 0; i < 4; ++i)
            if (geo.omega[i])
                omegas[i] = *geo.omega[i];
        if (any_geo)
            c.omega = omegas;
        else
            c = c.with_omegas(omegas);
    }
    c = c.with_snr_db(out.snr_db);
    c.validate();
    return out;
}

LoadedConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot read config file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string default_config_text()
{
    const auto c = SystemConfig::reference();
    std::ostringstream os;
    os << "# twrnoma configuration\n";
    os << "schema_version = " << kSchemaVersion << "\n\n";
    os << "# transmit SNR used by single-point checks (dB); sweeps override it\n";
    os << "system.snr_db = 20\n\n";
    os << "# uplink (a) and downlink (b) power allocation\n";
    for (int i = 1; i <= 4; ++i)
        os << "noma.a" << i << " = " << format_double(c.a_of(i)) << "\n";
    for (int i = 1; i <= 4; ++i)
        os << "noma.b" << i << " = " << format_double(c.b_of(i)) << "\n";
    os << "\n# IS levels at the relay (varpi1) and the user nodes (varpi2)\n";
    os << "is.varpi1 = " << format_double(c.varpi1) << "\n";
    os << "is.varpi2 = " << format_double(c.varpi2) << "\n";
    os << "\n# SIC mode (ipsic | psic) and residual-IS variance, linear\n";
    os << "sic.mode = " << to_string(c.sic) << "\n";
    os << "sic.omega_i = " << format_double(c.omega_i) << "\n";
    os << "\n# path loss; omega_i = d^-alpha with nodes 1,3 at d1 and 2,4 at d2\n";
    os << "channel.alpha = " << format_double(c.alpha) << "\n";
    os << "channel.d1 = " << format_double(c.d1) << "\n";
    os << "channel.d2 = " << format_double(c.d2) << "\n";
    for (int i = 1; i <= 4; ++i)
        os << "channel.omega" << i << " = " << format_double(c.omega_of(i)) << "\n";
    os << "\n# target rates, BPCU\n";
    for (int i = 1; i <= 4; ++i)
        os << "rate.R" << i << " = " << format_double(c.rate_of(i)) << "\n";
    os << "\n# energy budget: normalized time, node and relay power (W)\n";
    os << "energy.T = " << format_double(c.T) << "\n";
    os << "energy.pu = " << format_double(c.pu) << "\n";
    os << "energy.pr = " << format_double(c.pr) << "\n";
    return os.str();
}

}  // namespace twrnoma::cli
