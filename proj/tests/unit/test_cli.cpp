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
#include "twrnoma/cli/presets.hpp"
#include "twrnoma/cli/sweep.hpp"
#include "twrnoma/cli/validation.hpp"

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using namespace twrnoma;
using namespace twrnoma::cli;

namespace {

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

std::filesystem::path scratch(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / "twrnoma_unit";
    std::filesystem::create_directories(dir);
    return dir / name;
}

SweepSpec small_outage()
{
    SweepSpec s;
    s.metric = Metric::outage;
    s.signals = {Signal::x1, Signal::x2};
    s.modes = {SicMode::imperfect};
    s.mc_iterations = 2000;
    return s;
}

}  // namespace

TEST_CASE("default configuration round-trips")
{
    const auto loaded = parse_config(default_config_text());
    const auto ref = SystemConfig::reference();
    CHECK(loaded.system.rho == doctest::Approx(ref.rho).epsilon(1e-15));
    CHECK(loaded.system.a == ref.a);
    CHECK(loaded.system.b == ref.b);
    CHECK(loaded.system.omega == ref.omega);
    CHECK(loaded.system.rate == ref.rate);
    CHECK(loaded.system.omega_i == doctest::Approx(ref.omega_i).epsilon(1e-15));
    CHECK(loaded.system.sic == ref.sic);
    CHECK(loaded.snr_db == 20.0);
}

TEST_CASE("configuration errors")
{
    CHECK_THROWS_AS(parse_config("noma.a1 = 0.8\n"), ConfigError);  // no schema_version
    try {
        parse_config("schema_version = 1\n\nnoma.zz = 3\n");
        FAIL("unknown key accepted");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_config("schema_version = 1\nrate.R1 = 0.1\nrate.R1 = 0.2\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("schema_version = 1\nnoma.b2 = 0.7\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("schema_version = 1\nsic.mode = maybe\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("schema_version = 2\n"), ConfigError);

    const auto ok = parse_config("schema_version = 1  # comment\nsystem.snr_db = 30\nsic.mode = psic\n");
    CHECK(ok.snr_db == 30.0);
    CHECK(ok.system.rho == doctest::Approx(1000.0));
    CHECK(ok.system.sic == SicMode::perfect);
}

TEST_CASE("doubles print shortest round-trip")
{
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(-20.0) == "-20");
    CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("argument parsers")
{
    SweepSpec s;
    parse_snr_range("0:40:5", s);
    CHECK(s.grid_db().size() == 9);
    CHECK_THROWS(parse_snr_range("0:40", s));
    CHECK(parse_signals("x2,x1,x2") == std::vector<Signal>{Signal::x1, Signal::x2});
    CHECK_THROWS(parse_signals(""));
    CHECK(parse_modes("both").size() == 2);
    CHECK(parse_metric("throughput_dl") == Metric::throughput_dl);
    CHECK_THROWS(parse_metric("speed"));
}

TEST_CASE("sweep table shape")
{
    const auto spec = small_outage();
    const auto table = run_sweep(spec, SystemConfig::reference());
    CHECK(table.size() == 18);
    CHECK(table.front().snr_db == 0.0);
    CHECK(table[1].signal == "x2");
    CHECK(table.back().snr_db == 40.0);

    const auto csv = to_csv(table);
    CHECK(count_lines(csv) == 19);
    CHECK(csv.substr(0, kCsvHeader.size()) == kCsvHeader);
    // Asymptotic column off: empty field, columns kept.
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    std::getline(in, line);
    CHECK(std::count(line.begin(), line.end(), ',') == 9);
    CHECK(line.find(",,") != std::string::npos);

    CHECK(to_csv(run_sweep(spec, SystemConfig::reference())) == csv);
}

TEST_CASE("sweep rejects empty selections")
{
    auto spec = small_outage();
    spec.signals.clear();
    CHECK_THROWS_AS(run_sweep(spec, SystemConfig::reference()), ConfigError);
    auto few = small_outage();
    few.mc_iterations = 10;
    CHECK_THROWS_AS(run_sweep(few, SystemConfig::reference()), ConfigError);
}

TEST_CASE("system metrics and OMA rows")
{
    auto spec = small_outage();
    spec.metric = Metric::throughput_dl;
    spec.modes = {SicMode::imperfect, SicMode::perfect};
    spec.include_oma = true;
    spec.snr_start_db = 10.0;
    spec.snr_stop_db = 20.0;
    spec.snr_step_db = 10.0;
    const auto t = run_sweep(spec, SystemConfig::reference());
    REQUIRE(t.size() == 6);
    CHECK(t[0].signal == "all");
    CHECK(t[0].mode == "ipsic");
    CHECK(t[2].mode == "oma");
    CHECK_FALSE(t[2].analytic.has_value());
    CHECK(t[0].analytic.has_value());
}

TEST_CASE("outputs")
{
    const auto table = run_sweep(small_outage(), SystemConfig::reference());
    const auto path = scratch("out.csv");
    write_csv(path, table);
    std::ifstream f(path);
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str() == to_csv(table));

    const auto script = write_plot_script(path, Metric::outage);
    CHECK(std::filesystem::exists(script));
    CHECK(plot_script(path, Metric::outage).find("out.csv") != std::string::npos);

    const std::filesystem::path bad = "/nonexistent_dir/x/out.csv";
    try {
        write_csv(bad, table);
        FAIL("wrote to an unwritable path");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find(bad.string()) != std::string::npos);
    }
    CHECK_THROWS(write_csv(path, std::span<const MetricPoint>{}));
}

TEST_CASE("presets")
{
    const auto base = SystemConfig::reference();
    for (auto name : preset_names()) {
        const auto variants = make_preset(name, base);
        CHECK_FALSE(variants.empty());
        for (const auto& v : variants) {
            CHECK_NOTHROW(v.spec.validate());
            CHECK_NOTHROW(v.config.validate());
        }
    }
    CHECK(make_preset("fig3", base).size() == 4);
    CHECK(make_preset("fig8", base)[0].config.pu == 10.0);
    CHECK_THROWS_AS(make_preset("fig9", base), ConfigError);
    CHECK(variant_path("runs/out.csv", "varpi0.01") == std::filesystem::path("runs/out_varpi0.01.csv"));
    CHECK(variant_path("out.csv", "") == std::filesystem::path("out.csv"));
}

TEST_CASE("validation plumbing")
{
    CHECK(parse_profile("strict") == Profile::strict);
    CHECK_THROWS_AS(parse_profile("lenient"), ConfigError);

    ValidateOptions strict;
    strict.profile = Profile::strict;
    const auto r = run_check(7, SystemConfig::reference(), strict);
    CHECK(r.id == 7);
    CHECK(r.tolerance.find("5e-11") != std::string::npos);
    CHECK_FALSE(format_check(r).empty());

    auto broken = SystemConfig::reference();
    broken.b[1] = 0.7;
    CHECK_THROWS_AS(run_check(7, broken), ConfigError);
    CHECK_THROWS_AS(run_check(12, SystemConfig::reference()), std::out_of_range);
}
