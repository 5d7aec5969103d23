// SPDX-License-Identifier: Apache-2.0
//
// wptsim: link-budget simulator for RF wireless power transfer to shelf labels
// Copyright (C) 2026 The wptsim authors
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

#include <doctest.h>

#include "wpt/cli/app.hpp"
#include "wpt/cli/config.hpp"
#include "wpt/cli/csv.hpp"
#include "wpt/cli/errors.hpp"
#include "wpt/cli/json_schema.hpp"
#include "wpt/cli/scene_json.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace wpt;
using namespace wpt::cli;
using nlohmann::json;

namespace {

struct Result
{
    int code;
    std::string out, err;
};

Result invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "wptsim");
    std::vector<const char *> argv;
    for (const auto &a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string &name)
{
    return (std::filesystem::temp_directory_path() / ("wptsim_test_" + name)).string();
}

std::string write_temp(const std::string &name, const std::string &content)
{
    const auto path = temp_path(name);
    std::ofstream(path) << content;
    return path;
}

std::string slurp(const std::string &path)
{
    std::ifstream f(path);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

std::string config_error_path(const json &doc)
{
    try
    {
        parse_config(doc);
    }
    catch (const ConfigError &e)
    {
        return e.path();
    }
    return "";
}

} // namespace

TEST_CASE("schema validator")
{
    const json schema = json::parse(R"({
        "type": "object", "additionalProperties": false, "required": ["a"],
        "properties": {
            "a": {"type": "number", "exclusiveMinimum": 0, "maximum": 10},
            "b": {"type": "array", "minItems": 1, "items": {"type": "string", "enum": ["x", "y"]}},
            "c": {"type": ["string", "integer"]}
        }})");
    CHECK(validate_against_schema(json::parse(R"({"a": 1, "b": ["x"], "c": 3})"), schema).empty());
    CHECK(validate_against_schema(json::parse(R"({"a": 1, "c": "s"})"), schema).empty());

    auto v = validate_against_schema(json::parse(R"({"b": ["x"]})"), schema);
    REQUIRE(v.size() == 1);
    CHECK(v[0].path == "$");

    v = validate_against_schema(json::parse(R"({"a": 0})"), schema);
    REQUIRE(v.size() == 1);
    CHECK(v[0].path == "$.a");
    CHECK(validate_against_schema(json::parse(R"({"a": 11})"), schema).size() == 1);
    CHECK(validate_against_schema(json::parse(R"({"a": "1"})"), schema).size() == 1);

    v = validate_against_schema(json::parse(R"({"a": 1, "b": ["x", "z"]})"), schema);
    REQUIRE(v.size() == 1);
    CHECK(v[0].path == "$.b[1]");
    CHECK(validate_against_schema(json::parse(R"({"a": 1, "b": []})"), schema).size() == 1);
    CHECK(validate_against_schema(json::parse(R"({"a": 1, "d": 0})"), schema).size() == 1);
    CHECK(validate_against_schema(json::parse(R"({"a": 1, "c": 1.5})"), schema).size() == 1);
}

TEST_CASE("config defaults")
{
    const RunConfig cfg = parse_config(json::object());
    CHECK(cfg.scene.antenna_pattern == RadiationPattern::patch(2));
    CHECK(cfg.strategy == StrategyKind::miso_coherent);
    CHECK(std::get<EslRole>(cfg.esl) == EslRole::furthest);
    CHECK(cfg.sweep_range().size() == 40);
    CHECK(cfg.settings.limit.limit_dbm == 33.0);
}

TEST_CASE("config parsing")
{
    const auto cfg = parse_config(json::parse(R"({
        "schema_version": 1,
        "scene": {"frequency_hz": 917.5e6, "pattern": {"kind": "dipole"},
                  "arrays": {"tilt_deg": 15}, "reflectors": {"gamma": {"re": -0.6}}},
        "energy": {"e_update_j": 1.0},
        "strategy": {"kind": "siso", "esl": 17, "coherent_allocation": "optimal_subset",
                     "noncoherent_target_dbm": -10},
        "compliance": {"band": "eu917", "mode": "total"},
        "sweep": {"n_min": 10, "n_max": 30, "n_step": 10, "roles": ["closest"]},
        "flags": {"include_smc": true, "polarization_loss_3db": true},
        "output": {"csv": "a.csv"},
        "workers": 3
    })"));
    CHECK(cfg.scene.frequency_hz == 917.5e6);
    CHECK(cfg.scene.antenna_pattern.kind == PatternKind::half_wave_dipole);
    CHECK(cfg.scene.tilt_deg == 15.0);
    CHECK(cfg.scene.reflection_coefficient == std::complex<double>(-0.6, 0.0));
    CHECK(cfg.energy.e_update_j == 1.0);
    CHECK(cfg.strategy == StrategyKind::siso);
    CHECK(std::get<std::size_t>(cfg.esl) == 17);
    CHECK(cfg.settings.coherent == CoherentAllocation::optimal_subset);
    CHECK(*cfg.settings.noncoherent_target_w == doctest::Approx(1e-4));
    CHECK(cfg.settings.limit.limit_dbm == 36.0);
    CHECK(cfg.settings.limit.mode == LimitMode::total);
    CHECK(cfg.sweep_range() == std::vector<std::size_t>{10, 20, 30});
    CHECK(cfg.sweep_roles == std::vector<EslRole>{EslRole::closest});
    CHECK(cfg.settings.include_smc);
    CHECK(cfg.settings.polarization_loss);
    CHECK(*cfg.csv_path == "a.csv");
    CHECK(cfg.settings.workers == 3);

    CHECK(parse_config(json::parse(R"({"flags": {"mrt_mode": true}})")).settings.coherent == CoherentAllocation::mrt);
}

TEST_CASE("config errors carry the field path")
{
    CHECK(config_error_path(json::parse(R"({"scene": {"aisle": {"width": -4.4}}})")) == "$.scene.aisle.width");
    CHECK(config_error_path(json::parse(R"({"scene": {"aisle": {"width": 1.5}}})")) == "$.scene");
    CHECK(config_error_path(json::parse(R"({"energy": {"harvester_efficiency": 1.5}})")) ==
          "$.energy.harvester_efficiency");
    CHECK(config_error_path(json::parse(R"({"strategy": {"kind": "beam"}})")) == "$.strategy.kind");
    CHECK(config_error_path(json::parse(R"({"strategy": {"esl": "middle"}})")) == "$.strategy.esl");
    CHECK(config_error_path(json::parse(R"({"sweep": {"n_min": 100, "n_max": 10}})")) == "$.sweep.n_max");
    CHECK(config_error_path(json::parse(R"({"unknown": 1})")) == "$.unknown");
    CHECK(config_error_path(json::parse(R"({"scene": {}, "deployment": {}})")) == "$");
    CHECK(config_error_path(json::parse(R"({"deployment": {"aisle": {}}})")) == "$.deployment.aisle");
}

TEST_CASE("ESL selectors")
{
    CHECK(std::get<EslRole>(parse_esl_selector("closest")) == EslRole::closest);
    CHECK(std::get<std::size_t>(parse_esl_selector("42")) == 42);
    CHECK_THROWS_AS(parse_esl_selector("4x"), ConfigError);
    const auto dep = build_default_aisle();
    CHECK(resolve_esl(dep, EslRole::furthest) == 0);
    CHECK(resolve_esl(dep, std::size_t{12}) == 12);
    CHECK_THROWS_AS(resolve_esl(dep, std::size_t{600}), std::invalid_argument);
}

TEST_CASE("deployment JSON round trip")
{
    SceneConfig c;
    c.num_esls = 40;
    c.elements_per_array = 9;
    const auto dep = build_default_aisle(c);
    const auto back = deployment_from_json(json::parse(deployment_to_json(dep).dump()));
    REQUIRE(back.antennas.size() == dep.antennas.size());
    for (std::size_t i = 0; i < dep.antennas.size(); ++i)
    {
        CHECK(back.antennas[i].position.x == dep.antennas[i].position.x);
        CHECK(back.antennas[i].pattern == dep.antennas[i].pattern);
    }
    REQUIRE(back.esls.size() == 40);
    CHECK(back.esls[7].position.z == dep.esls[7].position.z);
    REQUIRE(back.reflectors.size() == 3);
    CHECK(back.reflectors[2].v_min == dep.reflectors[2].v_min);
    CHECK(back.reflectors[0].gamma == dep.reflectors[0].gamma);

    const auto cfg = parse_config(json{{"deployment", deployment_to_json(dep)}});
    CHECK(cfg.build_deployment().antennas.size() == 27);
}

TEST_CASE("number formatting")
{
    CHECK(format_fixed(1.23456, 2) == "1.23");
    CHECK(format_fixed(-0.00001, 3) == "0.000");
    CHECK(format_fixed(-INFINITY, 3) == "-inf");
    CHECK(format_general(0.000190) == "0.00019");
}

TEST_CASE("cli: scene")
{
    auto r = invoke({"scene"});
    REQUIRE(r.code == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["summary"]["num_antennas"] == 351);
    CHECK(doc["summary"]["elements_per_array"] == 117);
    CHECK(doc["summary"]["num_esls"] == 600);
    CHECK(doc["deployment"]["antennas"].size() == 351);

    r = invoke({"--frequency", "917.5e6", "scene"});
    REQUIRE(r.code == 0);
    const auto f = json::parse(r.out);
    CHECK(f["summary"]["wavelength_m"].get<double>() == doctest::Approx(299792458.0 / 917.5e6).epsilon(1e-15));
    CHECK(f["summary"]["spacing_m"].get<double>() == doctest::Approx(299792458.0 / 917.5e6 / 2).epsilon(1e-15));
}

TEST_CASE("cli: exit codes")
{
    const auto bad = write_temp("bad.json", R"({"scene": {"aisle": {"width": -4.4}}})");
    auto r = invoke({"--config", bad, "scene"});
    CHECK(r.code == exit_config_error);
    CHECK(r.err.find("$.scene.aisle.width") != std::string::npos);

    CHECK(invoke({"--config", write_temp("syntax.json", "{ not json"), "scene"}).code == exit_config_error);
    CHECK(invoke({"--config", temp_path("missing.json"), "scene"}).code == exit_io_error);
    CHECK(invoke({"frobnicate"}).code == exit_config_error);
    CHECK(invoke({"solve", "--strategy", "beam"}).code == exit_config_error);
    CHECK(invoke({"solve", "--esl", "600"}).code == exit_config_error);
    CHECK(invoke({"--out", "/nonexistent-dir/x.csv", "sweep"}).code == exit_io_error);
    CHECK(invoke({"--plot", "sweep"}).code == exit_config_error);

    const auto up = write_temp("up.json", R"({"scene": {"arrays": {"tilt_deg": 180}}})");
    r = invoke({"--config", up, "solve"});
    CHECK(r.code == exit_physics_error);
    CHECK(r.err.find("unreachable") != std::string::npos);
    CHECK(invoke({"--help"}).code == exit_ok);
}

TEST_CASE("cli: solve")
{
    auto r = invoke({"--antenna", "dipole", "solve", "--strategy", "all", "--esl", "furthest"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("miso_noncoherent_uniform") != std::string::npos);

    const auto csv = temp_path("solve.csv");
    const auto with = temp_path("solve_pol.csv");
    REQUIRE(invoke({"--out", csv, "solve", "--strategy", "siso", "--esl", "closest"}).code == 0);
    REQUIRE(invoke({"--out", with, "--polarization-loss", "solve", "--strategy", "siso", "--esl", "closest"}).code ==
            0);
    auto column = [](const std::string &text, int index) {
        std::istringstream s(text);
        std::string header, line, cell;
        std::getline(s, header);
        std::getline(s, line);
        std::istringstream l(line);
        for (int i = 0; i <= index; ++i)
            std::getline(l, cell, ',');
        return std::stod(cell);
    };
    CHECK(column(slurp(with), 4) - column(slurp(csv), 4) == doctest::Approx(3.0).epsilon(1e-9));

    const auto ch = temp_path("channel.csv");
    REQUIRE(invoke({"--include-smc", "solve", "--channel-csv", ch}).code == 0);
    const auto text = slurp(ch);
    CHECK(text.rfind("esl_id,antenna_index,path_type,distance_m,magnitude,phase_rad\n", 0) == 0);
    CHECK(text.find(",1,los,") != std::string::npos);
    CHECK(text.find(",image:") != std::string::npos);
    CHECK(text.find(",0,los,") == std::string::npos);
}

TEST_CASE("cli: sweep, table, crossover, check")
{
    auto r = invoke({"sweep"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int count = -1;
    while (std::getline(lines, line))
        ++count;
    CHECK(count == 120);
    CHECK(r.out == invoke({"--workers", "4", "sweep"}).out);

    const auto csv = temp_path("sweep.csv");
    REQUIRE(invoke({"--out", csv, "--plot", "sweep", "--role", "closest", "--role", "furthest"}).code == 0);
    const auto svg = slurp(std::filesystem::path(csv).replace_extension(".svg").string());
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("polyline") != std::string::npos);

    r = invoke({"table"});
    REQUIRE(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 13);
    CHECK(r.out.find("delta_db") != std::string::npos);

    r = invoke({"crossover"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("patch,furthest,57.288,57.288,true") != std::string::npos);

    r = invoke({"--antenna", "dipole", "check", "--p-tx-dbm", "33", "--strategy", "siso"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("compliant, margin 0.00 dB") != std::string::npos);
}
