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

#include "wpt/cli/config.hpp"
#include "wpt/cli/errors.hpp"
#include "wpt/cli/json_schema.hpp"
#include "wpt/cli/scene_json.hpp"
#include "wpt/config_schema.hpp"
#include "wpt/units.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace wpt::cli {

using nlohmann::json;

namespace {

template <typename T>
void read(const json &obj, const char *key, T &dst)
{
    if (auto it = obj.find(key); it != obj.end())
        dst = it->get<T>();
}

EslRole role_from_string(const std::string &s, const std::string &path)
{
    if (s == "closest")
        return EslRole::closest;
    if (s == "furthest")
        return EslRole::furthest;
    throw ConfigError(path, "expected 'closest', 'furthest' or an ESL id, got '" + s + "'");
}

void parse_scene(const json &s, SceneConfig &scene)
{
    if (auto a = s.find("aisle"); a != s.end())
    {
        read(*a, "length", scene.aisle.length);
        read(*a, "width", scene.aisle.width);
        read(*a, "cabinet_height", scene.aisle.cabinet_height);
        read(*a, "shelf_depth", scene.aisle.shelf_depth);
    }
    read(s, "frequency_hz", scene.frequency_hz);
    if (auto a = s.find("arrays"); a != s.end())
    {
        if (a->contains("lateral_positions_m"))
            scene.array_y = (*a)["lateral_positions_m"].get<std::vector<double>>();
        if (a->contains("height_m"))
            scene.array_height = (*a)["height_m"].get<double>();
        read(*a, "tilt_deg", scene.tilt_deg);
        if (a->contains("elements_per_array"))
            scene.elements_per_array = (*a)["elements_per_array"].get<std::size_t>();
    }
    if (auto p = s.find("pattern"); p != s.end())
        scene.antenna_pattern = pattern_from_json(*p, "$.scene.pattern");
    if (auto p = s.find("esl_pattern"); p != s.end())
        scene.esl_pattern = pattern_from_json(*p, "$.scene.esl_pattern");
    if (auto e = s.find("esls"); e != s.end())
    {
        read(*e, "count", scene.num_esls);
        read(*e, "row_heights_m", scene.esl_row_heights);
    }
    if (auto r = s.find("reflectors"); r != s.end())
    {
        read(*r, "enabled", scene.reflectors_enabled);
        if (auto g = r->find("gamma"); g != r->end())
            scene.reflection_coefficient = {g->value("re", 0.0), g->value("im", 0.0)};
    }

    try
    {
        scene.validate();
    }
    catch (const std::invalid_argument &e)
    {
        throw ConfigError("$.scene", e.what());
    }
}

} // namespace

RunConfig::RunConfig()
{
    scene.antenna_pattern = RadiationPattern::patch(2.0);
}

Deployment RunConfig::build_deployment() const
{
    if (deployment)
        return *deployment;
    return build_default_aisle(scene);
}

std::vector<std::size_t> RunConfig::sweep_range() const
{
    if (sweep_n_min == 0 || sweep_n_step == 0 || sweep_n_max < sweep_n_min)
        throw ConfigError("$.sweep", "range must satisfy 1 <= n_min <= n_max and n_step >= 1");
    std::vector<std::size_t> out;
    for (std::size_t n = sweep_n_min; n <= sweep_n_max; n += sweep_n_step)
        out.push_back(n);
    return out;
}

const json &config_schema()
{
    static const json schema = json::parse(config_schema_json);
    return schema;
}

RunConfig parse_config(const json &doc)
{
    auto violations = validate_against_schema(doc, config_schema());
    if (!violations.empty())
    {
        std::ostringstream msg;
        msg << violations.front().message;
        if (violations.size() > 1)
            msg << " (and " << violations.size() - 1 << " more problem(s))";
        throw ConfigError(violations.front().path, msg.str());
    }

    RunConfig cfg;
    if (doc.contains("scene") && doc.contains("deployment"))
        throw ConfigError("$", "'scene' and 'deployment' are mutually exclusive");
    if (auto s = doc.find("scene"); s != doc.end())
        parse_scene(*s, cfg.scene);
    if (auto d = doc.find("deployment"); d != doc.end())
        cfg.deployment = deployment_from_json(*d, "$.deployment");

    if (auto e = doc.find("energy"); e != doc.end())
    {
        read(*e, "e_update_j", cfg.energy.e_update_j);
        read(*e, "updates_per_day", cfg.energy.updates_per_day);
        read(*e, "harvester_efficiency", cfg.energy.harvester_efficiency);
        read(*e, "harvester_sensitivity_dbm", cfg.energy.harvester_sensitivity_dbm);
        read(*e, "buffer_voltage_v", cfg.energy.buffer_voltage_v);
        read(*e, "esl_density_per_m2", cfg.energy.esl_density_per_m2);
        try
        {
            cfg.energy.validate();
        }
        catch (const std::invalid_argument &ex)
        {
            throw ConfigError("$.energy", ex.what());
        }
    }

    if (auto s = doc.find("strategy"); s != doc.end())
    {
        if (s->contains("kind"))
            cfg.strategy = strategy_kind_from_string((*s)["kind"].get<std::string>());
        if (auto e = s->find("esl"); e != s->end())
            cfg.esl = e->is_string() ? EslSelector{role_from_string(e->get<std::string>(), "$.strategy.esl")}
                                     : EslSelector{e->get<std::size_t>()};
        if (s->contains("n_esls"))
            cfg.n_esls = (*s)["n_esls"].get<std::size_t>();
        if (auto c = s->find("coherent_allocation"); c != s->end())
        {
            auto name = c->get<std::string>();
            cfg.settings.coherent = name == "mrt"              ? CoherentAllocation::mrt
                                    : name == "optimal_subset" ? CoherentAllocation::optimal_subset
                                                               : CoherentAllocation::equal_gain;
        }
        if (s->contains("noncoherent_target_dbm"))
            cfg.settings.noncoherent_target_w = watts_from_dbm((*s)["noncoherent_target_dbm"].get<double>());
    }

    if (auto c = doc.find("compliance"); c != doc.end())
    {
        if (c->contains("band"))
            cfg.settings.limit = RegulatoryLimit::preset((*c)["band"].get<std::string>());
        read(*c, "limit_dbm", cfg.settings.limit.limit_dbm);
        if (c->contains("mode"))
            cfg.settings.limit.mode = limit_mode_from_string((*c)["mode"].get<std::string>());
        if (c->contains("reference"))
            cfg.settings.limit.reference = limit_reference_from_string((*c)["reference"].get<std::string>());
    }

    if (auto s = doc.find("sweep"); s != doc.end())
    {
        read(*s, "n_min", cfg.sweep_n_min);
        read(*s, "n_max", cfg.sweep_n_max);
        read(*s, "n_step", cfg.sweep_n_step);
        if (auto r = s->find("roles"); r != s->end())
        {
            cfg.sweep_roles.clear();
            for (const auto &role : *r)
                cfg.sweep_roles.push_back(role_from_string(role.get<std::string>(), "$.sweep.roles"));
        }
        if (auto st = s->find("strategies"); st != s->end())
        {
            cfg.sweep_strategies.clear();
            for (const auto &k : *st)
                cfg.sweep_strategies.push_back(strategy_kind_from_string(k.get<std::string>()));
        }
        if (cfg.sweep_n_max < cfg.sweep_n_min)
            throw ConfigError("$.sweep.n_max", "must not be smaller than n_min");
    }

    if (auto f = doc.find("flags"); f != doc.end())
    {
        read(*f, "include_smc", cfg.settings.include_smc);
        read(*f, "polarization_loss_3db", cfg.settings.polarization_loss);
        if (f->value("mrt_mode", false))
            cfg.settings.coherent = CoherentAllocation::mrt;
    }

    if (auto o = doc.find("output"); o != doc.end())
    {
        if (o->contains("csv"))
            cfg.csv_path = (*o)["csv"].get<std::string>();
        if (o->contains("svg"))
            cfg.svg_path = (*o)["svg"].get<std::string>();
    }
    read(doc, "workers", cfg.settings.workers);
    return cfg;
}

RunConfig load_config(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("Cannot open config file '" + path + "'.");
    json doc;
    try
    {
        doc = json::parse(in);
    }
    catch (const json::parse_error &e)
    {
        throw ConfigError(path, e.what());
    }
    return parse_config(doc);
}

EslSelector parse_esl_selector(const std::string &text)
{
    if (text == "closest")
        return EslRole::closest;
    if (text == "furthest")
        return EslRole::furthest;
    std::size_t id = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), id);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ConfigError("--esl", "expected 'closest', 'furthest' or an ESL id, got '" + text + "'");
    return id;
}

std::size_t resolve_esl(const Deployment &dep, const EslSelector &sel)
{
    if (const auto *role = std::get_if<EslRole>(&sel))
        return designated_esl(dep, *role);
    std::size_t id = std::get<std::size_t>(sel);
    dep.esl(id); // throws if absent
    return id;
}

} // namespace wpt::cli
