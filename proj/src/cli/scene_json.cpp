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

#include "wpt/cli/scene_json.hpp"
#include "wpt/cli/errors.hpp"

#include <string>

namespace wpt::cli {

using nlohmann::json;

namespace {

json point_json(const Point3 &p)
{
    return json::array({p.x, p.y, p.z});
}

Point3 point_from_json(const json &j, const std::string &path)
{
    if (!j.is_array() || j.size() != 3)
        throw ConfigError(path, "expected an array of three numbers");
    for (std::size_t i = 0; i < 3; ++i)
        if (!j[i].is_number())
            throw ConfigError(path + "[" + std::to_string(i) + "]", "expected a number");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

const json &member(const json &obj, const char *key, const std::string &path)
{
    auto it = obj.find(key);
    if (it == obj.end())
        throw ConfigError(path, std::string("missing required key '") + key + "'");
    return *it;
}

template <typename T>
T number(const json &obj, const char *key, const std::string &path)
{
    const json &v = member(obj, key, path);
    if (!v.is_number())
        throw ConfigError(path + "." + key, "expected a number");
    if constexpr (std::is_integral_v<T>)
    {
        if (!v.is_number_integer() || v.get<long long>() < 0)
            throw ConfigError(path + "." + key, "expected a non-negative integer");
    }
    return v.get<T>();
}

} // namespace

json to_json(const RadiationPattern &p)
{
    json j{{"kind", p.kind == PatternKind::half_wave_dipole ? "dipole" : std::string(to_string(p.kind))}};
    if (p.kind == PatternKind::patch)
        j["n"] = p.patch_exponent;
    return j;
}

RadiationPattern pattern_from_json(const json &j, const std::string &path)
{
    if (!j.is_object())
        throw ConfigError(path, "expected an object");
    const json &kind = member(j, "kind", path);
    if (!kind.is_string())
        throw ConfigError(path + ".kind", "expected a string");
    RadiationPattern p;
    try
    {
        p.kind = pattern_kind_from_string(kind.get<std::string>());
    }
    catch (const std::invalid_argument &e)
    {
        throw ConfigError(path + ".kind", e.what());
    }
    if (j.contains("n"))
        p.patch_exponent = number<double>(j, "n", path);
    try
    {
        p.validate();
    }
    catch (const std::invalid_argument &e)
    {
        throw ConfigError(path, e.what());
    }
    return p;
}

json deployment_to_json(const Deployment &dep)
{
    json antennas = json::array();
    for (const auto &a : dep.antennas)
        antennas.push_back({{"array_id", a.array_id},
                            {"element_index", a.element_index},
                            {"position", point_json(a.position)},
                            {"boresight", point_json(a.boresight)},
                            {"pattern", to_json(a.pattern)}});

    json esls = json::array();
    for (const auto &e : dep.esls)
        esls.push_back({{"id", e.id}, {"position", point_json(e.position)}, {"facing", point_json(e.facing)}});

    json reflectors = json::array();
    for (const auto &r : dep.reflectors)
        reflectors.push_back({{"label", r.label},
                              {"origin", point_json(r.origin)},
                              {"normal", point_json(r.normal)},
                              {"u_axis", point_json(r.u_axis)},
                              {"u_range", {r.u_min, r.u_max}},
                              {"v_range", {r.v_min, r.v_max}},
                              {"gamma", {{"re", r.gamma.real()}, {"im", r.gamma.imag()}}}});

    return {{"aisle",
             {{"length", dep.aisle.length},
              {"width", dep.aisle.width},
              {"cabinet_height", dep.aisle.cabinet_height},
              {"shelf_depth", dep.aisle.shelf_depth}}},
            {"carrier_frequency_hz", dep.carrier_frequency_hz},
            {"num_arrays", dep.num_arrays},
            {"elements_per_array", dep.elements_per_array},
            {"antennas", std::move(antennas)},
            {"esl_pattern", to_json(dep.esl_pattern)},
            {"esls", std::move(esls)},
            {"reflectors", std::move(reflectors)}};
}

Deployment deployment_from_json(const json &j, const std::string &path)
{
    if (!j.is_object())
        throw ConfigError(path, "expected an object");

    Deployment dep;
    const std::string aisle_path = path + ".aisle";
    const json &aisle = member(j, "aisle", path);
    dep.aisle.length = number<double>(aisle, "length", aisle_path);
    dep.aisle.width = number<double>(aisle, "width", aisle_path);
    dep.aisle.cabinet_height = number<double>(aisle, "cabinet_height", aisle_path);
    dep.aisle.shelf_depth = number<double>(aisle, "shelf_depth", aisle_path);
    dep.carrier_frequency_hz = number<double>(j, "carrier_frequency_hz", path);
    dep.num_arrays = number<std::size_t>(j, "num_arrays", path);
    dep.elements_per_array = number<std::size_t>(j, "elements_per_array", path);

    const json &antennas = member(j, "antennas", path);
    if (!antennas.is_array())
        throw ConfigError(path + ".antennas", "expected an array");
    for (std::size_t i = 0; i < antennas.size(); ++i)
    {
        const std::string p = path + ".antennas[" + std::to_string(i) + "]";
        const json &a = antennas[i];
        AntennaElement el;
        el.array_id = number<std::size_t>(a, "array_id", p);
        el.element_index = number<std::size_t>(a, "element_index", p);
        el.position = point_from_json(member(a, "position", p), p + ".position");
        el.boresight = point_from_json(member(a, "boresight", p), p + ".boresight");
        el.pattern = pattern_from_json(member(a, "pattern", p), p + ".pattern");
        dep.antennas.push_back(el);
    }

    dep.esl_pattern = pattern_from_json(member(j, "esl_pattern", path), path + ".esl_pattern");

    const json &esls = member(j, "esls", path);
    if (!esls.is_array())
        throw ConfigError(path + ".esls", "expected an array");
    for (std::size_t i = 0; i < esls.size(); ++i)
    {
        const std::string p = path + ".esls[" + std::to_string(i) + "]";
        EslDevice e;
        e.id = number<std::size_t>(esls[i], "id", p);
        e.position = point_from_json(member(esls[i], "position", p), p + ".position");
        e.facing = point_from_json(member(esls[i], "facing", p), p + ".facing");
        dep.esls.push_back(e);
    }

    if (auto it = j.find("reflectors"); it != j.end())
    {
        if (!it->is_array())
            throw ConfigError(path + ".reflectors", "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i)
        {
            const std::string p = path + ".reflectors[" + std::to_string(i) + "]";
            const json &rj = (*it)[i];
            PlanarReflector r;
            r.label = rj.value("label", std::string{});
            r.origin = point_from_json(member(rj, "origin", p), p + ".origin");
            r.normal = point_from_json(member(rj, "normal", p), p + ".normal");
            r.u_axis = point_from_json(member(rj, "u_axis", p), p + ".u_axis");
            const json &ur = member(rj, "u_range", p);
            const json &vr = member(rj, "v_range", p);
            if (!ur.is_array() || ur.size() != 2 || !vr.is_array() || vr.size() != 2)
                throw ConfigError(p, "u_range and v_range must be [min, max]");
            r.u_min = ur[0].get<double>();
            r.u_max = ur[1].get<double>();
            r.v_min = vr[0].get<double>();
            r.v_max = vr[1].get<double>();
            const json &g = member(rj, "gamma", p);
            r.gamma = {number<double>(g, "re", p + ".gamma"), g.contains("im") ? number<double>(g, "im", p + ".gamma") : 0.0};
            dep.reflectors.push_back(r);
        }
    }

    try
    {
        dep.validate();
    }
    catch (const std::invalid_argument &e)
    {
        throw ConfigError(path, e.what());
    }
    return dep;
}

json scene_document(const Deployment &dep)
{
    const double lambda = dep.wavelength();
    json summary{{"num_antennas", dep.antennas.size()},
                 {"num_arrays", dep.num_arrays},
                 {"elements_per_array", dep.elements_per_array},
                 {"carrier_frequency_hz", dep.carrier_frequency_hz},
                 {"wavelength_m", lambda},
                 {"spacing_m", lambda / 2.0},
                 {"num_esls", dep.esls.size()}};
    if (!dep.esls.empty())
    {
        summary["closest_esl"] = designated_esl(dep, EslRole::closest);
        summary["furthest_esl"] = designated_esl(dep, EslRole::furthest);
    }
    return {{"schema_version", scene_schema_version}, {"summary", std::move(summary)},
            {"deployment", deployment_to_json(dep)}};
}

} // namespace wpt::cli
