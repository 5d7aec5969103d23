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

#include "wpt/cli/json_schema.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wpt::cli {

namespace {

using nlohmann::json;

bool has_type(const json &v, const std::string &type)
{
    if (type == "object")
        return v.is_object();
    if (type == "array")
        return v.is_array();
    if (type == "string")
        return v.is_string();
    if (type == "boolean")
        return v.is_boolean();
    if (type == "null")
        return v.is_null();
    if (type == "number")
        return v.is_number();
    if (type == "integer")
    {
        if (v.is_number_integer())
            return true;
        if (v.is_number_float())
        {
            double d = v.get<double>();
            return std::isfinite(d) && std::floor(d) == d;
        }
        return false;
    }
    return false;
}

std::string describe(const json &v)
{
    std::string s = v.dump();
    return s.size() > 40 ? s.substr(0, 37) + "..." : s;
}

void validate(const json &v, const json &schema, const std::string &path, std::vector<SchemaViolation> &out)
{
    if (!schema.is_object())
        return;

    if (auto it = schema.find("type"); it != schema.end())
    {
        bool ok = false;
        std::string expected;
        if (it->is_string())
        {
            expected = it->get<std::string>();
            ok = has_type(v, expected);
        }
        else
        {
            for (const auto &t : *it)
            {
                expected += (expected.empty() ? "" : " or ") + t.get<std::string>();
                ok = ok || has_type(v, t.get<std::string>());
            }
        }
        if (!ok)
        {
            out.push_back({path, "expected " + expected + ", got " + describe(v)});
            return;
        }
    }

    if (auto it = schema.find("enum"); it != schema.end())
    {
        if (std::find(it->begin(), it->end(), v) == it->end())
            out.push_back({path, "value " + describe(v) + " is not one of " + it->dump()});
    }

    if (v.is_number())
    {
        double d = v.get<double>();
        auto bound = [&](const char *key, auto fails, const char *relation) {
            if (auto it = schema.find(key); it != schema.end() && fails(d, it->template get<double>()))
            {
                std::ostringstream msg;
                msg << "must be " << relation << ' ' << it->dump() << " (got " << v.dump() << ")";
                out.push_back({path, msg.str()});
            }
        };
        bound("minimum", [](double x, double b) { return x < b; }, ">=");
        bound("maximum", [](double x, double b) { return x > b; }, "<=");
        bound("exclusiveMinimum", [](double x, double b) { return x <= b; }, ">");
        bound("exclusiveMaximum", [](double x, double b) { return x >= b; }, "<");
    }

    if (v.is_array())
    {
        if (auto it = schema.find("minItems"); it != schema.end() && v.size() < it->get<std::size_t>())
            out.push_back({path, "needs at least " + it->dump() + " item(s)"});
        if (auto it = schema.find("items"); it != schema.end())
            for (std::size_t i = 0; i < v.size(); ++i)
                validate(v[i], *it, path + "[" + std::to_string(i) + "]", out);
    }

    if (v.is_object())
    {
        const json *props = nullptr;
        if (auto it = schema.find("properties"); it != schema.end())
            props = &*it;

        if (auto it = schema.find("required"); it != schema.end())
            for (const auto &key : *it)
                if (!v.contains(key.get<std::string>()))
                    out.push_back({path, "missing required key '" + key.get<std::string>() + "'"});

        bool closed = false;
        if (auto it = schema.find("additionalProperties"); it != schema.end() && it->is_boolean())
            closed = !it->get<bool>();

        for (const auto &[key, child] : v.items())
        {
            std::string child_path = path + "." + key;
            if (props && props->contains(key))
                validate(child, (*props)[key], child_path, out);
            else if (closed)
                out.push_back({child_path, "unknown key"});
        }
    }
}

} // namespace

std::vector<SchemaViolation> validate_against_schema(const nlohmann::json &instance, const nlohmann::json &schema)
{
    std::vector<SchemaViolation> out;
    validate(instance, schema, "$", out);
    return out;
}

} // namespace wpt::cli
