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

#pragma once

#include "wpt/energy.hpp"
#include "wpt/experiments.hpp"
#include "wpt/scene.hpp"
#include "wpt/strategy.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace wpt::cli {

/// Label selector: a role or an explicit id.
using EslSelector = std::variant<EslRole, std::size_t>;

struct RunConfig
{
    SceneConfig scene;
    std::optional<Deployment> deployment; // explicit geometry replaces `scene`

    EnergyModel energy;

    StrategyKind strategy = StrategyKind::miso_coherent;
    EslSelector esl = EslRole::furthest;
    std::optional<std::size_t> n_esls; // defaults to the labels in the scene

    ExperimentSettings settings;

    std::size_t sweep_n_min = 50;
    std::size_t sweep_n_max = 2000;
    std::size_t sweep_n_step = 50;
    std::vector<EslRole> sweep_roles{EslRole::furthest};
    std::vector<StrategyKind> sweep_strategies{StrategyKind::siso, StrategyKind::miso_noncoherent_uniform,
                                               StrategyKind::miso_coherent};

    std::optional<std::string> csv_path;
    std::optional<std::string> svg_path;

    RunConfig();

    Deployment build_deployment() const;
    std::vector<std::size_t> sweep_range() const;
};

/// The shipped schema, parsed.
const nlohmann::json &config_schema();

/// Validates against the schema, then converts. Throws ConfigError.
RunConfig parse_config(const nlohmann::json &doc);

/// Reads and parses a JSON file. Throws IoError if unreadable, ConfigError
/// on syntax or schema errors.
RunConfig load_config(const std::string &path);

EslSelector parse_esl_selector(const std::string &text);
std::size_t resolve_esl(const Deployment &dep, const EslSelector &sel);

} // namespace wpt::cli
