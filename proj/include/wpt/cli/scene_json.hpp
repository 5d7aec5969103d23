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

#include "wpt/channel.hpp"
#include "wpt/scene.hpp"

#include <json.hpp>

namespace wpt::cli {

inline constexpr int scene_schema_version = 1;

nlohmann::json to_json(const RadiationPattern &p);
RadiationPattern pattern_from_json(const nlohmann::json &j, const std::string &path);

nlohmann::json deployment_to_json(const Deployment &dep);

/// Inverse of deployment_to_json; validates the result. Throws ConfigError.
Deployment deployment_from_json(const nlohmann::json &j, const std::string &path = "$.deployment");

/// Resolved scene document: summary block plus the full deployment.
nlohmann::json scene_document(const Deployment &dep);

} // namespace wpt::cli
