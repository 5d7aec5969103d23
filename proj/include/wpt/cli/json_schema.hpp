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

#include <json.hpp>

#include <string>
#include <vector>

namespace wpt::cli {

struct SchemaViolation
{
    std::string path; // "$.a.b[2]"
    std::string message;
};

/// Checks `instance` against the subset of JSON Schema used by the shipped
/// config schema: type, enum, properties, required, additionalProperties,
/// items, minItems, minimum, maximum, exclusiveMinimum, exclusiveMaximum.
/// Unknown keywords are ignored.
std::vector<SchemaViolation> validate_against_schema(const nlohmann::json &instance, const nlohmann::json &schema);

} // namespace wpt::cli
