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

#include <stdexcept>
#include <string>

namespace wpt::cli {

/// Invalid configuration; `path` is the JSON location, e.g. "$.scene.aisle.width".
class ConfigError : public std::invalid_argument
{
public:
    ConfigError(std::string path, const std::string &message)
        : std::invalid_argument(path.empty() ? message : path + ": " + message), path_(std::move(path))
    {
    }

    const std::string &path() const { return path_; }

private:
    std::string path_;
};

class IoError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Process exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_config_error = 2;
inline constexpr int exit_physics_error = 3;
inline constexpr int exit_io_error = 4;

} // namespace wpt::cli
