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

#include "wpt/scene.hpp"

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

namespace wpt {

/// Free-space power gain g_tx g_rx (lambda / (4 pi d))^2.
double friis_link_gain(double distance, double lambda, double g_tx, double g_rx);

/// Far-field Friis is questionable below two wavelengths.
bool is_near_field(double distance, double lambda);

/// Power-wave amplitude of the direct path; |h|^2 equals the Friis gain.
std::complex<double> los_channel_entry(const AntennaElement &a, const EslDevice &e,
                                       const RadiationPattern &esl_pattern, double lambda);

struct ImageSource
{
    AntennaElement element; // mirrored position and boresight
    std::complex<double> gamma;
    std::size_t reflector_index = 0;
};

/// First-order images of an antenna, one per reflector it faces.
std::vector<ImageSource> image_sources(const AntennaElement &a, const std::vector<PlanarReflector> &reflectors);

/// Specular point of the image path if both endpoints are in front of the
/// reflector and the point lies within its extent.
std::optional<Point3> specular_point(const AntennaElement &a, const PlanarReflector &r, Point3 receiver);

enum class PathType
{
    los,
    image
};

struct PathComponent
{
    std::size_t antenna_index = 0;
    PathType type = PathType::los;
    std::size_t reflector_index = 0; // image only
    double distance = 0.0;
    std::complex<double> amplitude;
};

/// All propagation paths from every antenna to one ESL, antenna by antenna,
/// LOS first and then images in reflector order.
std::vector<PathComponent> channel_paths(const Deployment &dep, const EslDevice &e, bool include_smc);

struct ChannelVector
{
    std::vector<std::complex<double>> entries;
    double frequency_hz = 0.0;
    std::size_t esl_id = 0;
    std::size_t near_field_links = 0; // links shorter than 2 lambda

    // |h_l|^2 for every antenna.
    std::vector<double> power_gains() const;
};

/// Channel from every antenna to ESL `esl_id`. Throws std::domain_error if a
/// link would amplify power (|h|^2 > 1).
ChannelVector channel_vector(const Deployment &dep, std::size_t esl_id, bool include_smc);

} // namespace wpt
