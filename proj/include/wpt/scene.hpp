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

#include "wpt/antenna.hpp"
#include "wpt/geometry.hpp"

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace wpt {

/// Supermarket aisle: two cabinets along the x axis with the walkway between
/// their front faces. The left cabinet occupies y in [0, shelf_depth], the
/// right one y in [width - shelf_depth, width].
struct Aisle
{
    double length = 20.0;
    double width = 4.4;
    double cabinet_height = 2.5;
    double shelf_depth = 1.0;

    void validate() const;

    double left_face_y() const { return shelf_depth; }
    double right_face_y() const { return width - shelf_depth; }
};

struct AntennaElement
{
    Point3 position;
    Vec3 boresight{0.0, 0.0, -1.0};
    RadiationPattern pattern;
    std::size_t array_id = 0;
    std::size_t element_index = 0;
};

struct EslDevice
{
    std::size_t id = 0;
    Point3 position;
    Vec3 facing{0.0, 1.0, 0.0};
};

/// Large flat surface producing one specular image per antenna. The extent is
/// the rectangle origin + s u + t v with s in [u_min, u_max], t in
/// [v_min, v_max] and v = normal x u.
struct PlanarReflector
{
    std::string label;
    Point3 origin;
    Vec3 normal{0.0, 0.0, 1.0};
    Vec3 u_axis{1.0, 0.0, 0.0};
    double u_min = 0.0, u_max = 1.0;
    double v_min = 0.0, v_max = 1.0;
    std::complex<double> gamma{0.0, 0.0};

    Vec3 v_axis() const { return cross(normal, u_axis); }
    void validate() const;
};

struct Deployment
{
    Aisle aisle;
    double carrier_frequency_hz = 868e6;
    std::size_t num_arrays = 0;
    std::size_t elements_per_array = 0;
    std::vector<AntennaElement> antennas; // ordered array by array
    RadiationPattern esl_pattern;
    std::vector<EslDevice> esls;
    std::vector<PlanarReflector> reflectors;

    double wavelength() const;
    const EslDevice &esl(std::size_t id) const;

    // Structural invariants: lambda/2 spacing, unit directions, unique ids,
    // element and device positions inside the aisle.
    void validate() const;
};

/// Overrides for the default scene. Unset fields take the documented defaults.
struct SceneConfig
{
    Aisle aisle;
    double frequency_hz = 868e6;

    // Lateral array positions; default is above both cabinets and the aisle
    // centre line: {shelf_depth / 2, width / 2, width - shelf_depth / 2}.
    std::optional<std::vector<double>> array_y;
    // Mounting height; default is 0.1 m above the cabinets.
    std::optional<double> array_height;
    // Rotation of the outer arrays' boresight from nadir towards the walkway.
    double tilt_deg = 0.0;
    std::optional<std::size_t> elements_per_array;

    RadiationPattern antenna_pattern = RadiationPattern::dipole();
    // Defaults to the antenna pattern.
    std::optional<RadiationPattern> esl_pattern;

    std::size_t num_esls = 600;
    std::vector<double> esl_row_heights{0.5, 1.0, 1.5, 2.0};

    bool reflectors_enabled = true;
    std::complex<double> reflection_coefficient{-0.4, 0.0};

    void validate() const;
};

inline constexpr double min_frequency_hz = 300e6;
inline constexpr double max_frequency_hz = 6e9;

// ESLs nearest to each aisle end sit this far from the end wall.
inline constexpr double esl_end_margin = 0.05;
inline constexpr double min_esl_pitch = 0.05;

/// Elements per array for a run of the given length: round(length / (lambda/2)) + 1.
std::size_t elements_for_length(double length, double wavelength);

Deployment build_default_aisle(const SceneConfig &config = {});

/// Places n ESLs on the two cabinet faces: columns evenly spaced from
/// x = 0.05 m to length - 0.05 m, filled left face first, then column by
/// column, bottom row first. ESL 0 therefore sits at the bottom corner.
std::vector<EslDevice> esl_layout(std::size_t n, const Aisle &aisle,
                                  const std::vector<double> &row_heights = {0.5, 1.0, 1.5, 2.0});

/// Floor of the walkway and the two cabinet fronts.
std::vector<PlanarReflector> default_reflectors(const Aisle &aisle, std::complex<double> gamma);

struct LinkGeometry
{
    double distance = 0.0;
    double theta_tx = 0.0, phi_tx = 0.0; // departure, antenna frame
    double theta_rx = 0.0, phi_rx = 0.0; // arrival, ESL frame
};

/// Geometry of the path between an antenna and an ESL. Throws
/// std::domain_error for coincident positions.
LinkGeometry link_geometry(const AntennaElement &a, const EslDevice &e);

/// Same for arbitrary endpoints with the given pattern axes.
LinkGeometry link_geometry(Point3 tx, Vec3 tx_axis, Point3 rx, Vec3 rx_axis);

enum class EslRole
{
    closest,
    furthest
};

std::string_view to_string(EslRole role);

/// Mean Euclidean distance from an ESL to all antennas.
double mean_antenna_distance(const Deployment &dep, const EslDevice &e);

/// The furthest ESL has the largest mean distance to the antennas, the closest
/// the smallest. Ties within 1e-9 relative go to the lowest id.
std::size_t designated_esl(const Deployment &dep, EslRole role);

/// Copy of the deployment with every antenna and the ESLs using `pattern`.
Deployment with_antenna_pattern(Deployment dep, const RadiationPattern &pattern);

} // namespace wpt
