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

#include "wpt/scene.hpp"
#include "wpt/units.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace wpt {

namespace {

void require_positive(double v, const char *what)
{
    if (!(v > 0.0) || !std::isfinite(v))
        throw std::invalid_argument(std::string(what) + " must be positive and finite.");
}

bool is_unit(Vec3 v)
{
    return std::abs(norm(v) - 1.0) < 1e-9;
}

} // namespace

void Aisle::validate() const
{
    require_positive(length, "Aisle length");
    require_positive(width, "Aisle width");
    require_positive(cabinet_height, "Cabinet height");
    require_positive(shelf_depth, "Shelf depth");
    if (2.0 * shelf_depth >= width)
        throw std::invalid_argument("Two shelves must leave a walkway: 2 * shelf_depth < width.");
}

void PlanarReflector::validate() const
{
    if (!is_finite(origin) || !is_unit(normal) || !is_unit(u_axis))
        throw std::invalid_argument("Reflector '" + label + "' needs a finite origin and unit normal/u axis.");
    if (std::abs(dot(normal, u_axis)) > 1e-9)
        throw std::invalid_argument("Reflector '" + label + "': u axis must lie in the plane.");
    if (!(u_max > u_min) || !(v_max > v_min))
        throw std::invalid_argument("Reflector '" + label + "' must have a positive extent.");
    if (std::abs(gamma) > 1.0 + 1e-12 || !std::isfinite(gamma.real()) || !std::isfinite(gamma.imag()))
        throw std::invalid_argument("Reflector '" + label + "': |Gamma| must not exceed 1.");
}

double Deployment::wavelength() const
{
    return wpt::wavelength(carrier_frequency_hz);
}

const EslDevice &Deployment::esl(std::size_t id) const
{
    auto it = std::find_if(esls.begin(), esls.end(), [id](const EslDevice &e) { return e.id == id; });
    if (it == esls.end())
        throw std::invalid_argument("ESL " + std::to_string(id) + " is not part of the deployment.");
    return *it;
}

void Deployment::validate() const
{
    aisle.validate();
    if (!(carrier_frequency_hz >= min_frequency_hz && carrier_frequency_hz <= max_frequency_hz))
        throw std::invalid_argument("Carrier frequency must lie in [300 MHz, 6 GHz].");
    if (antennas.empty())
        throw std::invalid_argument("Deployment has no antennas.");
    if (antennas.size() != num_arrays * elements_per_array)
        throw std::invalid_argument("Antenna count must equal arrays x elements per array.");
    esl_pattern.validate();

    const double lambda = wavelength();
    const double overhang = 0.25 * lambda;
    for (std::size_t i = 0; i < antennas.size(); ++i)
    {
        const auto &a = antennas[i];
        a.pattern.validate();
        if (!is_finite(a.position) || !is_unit(a.boresight))
            throw std::invalid_argument("Antenna " + std::to_string(i) + " needs a finite position and unit boresight.");
        if (a.position.x < -overhang || a.position.x > aisle.length + overhang ||
            a.position.y < 0.0 || a.position.y > aisle.width || a.position.z <= 0.0)
            throw std::invalid_argument("Antenna " + std::to_string(i) + " lies outside the aisle.");
        if (a.array_id != i / elements_per_array || a.element_index != i % elements_per_array)
            throw std::invalid_argument("Antennas must be ordered array by array.");
        if (a.element_index > 0)
        {
            double spacing = norm(a.position - antennas[i - 1].position);
            if (std::abs(spacing - 0.5 * lambda) >= 1e-9)
                throw std::invalid_argument("Antenna " + std::to_string(i) + " is not spaced lambda/2 from its neighbour.");
        }
    }

    std::set<std::size_t> ids;
    for (const auto &e : esls)
    {
        if (!ids.insert(e.id).second)
            throw std::invalid_argument("Duplicate ESL id " + std::to_string(e.id) + ".");
        if (!is_finite(e.position) || !is_unit(e.facing))
            throw std::invalid_argument("ESL " + std::to_string(e.id) + " needs a finite position and unit facing.");
        const auto &p = e.position;
        if (!(p.x > 0.0 && p.x < aisle.length && p.y > 0.0 && p.y < aisle.width && p.z > 0.0 && p.z < aisle.cabinet_height))
            throw std::invalid_argument("ESL " + std::to_string(e.id) + " lies outside the aisle.");
    }

    for (const auto &r : reflectors)
        r.validate();
}

void SceneConfig::validate() const
{
    aisle.validate();
    if (!(frequency_hz >= min_frequency_hz && frequency_hz <= max_frequency_hz))
        throw std::invalid_argument("Carrier frequency must lie in [300 MHz, 6 GHz].");
    if (array_y)
    {
        if (array_y->empty())
            throw std::invalid_argument("At least one antenna array is required.");
        for (double y : *array_y)
            if (!(y >= 0.0 && y <= aisle.width))
                throw std::invalid_argument("Array lateral position must lie within the aisle width.");
    }
    if (array_height)
        require_positive(*array_height, "Array height");
    if (!(tilt_deg >= 0.0 && tilt_deg <= 180.0))
        throw std::invalid_argument("Array tilt must lie in [0, 180] degrees.");
    if (elements_per_array && *elements_per_array == 0)
        throw std::invalid_argument("Elements per array must be at least 1.");
    antenna_pattern.validate();
    if (esl_pattern)
        esl_pattern->validate();
    if (num_esls == 0)
        throw std::invalid_argument("At least one ESL is required.");
    if (esl_row_heights.empty())
        throw std::invalid_argument("At least one ESL row is required.");
    for (double h : esl_row_heights)
        if (!(h > 0.0 && h < aisle.cabinet_height))
            throw std::invalid_argument("ESL row heights must lie strictly between floor and cabinet top.");
    if (std::abs(reflection_coefficient) > 1.0)
        throw std::invalid_argument("Reflection coefficient magnitude must not exceed 1.");
}

std::size_t elements_for_length(double length, double lambda)
{
    require_positive(length, "Array length");
    require_positive(lambda, "Wavelength");
    return static_cast<std::size_t>(std::llround(length / (0.5 * lambda))) + 1;
}

std::vector<EslDevice> esl_layout(std::size_t n, const Aisle &aisle, const std::vector<double> &row_heights)
{
    aisle.validate();
    if (n == 0)
        throw std::invalid_argument("At least one ESL is required.");
    if (row_heights.empty())
        throw std::invalid_argument("At least one ESL row is required.");

    const std::size_t rows = row_heights.size();
    const std::size_t per_column = 2 * rows;
    const std::size_t columns = (n + per_column - 1) / per_column;
    const double run = aisle.length - 2.0 * esl_end_margin;
    if (!(run > 0.0))
        throw std::invalid_argument("Aisle too short for the ESL end margins.");

    double pitch = 0.0;
    if (columns > 1)
    {
        pitch = run / static_cast<double>(columns - 1);
        if (pitch < min_esl_pitch)
            throw std::invalid_argument("Requested ESL count exceeds the shelf capacity at 5 cm pitch.");
    }

    std::vector<EslDevice> out;
    out.reserve(n);
    const std::size_t per_side = columns * rows;
    for (std::size_t k = 0; k < n; ++k)
    {
        std::size_t side = k / per_side;
        std::size_t col = (k % per_side) / rows;
        std::size_t row = k % rows;

        EslDevice e;
        e.id = k;
        e.position.x = esl_end_margin + pitch * static_cast<double>(col);
        e.position.z = row_heights[row];
        if (side == 0)
        {
            e.position.y = aisle.left_face_y();
            e.facing = {0.0, 1.0, 0.0};
        }
        else
        {
            e.position.y = aisle.right_face_y();
            e.facing = {0.0, -1.0, 0.0};
        }
        out.push_back(e);
    }
    return out;
}

std::vector<PlanarReflector> default_reflectors(const Aisle &aisle, std::complex<double> gamma)
{
    std::vector<PlanarReflector> out(3);

    auto &floor = out[0];
    floor.label = "floor";
    floor.origin = {0.0, aisle.left_face_y(), 0.0};
    floor.normal = {0.0, 0.0, 1.0};
    floor.u_axis = {1.0, 0.0, 0.0};
    floor.u_min = 0.0;
    floor.u_max = aisle.length;
    floor.v_min = 0.0; // v = +y
    floor.v_max = aisle.right_face_y() - aisle.left_face_y();

    auto &left = out[1];
    left.label = "left_cabinet_front";
    left.origin = {0.0, aisle.left_face_y(), 0.0};
    left.normal = {0.0, 1.0, 0.0};
    left.u_axis = {0.0, 0.0, 1.0};
    left.u_min = 0.0;
    left.u_max = aisle.cabinet_height;
    left.v_min = 0.0; // v = +x
    left.v_max = aisle.length;

    auto &right = out[2];
    right.label = "right_cabinet_front";
    right.origin = {0.0, aisle.right_face_y(), 0.0};
    right.normal = {0.0, -1.0, 0.0};
    right.u_axis = {0.0, 0.0, 1.0};
    right.u_min = 0.0;
    right.u_max = aisle.cabinet_height;
    right.v_min = -aisle.length; // v = -x
    right.v_max = 0.0;

    for (auto &r : out)
        r.gamma = gamma;
    return out;
}

Deployment build_default_aisle(const SceneConfig &config)
{
    config.validate();

    Deployment dep;
    dep.aisle = config.aisle;
    dep.carrier_frequency_hz = config.frequency_hz;
    const double lambda = dep.wavelength();
    const double spacing = 0.5 * lambda;

    std::vector<double> ys = config.array_y.value_or(std::vector<double>{
        0.5 * config.aisle.shelf_depth, 0.5 * config.aisle.width, config.aisle.width - 0.5 * config.aisle.shelf_depth});
    double height = config.array_height.value_or(config.aisle.cabinet_height + 0.1);
    std::size_t m = config.elements_per_array.value_or(elements_for_length(config.aisle.length, lambda));

    double span = spacing * static_cast<double>(m - 1);
    if (span > config.aisle.length + spacing)
        throw std::invalid_argument("Array does not fit in the aisle at lambda/2 spacing.");
    double x0 = 0.5 * (config.aisle.length - span);

    dep.num_arrays = ys.size();
    dep.elements_per_array = m;
    dep.antennas.reserve(ys.size() * m);

    const double tilt = config.tilt_deg * pi / 180.0;
    const double centre = 0.5 * config.aisle.width;
    for (std::size_t a = 0; a < ys.size(); ++a)
    {
        double towards_centre = ys[a] < centre - 1e-9 ? 1.0 : (ys[a] > centre + 1e-9 ? -1.0 : 0.0);
        Vec3 boresight = towards_centre == 0.0 ? Vec3{0.0, 0.0, -std::cos(tilt)}
                                               : Vec3{0.0, towards_centre * std::sin(tilt), -std::cos(tilt)};
        if (towards_centre == 0.0 && std::abs(boresight.z) < 1e-12)
            boresight = {0.0, 1.0, 0.0}; // 90 degree tilt on the centre line: pick +y
        boresight = normalized(boresight);

        for (std::size_t i = 0; i < m; ++i)
        {
            AntennaElement el;
            el.position = {x0 + spacing * static_cast<double>(i), ys[a], height};
            el.boresight = boresight;
            el.pattern = config.antenna_pattern;
            el.array_id = a;
            el.element_index = i;
            dep.antennas.push_back(el);
        }
    }

    dep.esl_pattern = config.esl_pattern.value_or(config.antenna_pattern);
    dep.esls = esl_layout(config.num_esls, config.aisle, config.esl_row_heights);
    if (config.reflectors_enabled)
        dep.reflectors = default_reflectors(config.aisle, config.reflection_coefficient);

    dep.validate();
    return dep;
}

LinkGeometry link_geometry(Point3 tx, Vec3 tx_axis, Point3 rx, Vec3 rx_axis)
{
    Vec3 delta = rx - tx;
    double d = norm(delta);
    if (!(d > 0.0))
        throw std::domain_error("Antenna and ESL positions coincide.");
    Vec3 u = (1.0 / d) * delta;

    LinkGeometry g;
    g.distance = d;
    auto dep = direction_in_frame(make_frame(tx_axis), u);
    auto arr = direction_in_frame(make_frame(rx_axis), -1.0 * u);
    g.theta_tx = dep.theta;
    g.phi_tx = dep.phi;
    g.theta_rx = arr.theta;
    g.phi_rx = arr.phi;
    return g;
}

LinkGeometry link_geometry(const AntennaElement &a, const EslDevice &e)
{
    return link_geometry(a.position, a.boresight, e.position, e.facing);
}

std::string_view to_string(EslRole role)
{
    return role == EslRole::closest ? "closest" : "furthest";
}

double mean_antenna_distance(const Deployment &dep, const EslDevice &e)
{
    if (dep.antennas.empty())
        throw std::invalid_argument("Deployment has no antennas.");
    double sum = 0.0;
    for (const auto &a : dep.antennas)
        sum += norm(e.position - a.position);
    return sum / static_cast<double>(dep.antennas.size());
}

std::size_t designated_esl(const Deployment &dep, EslRole role)
{
    if (dep.esls.empty())
        throw std::invalid_argument("Deployment has no ESLs.");

    const EslDevice *best = nullptr;
    double best_d = 0.0;
    for (const auto &e : dep.esls)
    {
        double d = mean_antenna_distance(dep, e);
        if (best == nullptr)
        {
            best = &e;
            best_d = d;
            continue;
        }
        double tol = 1e-9 * std::max(std::abs(d), std::abs(best_d));
        bool better = role == EslRole::furthest ? d > best_d + tol : d < best_d - tol;
        bool tie = std::abs(d - best_d) <= tol;
        if (better || (tie && e.id < best->id))
        {
            best = &e;
            best_d = d;
        }
    }
    return best->id;
}

Deployment with_antenna_pattern(Deployment dep, const RadiationPattern &pattern)
{
    pattern.validate();
    for (auto &a : dep.antennas)
        a.pattern = pattern;
    dep.esl_pattern = pattern;
    return dep;
}

} // namespace wpt
