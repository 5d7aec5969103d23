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

#include "wpt/channel.hpp"
#include "wpt/units.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wpt {

namespace {

constexpr double front_tolerance = 1e-9;

std::complex<double> path_amplitude(double gain_product, double distance, double lambda)
{
    double magnitude = std::sqrt(gain_product) * lambda / (4.0 * pi * distance);
    return std::polar(magnitude, -2.0 * pi * distance / lambda);
}

} // namespace

double friis_link_gain(double distance, double lambda, double g_tx, double g_rx)
{
    if (distance == 0.0)
        throw std::domain_error("Zero link distance (near-field singularity).");
    if (!(distance > 0.0) || !(lambda > 0.0))
        throw std::invalid_argument("Distance and wavelength must be positive.");
    if (!(g_tx >= 0.0) || !(g_rx >= 0.0))
        throw std::invalid_argument("Antenna gains must be non-negative.");
    double f = lambda / (4.0 * pi * distance);
    return g_tx * g_rx * f * f;
}

bool is_near_field(double distance, double lambda)
{
    return distance < 2.0 * lambda;
}

std::complex<double> los_channel_entry(const AntennaElement &a, const EslDevice &e,
                                       const RadiationPattern &esl_pattern, double lambda)
{
    auto g = link_geometry(a, e);
    double g_tx = gain(a.pattern, g.theta_tx, g.phi_tx);
    double g_rx = gain(esl_pattern, g.theta_rx, g.phi_rx);
    return path_amplitude(g_tx * g_rx, g.distance, lambda);
}

std::vector<ImageSource> image_sources(const AntennaElement &a, const std::vector<PlanarReflector> &reflectors)
{
    std::vector<ImageSource> out;
    out.reserve(reflectors.size());
    for (std::size_t k = 0; k < reflectors.size(); ++k)
    {
        const auto &r = reflectors[k];
        if (dot(a.position - r.origin, r.normal) <= front_tolerance)
            continue; // behind the surface, no specular path
        ImageSource img;
        img.element = a;
        img.element.position = mirror_point(a.position, r.origin, r.normal);
        img.element.boresight = mirror_direction(a.boresight, r.normal);
        img.gamma = r.gamma;
        img.reflector_index = k;
        out.push_back(img);
    }
    return out;
}

std::optional<Point3> specular_point(const AntennaElement &a, const PlanarReflector &r, Point3 receiver)
{
    double h_tx = dot(a.position - r.origin, r.normal);
    double h_rx = dot(receiver - r.origin, r.normal);
    if (h_tx <= front_tolerance || h_rx <= front_tolerance)
        return std::nullopt;

    Point3 image = mirror_point(a.position, r.origin, r.normal);
    Point3 p = image + (h_tx / (h_tx + h_rx)) * (receiver - image);

    Vec3 rel = p - r.origin;
    double s = dot(rel, r.u_axis);
    double t = dot(rel, r.v_axis());
    if (s < r.u_min || s > r.u_max || t < r.v_min || t > r.v_max)
        return std::nullopt;
    return p;
}

std::vector<PathComponent> channel_paths(const Deployment &dep, const EslDevice &e, bool include_smc)
{
    const double lambda = dep.wavelength();
    std::vector<PathComponent> out;
    out.reserve(dep.antennas.size() * (include_smc ? 1 + dep.reflectors.size() : 1));

    for (std::size_t l = 0; l < dep.antennas.size(); ++l)
    {
        const auto &a = dep.antennas[l];

        PathComponent los;
        los.antenna_index = l;
        los.type = PathType::los;
        los.distance = norm(e.position - a.position);
        los.amplitude = los_channel_entry(a, e, dep.esl_pattern, lambda);
        out.push_back(los);

        if (!include_smc)
            continue;

        for (const auto &img : image_sources(a, dep.reflectors))
        {
            const auto &r = dep.reflectors[img.reflector_index];
            if (img.gamma == 0.0 || !specular_point(a, r, e.position))
                continue;
            auto g = link_geometry(img.element.position, img.element.boresight, e.position, e.facing);
            double g_tx = gain(img.element.pattern, g.theta_tx, g.phi_tx);
            double g_rx = gain(dep.esl_pattern, g.theta_rx, g.phi_rx);

            PathComponent p;
            p.antenna_index = l;
            p.type = PathType::image;
            p.reflector_index = img.reflector_index;
            p.distance = g.distance;
            p.amplitude = img.gamma * path_amplitude(g_tx * g_rx, g.distance, lambda);
            out.push_back(p);
        }
    }
    return out;
}

std::vector<double> ChannelVector::power_gains() const
{
    std::vector<double> out;
    out.reserve(entries.size());
    for (auto h : entries)
        out.push_back(std::norm(h));
    return out;
}

ChannelVector channel_vector(const Deployment &dep, std::size_t esl_id, bool include_smc)
{
    const EslDevice &e = dep.esl(esl_id);
    const double lambda = dep.wavelength();

    ChannelVector cv;
    cv.frequency_hz = dep.carrier_frequency_hz;
    cv.esl_id = esl_id;
    cv.entries.assign(dep.antennas.size(), {0.0, 0.0});

    for (const auto &p : channel_paths(dep, e, include_smc))
    {
        cv.entries[p.antenna_index] += p.amplitude;
        if (p.type == PathType::los && is_near_field(p.distance, lambda))
            ++cv.near_field_links;
    }

    for (std::size_t l = 0; l < cv.entries.size(); ++l)
        if (std::norm(cv.entries[l]) > 1.0)
            throw std::domain_error("Non-physical channel: |h|^2 > 1 on antenna " + std::to_string(l) +
                                    " (link too short for the far-field model).");
    return cv;
}

} // namespace wpt
