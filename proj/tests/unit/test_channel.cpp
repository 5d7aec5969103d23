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

#include <doctest.h>

#include "wpt/channel.hpp"
#include "wpt/units.hpp"

#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <stdexcept>

using namespace wpt;

namespace {

// One isotropic antenna and one isotropic ESL above an infinite-looking floor.
Deployment two_ray_scene(Point3 tx, Point3 rx, std::complex<double> gamma)
{
    Deployment d;
    d.aisle.length = 100.0;
    d.aisle.width = 100.0;
    d.aisle.cabinet_height = 50.0;
    d.aisle.shelf_depth = 1.0;
    d.num_arrays = 1;
    d.elements_per_array = 1;
    d.antennas.push_back({tx, {0, 0, -1}, RadiationPattern::isotropic(), 0, 0});
    d.esl_pattern = RadiationPattern::isotropic();
    d.esls.push_back({0, rx, {0, 1, 0}});
    PlanarReflector floor;
    floor.label = "floor";
    floor.origin = {0, 0, 0};
    floor.normal = {0, 0, 1};
    floor.u_axis = {1, 0, 0};
    floor.u_min = -1e3;
    floor.u_max = 1e3;
    floor.v_min = -1e3;
    floor.v_max = 1e3;
    floor.gamma = gamma;
    d.reflectors.push_back(floor);
    return d;
}

} // namespace

TEST_CASE("Friis gain")
{
    const double lambda = 0.5;
    // At d = lambda / (4 pi) the free-space factor is exactly one.
    CHECK(friis_link_gain(lambda / (4 * pi), lambda, 1.0, 1.0) == doctest::Approx(1.0));
    CHECK(friis_link_gain(10.0, lambda, 2.0, 3.0) == doctest::Approx(6.0 * std::pow(0.5 / (40 * pi), 2)));
    // Inverse square law.
    CHECK(friis_link_gain(2.0, lambda, 1, 1) / friis_link_gain(4.0, lambda, 1, 1) == doctest::Approx(4.0));
    CHECK_THROWS_AS(friis_link_gain(0.0, lambda, 1, 1), std::domain_error);
    CHECK_THROWS_AS(friis_link_gain(-1.0, lambda, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(friis_link_gain(1.0, lambda, -1, 1), std::invalid_argument);
    CHECK(is_near_field(0.6, 0.35));
    CHECK_FALSE(is_near_field(0.8, 0.35));
}

TEST_CASE("LOS entry carries the Friis magnitude and the propagation phase")
{
    const auto dep = build_default_aisle();
    const auto &a = dep.antennas.front();
    const auto &e = dep.esl(0);
    const double lambda = dep.wavelength();
    const auto h = los_channel_entry(a, e, dep.esl_pattern, lambda);

    const double d = norm(e.position - a.position);
    CHECK(d == doctest::Approx(2.159715304685146).epsilon(1e-12));
    const auto g = link_geometry(a, e);
    const double friis = friis_link_gain(d, lambda, gain(a.pattern, g.theta_tx, g.phi_tx),
                                         gain(dep.esl_pattern, g.theta_rx, g.phi_rx));
    CHECK(std::norm(h) == doctest::Approx(friis).epsilon(1e-12));
    const double expected_phase = std::remainder(-2 * pi * d / lambda, 2 * pi);
    CHECK(std::arg(h) == doctest::Approx(expected_phase).epsilon(1e-9));
}

TEST_CASE("LOS gains against an independent vectorised computation")
{
    // Sums and maxima from a separate NumPy implementation of the same scene.
    struct Case
    {
        RadiationPattern pattern;
        std::size_t esl;
        double sum, max;
        std::size_t argmax;
    };
    const Case cases[] = {
        {RadiationPattern::dipole(), 151, 3.642827731900468e-02, 7.387109134046930e-04, 54},
        {RadiationPattern::dipole(), 0, 8.654038171182184e-03, 8.883807582349986e-05, 14},
        {RadiationPattern::patch(2), 151, 2.458895316396206e-02, 2.417309204758414e-03, 175},
        {RadiationPattern::patch(2), 0, 1.414408558403034e-02, 8.606870447191754e-04, 117},
    };
    const auto base = build_default_aisle();
    for (const auto &c : cases)
    {
        const auto dep = with_antenna_pattern(base, c.pattern);
        const auto g = channel_vector(dep, c.esl, false).power_gains();
        CHECK(std::accumulate(g.begin(), g.end(), 0.0) == doctest::Approx(c.sum).epsilon(1e-9));
        const auto it = std::max_element(g.begin(), g.end());
        CHECK(*it == doctest::Approx(c.max).epsilon(1e-9));
        CHECK(static_cast<std::size_t>(it - g.begin()) == c.argmax);
    }
}

TEST_CASE("image sources")
{
    const auto dep = build_default_aisle();
    // Outer left array sits behind the left cabinet front.
    const auto imgs = image_sources(dep.antennas.front(), dep.reflectors);
    REQUIRE(imgs.size() == 2);
    CHECK(imgs[0].reflector_index == 0);
    CHECK(imgs[0].element.position.z == doctest::Approx(-2.6));
    CHECK(imgs[0].element.boresight.z == doctest::Approx(1.0));
    CHECK(imgs[1].reflector_index == 2);
    CHECK(imgs[1].element.position.y == doctest::Approx(2 * 3.4 - 0.5));

    CHECK(image_sources(dep.antennas[117], dep.reflectors).size() == 3);
}

TEST_CASE("an ESL on a cabinet face sees no reflection from that face")
{
    auto dep = build_default_aisle();
    const auto paths = channel_paths(dep, dep.esl(0), true);
    for (const auto &p : paths)
        if (p.type == PathType::image)
            CHECK(p.reflector_index != 1);
    const auto right = channel_paths(dep, dep.esl(300), true);
    for (const auto &p : right)
        if (p.type == PathType::image)
            CHECK(p.reflector_index != 2);
}

TEST_CASE("specular point lies on the reflector between the endpoints")
{
    const auto dep = two_ray_scene({0, 0, 3}, {4, 0, 1}, -0.5);
    const auto p = specular_point(dep.antennas[0], dep.reflectors[0], dep.esls[0].position);
    REQUIRE(p.has_value());
    CHECK(p->x == doctest::Approx(3.0));
    CHECK(p->z == doctest::Approx(0.0));

    auto small = dep.reflectors[0];
    small.u_max = 2.0;
    CHECK_FALSE(specular_point(dep.antennas[0], small, dep.esls[0].position).has_value());
    CHECK_FALSE(specular_point(dep.antennas[0], dep.reflectors[0], {4, 0, -1}).has_value());
}

TEST_CASE("two-ray channel")
{
    const Point3 tx{1, 2, 3}, rx{6, 2, 1};
    const auto dep = two_ray_scene(tx, rx, {-0.7, 0.1});
    const double lambda = dep.wavelength();
    const double d1 = std::sqrt(25.0 + 4.0), d2 = std::sqrt(25.0 + 16.0);
    const std::complex<double> j{0, 1};
    const auto expected = lambda / (4 * pi) *
                          (std::exp(-j * 2.0 * pi * d1 / lambda) / d1 +
                           std::complex<double>{-0.7, 0.1} * std::exp(-j * 2.0 * pi * d2 / lambda) / d2);
    const auto h = channel_vector(dep, 0, true).entries[0];
    CHECK(std::abs(h - expected) < 1e-12 * std::abs(expected));
    CHECK(channel_paths(dep, dep.esls[0], true).size() == 2);
}

TEST_CASE("zero reflection coefficient reproduces LOS bit for bit")
{
    SceneConfig c;
    c.reflection_coefficient = 0.0;
    const auto dep = build_default_aisle(c);
    for (std::size_t id : {0u, 151u, 333u, 599u})
    {
        const auto los = channel_vector(dep, id, false);
        const auto smc = channel_vector(dep, id, true);
        CHECK(los.entries == smc.entries);
    }
}

TEST_CASE("reflections change the channel when enabled")
{
    const auto dep = build_default_aisle();
    const auto los = channel_vector(dep, 151, false).power_gains();
    const auto smc = channel_vector(dep, 151, true).power_gains();
    CHECK(los != smc);
    CHECK(channel_paths(dep, dep.esl(151), true).size() > channel_paths(dep, dep.esl(151), false).size());
}

TEST_CASE("non-physical channels are rejected")
{
    auto dep = two_ray_scene({0, 0, 1}, {0.001, 0, 1}, 0.0);
    CHECK_THROWS_AS(channel_vector(dep, 0, false), std::domain_error);
    dep = two_ray_scene({0, 0, 1}, {0, 0, 1}, 0.0);
    CHECK_THROWS_AS(channel_vector(dep, 0, false), std::domain_error);
}

TEST_CASE("near-field links are counted")
{
    const auto dep = two_ray_scene({0, 0, 1}, {0.5, 0, 1}, 0.0);
    CHECK(channel_vector(dep, 0, false).near_field_links == 1);
}
