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

#include "wpt/energy.hpp"

#include <cmath>
#include <stdexcept>

using namespace wpt;

TEST_CASE("default budget")
{
    const EnergyModel m;
    CHECK(daily_energy(m) == 1.0);
    CHECK(net_continuous_power(m) == doctest::Approx(1.0 / 86400.0).epsilon(1e-15));
    CHECK(net_continuous_power(m) * 1e6 == doctest::Approx(11.574).epsilon(1e-4));
    CHECK(required_rf_continuous_w(m) == doctest::Approx(1.0 / (86400.0 * 0.3)).epsilon(1e-15));
    CHECK(required_rf_continuous(m) == doctest::Approx(10 * std::log10(1e3 / (86400.0 * 0.3))).epsilon(1e-12));
    CHECK(required_rf_continuous(m) == doctest::Approx(-14.136).epsilon(1e-4));
    CHECK(power_density(m) * 1e3 == doctest::Approx(0.2315).epsilon(1e-3));
    CHECK(buffer_capacitance(m) == 0.04);
}

TEST_CASE("charge window and sequential target")
{
    const EnergyModel m;
    CHECK(charge_window(600, m) == 72.0);
    CHECK(charge_window(1, m) == 43200.0);

    const auto t = required_rx_power_sequential(600, m);
    CHECK(t.watts == doctest::Approx(0.5 / 72.0 / 0.3).epsilon(1e-15));
    CHECK(t.watts * 1e3 == doctest::Approx(23.148).epsilon(1e-4));
    CHECK(t.dbm == doctest::Approx(13.645).epsilon(1e-4));
    CHECK_FALSE(t.near_sensitivity);

    // One label served twice a day needs the continuous level, close to the
    // harvester floor.
    const auto one = required_rx_power_sequential(1, m);
    CHECK(one.watts == doctest::Approx(required_rf_continuous_w(m)).epsilon(1e-14));
    CHECK(one.near_sensitivity);

    EnergyModel once = m;
    once.updates_per_day = 1.0;
    CHECK(required_rx_power_sequential(1, once).dbm == doctest::Approx(-17.146).epsilon(1e-3));
}

TEST_CASE("sequential target scales linearly with the label count")
{
    const EnergyModel m;
    for (std::size_t n : {10u, 100u, 1000u, 5000u})
        CHECK(required_rx_power_sequential(2 * n, m).watts ==
              doctest::Approx(2 * required_rx_power_sequential(n, m).watts).epsilon(1e-14));
}

TEST_CASE("below sensitivity is an error")
{
    EnergyModel m;
    m.e_update_j = 1e-3;
    CHECK_THROWS_AS(required_rx_power_sequential(1, m), std::domain_error);
    CHECK_NOTHROW(required_rx_power_sequential(10000, m));
}

TEST_CASE("invalid models")
{
    EnergyModel m;
    m.harvester_efficiency = 0.0;
    CHECK_THROWS_AS(daily_energy(m), std::invalid_argument);
    m = EnergyModel{};
    m.harvester_efficiency = 1.2;
    CHECK_THROWS_AS(m.validate(), std::invalid_argument);
    m = EnergyModel{};
    m.updates_per_day = 0.5;
    CHECK_THROWS_AS(m.validate(), std::invalid_argument);
    CHECK_THROWS_AS(charge_window(0, EnergyModel{}), std::invalid_argument);
}
