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

#include "wpt/units.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

using namespace wpt;

TEST_CASE("dBm conversions")
{
    CHECK(dbm_from_watts(1.0) == doctest::Approx(30.0).epsilon(1e-15));
    CHECK(dbm_from_watts(1e-3) == doctest::Approx(0.0));
    CHECK(watts_from_dbm(33.0) == doctest::Approx(1.9952623149688795).epsilon(1e-14));
    CHECK(dbm_from_watts(0.0) == -std::numeric_limits<double>::infinity());
    CHECK_THROWS_AS(dbm_from_watts(-1.0), std::invalid_argument);

    for (double dbm = -60.0; dbm <= 70.0; dbm += 0.37)
        CHECK(std::abs(dbm_from_watts(watts_from_dbm(dbm)) - dbm) < 1e-9);
}

TEST_CASE("total and per-antenna power are 10 log10 L apart")
{
    for (std::size_t l : {1u, 2u, 3u, 117u, 351u, 10000u})
    {
        CHECK(std::abs(total_power_dbm(20.0, l) - 20.0 - 10.0 * std::log10(double(l))) < 1e-12);
        CHECK(std::abs(per_antenna_power_dbm(total_power_dbm(20.0, l), l) - 20.0) < 1e-12);
    }
    CHECK_THROWS_AS(total_power_dbm(0.0, 0), std::invalid_argument);
}

TEST_CASE("wavelength")
{
    CHECK(wavelength(868e6) == doctest::Approx(0.34538301612903227).epsilon(1e-15));
    CHECK(wavelength(speed_of_light) == doctest::Approx(1.0));
    CHECK_THROWS_AS(wavelength(0.0), std::invalid_argument);
}
