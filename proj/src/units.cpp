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

#include "wpt/units.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace wpt {

double dbm_from_watts(double watts)
{
    if (watts < 0.0)
        throw std::invalid_argument("Power cannot be negative.");
    if (watts == 0.0)
        return -std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(watts) + 30.0;
}

double watts_from_dbm(double dbm)
{
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

double db_from_ratio(double ratio)
{
    if (ratio < 0.0)
        throw std::invalid_argument("Power ratio cannot be negative.");
    if (ratio == 0.0)
        return -std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(ratio);
}

double ratio_from_db(double db)
{
    return std::pow(10.0, db / 10.0);
}

double total_power_dbm(double per_antenna_dbm, std::size_t num_antennas)
{
    if (num_antennas == 0)
        throw std::invalid_argument("Number of antennas must be at least 1.");
    return per_antenna_dbm + 10.0 * std::log10(static_cast<double>(num_antennas));
}

double per_antenna_power_dbm(double total_dbm, std::size_t num_antennas)
{
    if (num_antennas == 0)
        throw std::invalid_argument("Number of antennas must be at least 1.");
    return total_dbm - 10.0 * std::log10(static_cast<double>(num_antennas));
}

double wavelength(double frequency_hz)
{
    if (!(frequency_hz > 0.0) || !std::isfinite(frequency_hz))
        throw std::invalid_argument("Frequency must be positive and finite.");
    return speed_of_light / frequency_hz;
}

} // namespace wpt
