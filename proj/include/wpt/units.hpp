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

#include <cstddef>
#include <numbers>

namespace wpt {

inline constexpr double speed_of_light = 299792458.0; // m/s
inline constexpr double pi = std::numbers::pi;
inline constexpr double seconds_per_day = 86400.0;

// Peak gain of the half-wave dipole used as the ERP reference.
inline constexpr double dipole_reference_dbi = 2.15;

double dbm_from_watts(double watts);
double watts_from_dbm(double dbm);

double db_from_ratio(double ratio);
double ratio_from_db(double db);

// Total array power from the per-element power of L equal elements.
double total_power_dbm(double per_antenna_dbm, std::size_t num_antennas);
double per_antenna_power_dbm(double total_dbm, std::size_t num_antennas);

double wavelength(double frequency_hz);

} // namespace wpt
