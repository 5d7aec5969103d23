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

namespace wpt {

/// Device-side energy budget of one shelf label.
struct EnergyModel
{
    double e_update_j = 0.5;             // one screen update incl. MCU and downlink
    double updates_per_day = 2.0;
    double harvester_efficiency = 0.30;  // constant RF-to-DC conversion
    double harvester_sensitivity_dbm = -20.0;
    double buffer_voltage_v = 5.0;
    double esl_density_per_m2 = 20.0;

    void validate() const;
};

// Received powers within this margin above the sensitivity are flagged.
inline constexpr double sensitivity_warning_margin_db = 6.0;

double daily_energy(const EnergyModel &m);           // J/day
double net_continuous_power(const EnergyModel &m);   // W
double power_density(const EnergyModel &m);          // W/m^2 over the labelled area
double required_rf_continuous_w(const EnergyModel &m);
double required_rf_continuous(const EnergyModel &m); // dBm

/// Seconds available to charge one of n labels when they are served in turn.
double charge_window(std::size_t n_esls, const EnergyModel &m);

struct SequentialTarget
{
    double watts = 0.0;
    double dbm = 0.0;
    bool near_sensitivity = false; // less than 6 dB above the harvester sensitivity
};

/// RF input needed to refill the buffer within one charge window. Throws
/// std::domain_error if the level is below the harvester sensitivity.
SequentialTarget required_rx_power_sequential(std::size_t n_esls, const EnergyModel &m);

/// Lower bound on the buffer capacitor from E = C V^2 / 2.
double buffer_capacitance(const EnergyModel &m);

} // namespace wpt
