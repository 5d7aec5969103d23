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

#include "wpt/energy.hpp"
#include "wpt/units.hpp"

#include <cmath>
#include <stdexcept>

namespace wpt {

void EnergyModel::validate() const
{
    if (!(e_update_j > 0.0) || !std::isfinite(e_update_j))
        throw std::invalid_argument("Update energy must be positive.");
    if (!(updates_per_day >= 1.0) || !std::isfinite(updates_per_day))
        throw std::invalid_argument("At least one update per day is required.");
    if (!(harvester_efficiency > 0.0 && harvester_efficiency <= 1.0))
        throw std::invalid_argument("Harvester efficiency must lie in (0, 1].");
    if (!std::isfinite(harvester_sensitivity_dbm))
        throw std::invalid_argument("Harvester sensitivity must be finite.");
    if (!(buffer_voltage_v > 0.0) || !std::isfinite(buffer_voltage_v))
        throw std::invalid_argument("Buffer voltage must be positive.");
    if (!(esl_density_per_m2 > 0.0) || !std::isfinite(esl_density_per_m2))
        throw std::invalid_argument("ESL density must be positive.");
}

double daily_energy(const EnergyModel &m)
{
    m.validate();
    return m.e_update_j * m.updates_per_day;
}

double net_continuous_power(const EnergyModel &m)
{
    return daily_energy(m) / seconds_per_day;
}

double power_density(const EnergyModel &m)
{
    return net_continuous_power(m) * m.esl_density_per_m2;
}

double required_rf_continuous_w(const EnergyModel &m)
{
    return net_continuous_power(m) / m.harvester_efficiency;
}

double required_rf_continuous(const EnergyModel &m)
{
    return dbm_from_watts(required_rf_continuous_w(m));
}

double charge_window(std::size_t n_esls, const EnergyModel &m)
{
    m.validate();
    if (n_esls == 0)
        throw std::invalid_argument("At least one ESL is required.");
    return seconds_per_day / (static_cast<double>(n_esls) * m.updates_per_day);
}

SequentialTarget required_rx_power_sequential(std::size_t n_esls, const EnergyModel &m)
{
    SequentialTarget t;
    t.watts = m.e_update_j / charge_window(n_esls, m) / m.harvester_efficiency;
    t.dbm = dbm_from_watts(t.watts);
    if (t.dbm < m.harvester_sensitivity_dbm)
        throw std::domain_error("Required RF input is below the harvester sensitivity.");
    t.near_sensitivity = t.dbm < m.harvester_sensitivity_dbm + sensitivity_warning_margin_db;
    return t;
}

double buffer_capacitance(const EnergyModel &m)
{
    m.validate();
    return 2.0 * m.e_update_j / (m.buffer_voltage_v * m.buffer_voltage_v);
}

} // namespace wpt
