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

#include "wpt/compliance.hpp"
#include "wpt/units.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace wpt {

std::string_view to_string(LimitMode mode)
{
    return mode == LimitMode::per_antenna ? "per_antenna" : "total";
}

std::string_view to_string(LimitReference ref)
{
    return ref == LimitReference::conducted ? "conducted" : "erp";
}

LimitMode limit_mode_from_string(std::string_view name)
{
    if (name == "per_antenna")
        return LimitMode::per_antenna;
    if (name == "total")
        return LimitMode::total;
    throw std::invalid_argument("Unknown limit mode '" + std::string(name) + "'.");
}

LimitReference limit_reference_from_string(std::string_view name)
{
    if (name == "conducted")
        return LimitReference::conducted;
    if (name == "erp")
        return LimitReference::erp;
    throw std::invalid_argument("Unknown limit reference '" + std::string(name) + "'.");
}

RegulatoryLimit RegulatoryLimit::eu868()
{
    return {"EU 865-868 MHz RFID", 33.0, LimitMode::per_antenna, LimitReference::erp};
}

RegulatoryLimit RegulatoryLimit::eu917()
{
    return {"EU 915-921 MHz RFID", 36.0, LimitMode::per_antenna, LimitReference::erp};
}

RegulatoryLimit RegulatoryLimit::preset(std::string_view band)
{
    if (band == "eu868")
        return eu868();
    if (band == "eu917")
        return eu917();
    throw std::invalid_argument("Unknown band preset '" + std::string(band) + "'.");
}

ComplianceVerdict check(const PowerAllocation &alloc, std::span<const double> peak_gain_dbi,
                        const RegulatoryLimit &limit)
{
    if (peak_gain_dbi.size() != alloc.per_antenna.size())
        throw std::invalid_argument("One peak gain per allocated antenna is required.");

    auto radiated_offset = [&](std::size_t l) {
        return limit.reference == LimitReference::erp ? peak_gain_dbi[l] - dipole_reference_dbi : 0.0;
    };

    ComplianceVerdict v;
    if (limit.mode == LimitMode::per_antenna)
    {
        double worst = -std::numeric_limits<double>::infinity();
        for (std::size_t l = 0; l < alloc.per_antenna.size(); ++l)
        {
            if (!(alloc.per_antenna[l] > 0.0))
                continue;
            double level = dbm_from_watts(alloc.per_antenna[l]) + radiated_offset(l);
            if (level > worst)
            {
                worst = level;
                v.binding_element = l;
            }
        }
        v.margin_db = limit.limit_dbm - worst;
    }
    else
    {
        // Sum weighted relative to the first element so that equal gains reduce
        // to dbm(sum P) + offset, bit-identical to the per-antenna form at L = 1.
        double weighted_w = 0.0;
        const double reference = alloc.per_antenna.empty() ? 0.0 : radiated_offset(0);
        for (std::size_t l = 0; l < alloc.per_antenna.size(); ++l)
        {
            double rel = radiated_offset(l) - reference;
            weighted_w += rel == 0.0 ? alloc.per_antenna[l] : alloc.per_antenna[l] * ratio_from_db(rel);
        }
        v.margin_db = limit.limit_dbm - (dbm_from_watts(weighted_w) + reference);
    }
    v.compliant = v.margin_db >= 0.0;
    return v;
}

double max_compliant_total_dbm(const RegulatoryLimit &limit, double peak_dbi, std::size_t num_antennas)
{
    double offset = limit.reference == LimitReference::erp ? peak_dbi - dipole_reference_dbi : 0.0;
    double level = limit.limit_dbm - offset;
    return limit.mode == LimitMode::per_antenna ? total_power_dbm(level, num_antennas) : level;
}

} // namespace wpt
