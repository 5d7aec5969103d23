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

#include "wpt/antenna.hpp"
#include "wpt/units.hpp"

#include <cmath>
#include <stdexcept>

namespace wpt {

std::string_view to_string(PatternKind kind)
{
    switch (kind)
    {
    case PatternKind::isotropic:
        return "isotropic";
    case PatternKind::half_wave_dipole:
        return "dipole";
    case PatternKind::patch:
        return "patch";
    }
    return "unknown";
}

PatternKind pattern_kind_from_string(std::string_view name)
{
    if (name == "isotropic")
        return PatternKind::isotropic;
    if (name == "dipole" || name == "half_wave_dipole")
        return PatternKind::half_wave_dipole;
    if (name == "patch")
        return PatternKind::patch;
    throw std::invalid_argument("Unknown antenna pattern '" + std::string(name) + "'.");
}

void RadiationPattern::validate() const
{
    if (kind == PatternKind::patch && !(patch_exponent >= 1.0 && std::isfinite(patch_exponent)))
        throw std::invalid_argument("Patch exponent must be finite and >= 1.");
}

double gain(const RadiationPattern &p, double theta, double phi)
{
    if (!(theta >= 0.0 && theta <= pi))
        throw std::invalid_argument("Polar angle must lie in [0, pi].");
    if (!(phi >= 0.0 && phi < 2.0 * pi))
        throw std::invalid_argument("Azimuth must lie in [0, 2 pi).");

    switch (p.kind)
    {
    case PatternKind::isotropic:
        return 1.0;

    case PatternKind::half_wave_dipole:
    {
        double s = std::sin(theta);
        if (s < 1e-12) // nulls along the axis
            return 0.0;
        double f = std::cos(0.5 * pi * std::cos(theta)) / s;
        return half_wave_dipole_peak_gain * f * f;
    }

    case PatternKind::patch:
    {
        p.validate();
        if (theta >= 0.5 * pi) // behind the ground plane
            return 0.0;
        return 2.0 * (p.patch_exponent + 1.0) * std::pow(std::cos(theta), p.patch_exponent);
    }
    }
    throw std::invalid_argument("Unknown antenna pattern.");
}

double gain_dbi(const RadiationPattern &p, double theta, double phi)
{
    return db_from_ratio(gain(p, theta, phi));
}

double peak_gain(const RadiationPattern &p)
{
    switch (p.kind)
    {
    case PatternKind::isotropic:
        return 1.0;
    case PatternKind::half_wave_dipole:
        return half_wave_dipole_peak_gain;
    case PatternKind::patch:
        p.validate();
        return 2.0 * (p.patch_exponent + 1.0);
    }
    throw std::invalid_argument("Unknown antenna pattern.");
}

double peak_gain_dbi(const RadiationPattern &p)
{
    return db_from_ratio(peak_gain(p));
}

} // namespace wpt
