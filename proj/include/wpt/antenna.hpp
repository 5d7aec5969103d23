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

#include <string>
#include <string_view>

namespace wpt {

enum class PatternKind
{
    isotropic,
    half_wave_dipole,
    patch
};

std::string_view to_string(PatternKind kind);

// Accepts "isotropic", "dipole"/"half_wave_dipole" and "patch".
PatternKind pattern_kind_from_string(std::string_view name);

/// Axially symmetric far-field power pattern.
///
/// The polar angle is measured from the pattern axis: the dipole axis for the
/// dipole, the broadside normal for the patch. The patch radiates into the
/// front hemisphere only with G(theta) = 2 (n + 1) cos^n(theta), which
/// integrates to unit radiated power over the sphere.
struct RadiationPattern
{
    PatternKind kind = PatternKind::isotropic;
    double patch_exponent = 2.0; // used by patch only, must be >= 1

    static RadiationPattern isotropic() { return {PatternKind::isotropic, 2.0}; }
    static RadiationPattern dipole() { return {PatternKind::half_wave_dipole, 2.0}; }
    static RadiationPattern patch(double exponent = 2.0) { return {PatternKind::patch, exponent}; }

    void validate() const;

    friend bool operator==(const RadiationPattern &, const RadiationPattern &) = default;
};

// Peak directivity of the ideal half-wave dipole used throughout.
inline constexpr double half_wave_dipole_peak_gain = 1.64;

/// Linear power gain at polar angle theta in [0, pi] and azimuth phi in [0, 2 pi).
double gain(const RadiationPattern &p, double theta, double phi);

/// Gain in dBi; zero gain maps to -infinity.
double gain_dbi(const RadiationPattern &p, double theta, double phi);

double peak_gain(const RadiationPattern &p);
double peak_gain_dbi(const RadiationPattern &p);

} // namespace wpt
