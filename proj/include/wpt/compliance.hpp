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

#include "wpt/strategy.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace wpt {

enum class LimitMode
{
    per_antenna,
    total
};

enum class LimitReference
{
    conducted,
    erp
};

std::string_view to_string(LimitMode mode);
std::string_view to_string(LimitReference ref);
LimitMode limit_mode_from_string(std::string_view name);
LimitReference limit_reference_from_string(std::string_view name);

struct RegulatoryLimit
{
    std::string band_label;
    double limit_dbm = 33.0;
    LimitMode mode = LimitMode::per_antenna;
    LimitReference reference = LimitReference::erp;

    static RegulatoryLimit eu868(); // 2 W ERP
    static RegulatoryLimit eu917(); // 4 W ERP
    static RegulatoryLimit preset(std::string_view band);
};

struct ComplianceVerdict
{
    bool compliant = true;
    double margin_db = 0.0;                     // limit minus worst radiated level
    std::optional<std::size_t> binding_element; // empty in total mode
};

/// Compares an allocation with a regulatory limit. In ERP terms each element
/// radiates conducted + peak dBi - 2.15 dB; total mode sums over elements.
ComplianceVerdict check(const PowerAllocation &alloc, std::span<const double> peak_gain_dbi,
                        const RegulatoryLimit &limit);

/// Highest total conducted power that still complies when spread uniformly
/// over `num_antennas` elements of peak gain `peak_dbi` (1 = single element).
double max_compliant_total_dbm(const RegulatoryLimit &limit, double peak_dbi, std::size_t num_antennas);

} // namespace wpt
