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

#include "wpt/experiments.hpp"

#include <ostream>
#include <span>

namespace wpt::cli {

/// Reference levels drawn behind the sweep curves, in conducted dBm.
struct ChartLimits
{
    double total_cap_dbm = 0.0;       // above this the total-mode limit is violated (shaded)
    double per_antenna_cap_dbm = 0.0; // uniform spreading under the per-antenna limit (dashed)
};

ChartLimits chart_limits(const RegulatoryLimit &limit, double peak_dbi, std::size_t num_antennas);

/// Line chart of total transmit power against label count, one series per
/// strategy and role.
void write_sweep_svg(std::ostream &os, std::span<const SweepRow> rows, const ChartLimits &limits);

} // namespace wpt::cli
