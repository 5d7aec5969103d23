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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace wpt {

enum class StrategyKind
{
    siso,
    miso_noncoherent_uniform,
    miso_coherent
};

std::string_view to_string(StrategyKind kind);
StrategyKind strategy_kind_from_string(std::string_view name);

/// How a coherent transmitter splits its power over the elements.
enum class CoherentAllocation
{
    equal_gain,     // uniform P_tx,t / L on every element, phases aligned
    mrt,            // P_tx,l proportional to g_l (maximum ratio transmission)
    optimal_subset, // uniform power over the best-k elements, k chosen optimally
};

struct PowerAllocation
{
    std::vector<double> per_antenna; // watts
    double total = 0.0;              // watts

    static PowerAllocation uniform(std::size_t num_antennas, double total_w);
    static PowerAllocation single(std::size_t num_antennas, std::size_t index, double power_w);

    // Largest single-element power (watts).
    double peak() const;
    std::size_t active_elements() const;
};

/// Expected received power with random relative phases: sum P_l g_l.
double received_power_noncoherent(std::span<const double> gains, const PowerAllocation &alloc);

/// Received power with all paths phase-aligned: (sum sqrt(P_l g_l))^2.
double received_power_coherent(std::span<const double> gains, const PowerAllocation &alloc);

/// Forward model matching a strategy (SISO is a single-term non-coherent sum).
double received_power(StrategyKind kind, std::span<const double> gains, const PowerAllocation &alloc);

/// Index of the link with the highest gain, lowest index on ties. Throws
/// std::domain_error when every gain is zero.
std::size_t select_siso_antenna(std::span<const double> gains);

/// Cheapest allocation delivering `target_w` to the receiver under the given
/// strategy. Throws std::domain_error when the receiver is unreachable.
PowerAllocation required_total_power(StrategyKind kind, std::span<const double> gains, double target_w,
                                     CoherentAllocation coherent = CoherentAllocation::equal_gain);

/// Ratio P_rx / P_tx,t in percent.
double efficiency(double p_rx_w, double p_tx_total_w);

/// (sum sqrt g)^2 / sum g: coherent over non-coherent received power at equal
/// uniform allocation, in [1, L].
double array_gain(std::span<const double> gains);

} // namespace wpt
