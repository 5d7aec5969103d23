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

#include "wpt/compliance.hpp"
#include "wpt/energy.hpp"
#include "wpt/scene.hpp"
#include "wpt/strategy.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace wpt {

// Flat mismatch between a linear and a circular polarised antenna.
inline constexpr double polarization_loss_db = 3.0;

struct ExperimentSettings
{
    bool include_smc = false;
    bool polarization_loss = false;
    CoherentAllocation coherent = CoherentAllocation::equal_gain;
    RegulatoryLimit limit = RegulatoryLimit::eu868();
    // Continuous RF level the non-coherent field must hold; defaults to the
    // energy model's continuous requirement.
    std::optional<double> noncoherent_target_w;
    std::size_t workers = 1;
};

/// |h_l|^2 from every antenna to one ESL, including the flat polarisation
/// penalty when enabled.
std::vector<double> link_gains(const Deployment &dep, std::size_t esl_id, const ExperimentSettings &settings);

/// Received power a strategy must deliver with n labels in the aisle. SISO and
/// coherent MISO serve labels one at a time; the non-coherent field is
/// continuous and independent of n.
double strategy_target_w(StrategyKind kind, double n_esls, const EnergyModel &m, const ExperimentSettings &settings);

struct StrategyResult
{
    StrategyKind strategy = StrategyKind::siso;
    PatternKind antenna_kind = PatternKind::isotropic;
    std::size_t esl_id = 0;
    std::size_t n_esls = 0;
    double p_tx_total_dbm = 0.0;
    double p_tx_per_antenna_dbm = 0.0; // largest single-element power
    double p_rx_dbm = 0.0;
    double efficiency_pct = 0.0;
    std::optional<std::size_t> selected_antenna; // SISO only, 0-based
    bool informational = false; // non-coherent result for a label that does not set the field level
    PowerAllocation allocation;
    ComplianceVerdict verdict;
};

StrategyResult solve(const Deployment &dep, const EnergyModel &m, StrategyKind kind, std::size_t esl_id,
                     std::size_t n_esls, const ExperimentSettings &settings);

/// Analytical reference link budget, LOS only, 600 labels.
struct ReferenceCell
{
    PatternKind antenna;
    EslRole role;
    StrategyKind strategy;
    double p_tx_total_dbm;
    double efficiency_pct;
};

extern const std::array<ReferenceCell, 12> reference_table;

struct TableCell
{
    ReferenceCell reference;
    StrategyResult computed;
    double delta_db = 0.0;         // computed - reference
    double efficiency_ratio = 0.0; // computed / reference
};

struct TableReport
{
    double patch_exponent = 2.0;
    std::size_t n_esls = 0;
    std::size_t closest_esl = 0;
    std::size_t furthest_esl = 0;
    std::vector<TableCell> cells; // reference_table order

    const TableCell &cell(PatternKind antenna, EslRole role, StrategyKind strategy) const;
    double max_abs_delta_db() const;
};

TableReport reproduce_table(const Deployment &dep, const EnergyModel &m, const ExperimentSettings &settings,
                            double patch_exponent = 2.0);

/// Smallest worst-case |delta| any gain vector can reach on the table: for
/// equal-gain coherent transmission P_coh - P_nc >= 10 log10(T_seq / (L T_nc)),
/// while the reference rows sometimes differ by less.
double table_residual_floor_db(const EnergyModel &m, std::size_t num_antennas, std::size_t n_esls);

struct SweepRow
{
    std::size_t n_esls = 0;
    StrategyKind strategy = StrategyKind::siso;
    PatternKind antenna_kind = PatternKind::isotropic;
    EslRole esl_role = EslRole::furthest;
    double p_tx_total_dbm = 0.0;
    double p_tx_per_antenna_dbm = 0.0;
    bool compliant = false;             // under settings.limit
    bool compliant_per_antenna = false; // settings.limit forced to per-antenna
    bool compliant_total = false;       // settings.limit forced to total
    double delta_vs_siso_db = 0.0;      // SISO minus this row, same n and role
};

/// n_esls = 50, 100, ..., 2000.
std::vector<std::size_t> default_sweep_range();

/// Rows ordered by n, then role, then strategy (input order). Any number of
/// workers yields the same rows.
std::vector<SweepRow> sweep_esl_count(const Deployment &dep, const EnergyModel &m,
                                      std::span<const std::size_t> n_values,
                                      std::span<const StrategyKind> strategies,
                                      std::span<const EslRole> roles, const ExperimentSettings &settings);

struct Crossover
{
    bool bounded = false;         // crossover lies inside the search range
    double n_closed_form = 0.0;   // always defined
    std::optional<double> n_bisection;
    double array_gain = 0.0;      // (sum sqrt g)^2 / sum g
    double p_noncoherent_dbm = 0.0;
    double p_coherent_dbm_at_crossover = 0.0;
};

/// Label count at which coherent sequential charging needs as much total power
/// as the continuous non-coherent field, for a given gain vector.
Crossover find_crossover(std::span<const double> gains, const EnergyModel &m, const ExperimentSettings &settings,
                         double n_min = 1.0, double n_max = 1e6);

Crossover find_crossover(const Deployment &dep, const EnergyModel &m, EslRole role, const ExperimentSettings &settings,
                         double n_min = 1.0, double n_max = 1e6);

} // namespace wpt
