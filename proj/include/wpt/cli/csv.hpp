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

#include "wpt/channel.hpp"
#include "wpt/experiments.hpp"

#include <ostream>
#include <span>
#include <string>

namespace wpt::cli {

/// Fixed-point with `decimals` digits; non-finite values print as inf, -inf, nan.
std::string format_fixed(double v, int decimals);

/// Six significant digits, for quantities spanning many decades.
std::string format_general(double v);

void write_results_csv(std::ostream &os, std::span<const StrategyResult> results);
void write_sweep_csv(std::ostream &os, std::span<const SweepRow> rows);
void write_table_csv(std::ostream &os, const TableReport &report);

/// One row per propagation path; antenna indices and image numbers are 1-based.
void write_channel_csv(std::ostream &os, std::size_t esl_id, std::span<const PathComponent> paths);

struct CrossoverRow
{
    PatternKind antenna_kind = PatternKind::isotropic;
    EslRole esl_role = EslRole::furthest;
    Crossover crossover;
};

void write_crossover_csv(std::ostream &os, std::span<const CrossoverRow> rows);

} // namespace wpt::cli
