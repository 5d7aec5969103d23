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

#include "wpt/cli/csv.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>

namespace wpt::cli {

namespace {

std::string non_finite(double v)
{
    if (std::isnan(v))
        return "nan";
    return v > 0 ? "inf" : "-inf";
}

const char *flag(bool b)
{
    return b ? "true" : "false";
}

std::string_view kind_label(PatternKind k)
{
    return k == PatternKind::half_wave_dipole ? "dipole" : to_string(k);
}

} // namespace

std::string format_fixed(double v, int decimals)
{
    if (!std::isfinite(v))
        return non_finite(v);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    // Avoid "-0.0000" for values that round to zero.
    std::string s(buf);
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos)
        s.erase(0, 1);
    return s;
}

std::string format_general(double v)
{
    if (!std::isfinite(v))
        return non_finite(v);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void write_results_csv(std::ostream &os, std::span<const StrategyResult> results)
{
    os << "strategy,antenna_kind,esl_id,n_esls,p_tx_total_dbm,p_tx_per_antenna_dbm,p_rx_dbm,efficiency_pct,"
          "selected_antenna,compliant,margin_db,informational\n";
    for (const auto &r : results)
    {
        os << to_string(r.strategy) << ',' << kind_label(r.antenna_kind) << ',' << r.esl_id << ',' << r.n_esls << ','
           << format_fixed(r.p_tx_total_dbm, 4) << ',' << format_fixed(r.p_tx_per_antenna_dbm, 4) << ','
           << format_fixed(r.p_rx_dbm, 4) << ',' << format_general(r.efficiency_pct) << ',';
        if (r.selected_antenna)
            os << *r.selected_antenna + 1;
        os << ',' << flag(r.verdict.compliant) << ',' << format_fixed(r.verdict.margin_db, 4) << ','
           << flag(r.informational) << '\n';
    }
}

void write_sweep_csv(std::ostream &os, std::span<const SweepRow> rows)
{
    os << "n_esls,strategy,antenna_kind,esl_role,p_tx_total_dbm,p_tx_per_antenna_dbm,compliant,"
          "compliant_per_antenna,compliant_total,delta_vs_siso_db\n";
    for (const auto &r : rows)
        os << r.n_esls << ',' << to_string(r.strategy) << ',' << kind_label(r.antenna_kind) << ','
           << to_string(r.esl_role) << ',' << format_fixed(r.p_tx_total_dbm, 4) << ','
           << format_fixed(r.p_tx_per_antenna_dbm, 4) << ',' << flag(r.compliant) << ','
           << flag(r.compliant_per_antenna) << ',' << flag(r.compliant_total) << ','
           << format_fixed(r.delta_vs_siso_db, 4) << '\n';
}

void write_table_csv(std::ostream &os, const TableReport &report)
{
    os << "antenna_kind,esl_role,strategy,esl_id,p_tx_total_dbm,reference_p_tx_total_dbm,delta_db,efficiency_pct,"
          "reference_efficiency_pct,efficiency_ratio,p_tx_per_antenna_dbm,compliant,informational\n";
    for (const auto &c : report.cells)
        os << kind_label(c.reference.antenna) << ',' << to_string(c.reference.role) << ','
           << to_string(c.reference.strategy) << ',' << c.computed.esl_id << ','
           << format_fixed(c.computed.p_tx_total_dbm, 4) << ',' << format_fixed(c.reference.p_tx_total_dbm, 1) << ','
           << format_fixed(c.delta_db, 4) << ',' << format_general(c.computed.efficiency_pct) << ','
           << format_general(c.reference.efficiency_pct) << ',' << format_general(c.efficiency_ratio) << ','
           << format_fixed(c.computed.p_tx_per_antenna_dbm, 4) << ',' << flag(c.computed.verdict.compliant) << ','
           << flag(c.computed.informational) << '\n';
}

void write_channel_csv(std::ostream &os, std::size_t esl_id, std::span<const PathComponent> paths)
{
    os << "esl_id,antenna_index,path_type,distance_m,magnitude,phase_rad\n";
    for (const auto &p : paths)
    {
        os << esl_id << ',' << p.antenna_index + 1 << ',';
        if (p.type == PathType::los)
            os << "los";
        else
            os << "image:" << p.reflector_index + 1;
        os << ',' << format_fixed(p.distance, 6) << ',' << format_general(std::abs(p.amplitude)) << ','
           << format_fixed(std::arg(p.amplitude), 6) << '\n';
    }
}

void write_crossover_csv(std::ostream &os, std::span<const CrossoverRow> rows)
{
    os << "antenna_kind,esl_role,n_crossover,n_bisection,bounded,array_gain,p_noncoherent_dbm,"
          "p_coherent_dbm_at_crossover\n";
    for (const auto &r : rows)
    {
        const auto &c = r.crossover;
        os << kind_label(r.antenna_kind) << ',' << to_string(r.esl_role) << ',' << format_fixed(c.n_closed_form, 3)
           << ',';
        if (c.n_bisection)
            os << format_fixed(*c.n_bisection, 3);
        os << ',' << flag(c.bounded) << ',' << format_fixed(c.array_gain, 4) << ','
           << format_fixed(c.p_noncoherent_dbm, 4) << ',' << format_fixed(c.p_coherent_dbm_at_crossover, 4) << '\n';
    }
}

} // namespace wpt::cli
