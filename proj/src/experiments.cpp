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

#include "wpt/experiments.hpp"
#include "wpt/channel.hpp"
#include "wpt/units.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>

namespace wpt {

std::vector<double> link_gains(const Deployment &dep, std::size_t esl_id, const ExperimentSettings &settings)
{
    auto gains = channel_vector(dep, esl_id, settings.include_smc).power_gains();
    if (settings.polarization_loss)
    {
        const double factor = ratio_from_db(-polarization_loss_db);
        for (auto &g : gains)
            g *= factor;
    }
    return gains;
}

double strategy_target_w(StrategyKind kind, double n_esls, const EnergyModel &m, const ExperimentSettings &settings)
{
    m.validate();
    if (kind == StrategyKind::miso_noncoherent_uniform)
        return settings.noncoherent_target_w.value_or(required_rf_continuous_w(m));
    if (!(n_esls > 0.0))
        throw std::invalid_argument("At least one ESL is required.");
    // Same operation order as required_rx_power_sequential for integral n.
    return m.e_update_j / (seconds_per_day / (n_esls * m.updates_per_day)) / m.harvester_efficiency;
}

namespace {

std::vector<double> peak_gains_dbi(const Deployment &dep)
{
    std::vector<double> out;
    out.reserve(dep.antennas.size());
    for (const auto &a : dep.antennas)
        out.push_back(peak_gain_dbi(a.pattern));
    return out;
}

StrategyResult evaluate(StrategyKind kind, std::span<const double> gains, double target_w,
                        const ExperimentSettings &settings, std::span<const double> peak_dbi)
{
    StrategyResult r;
    r.strategy = kind;
    r.allocation = required_total_power(kind, gains, target_w, settings.coherent);
    if (kind == StrategyKind::siso)
        r.selected_antenna = select_siso_antenna(gains);

    double p_rx = received_power(kind, gains, r.allocation);
    r.p_tx_total_dbm = dbm_from_watts(r.allocation.total);
    r.p_tx_per_antenna_dbm = dbm_from_watts(r.allocation.peak());
    r.p_rx_dbm = dbm_from_watts(p_rx);
    r.efficiency_pct = efficiency(p_rx, r.allocation.total);
    r.verdict = check(r.allocation, peak_dbi, settings.limit);
    return r;
}

} // namespace

StrategyResult solve(const Deployment &dep, const EnergyModel &m, StrategyKind kind, std::size_t esl_id,
                     std::size_t n_esls, const ExperimentSettings &settings)
{
    auto gains = link_gains(dep, esl_id, settings);
    auto peaks = peak_gains_dbi(dep);
    auto r = evaluate(kind, gains, strategy_target_w(kind, static_cast<double>(n_esls), m, settings), settings, peaks);
    r.antenna_kind = dep.antennas.front().pattern.kind;
    r.esl_id = esl_id;
    r.n_esls = n_esls;
    r.informational = kind == StrategyKind::miso_noncoherent_uniform &&
                      esl_id != designated_esl(dep, EslRole::furthest);
    return r;
}

// Analytical link budget, LOS, 600 labels: P_tx,t in dBm and efficiency in %.
const std::array<ReferenceCell, 12> reference_table = {{
    {PatternKind::half_wave_dipole, EslRole::closest, StrategyKind::siso, 49.9, 0.025},
    {PatternKind::half_wave_dipole, EslRole::closest, StrategyKind::miso_noncoherent_uniform, 27.8, 0.007},
    {PatternKind::half_wave_dipole, EslRole::closest, StrategyKind::miso_coherent, 28.4, 3.7},
    {PatternKind::half_wave_dipole, EslRole::furthest, StrategyKind::siso, 60.9, 0.0002},
    {PatternKind::half_wave_dipole, EslRole::furthest, StrategyKind::miso_noncoherent_uniform, 34.8, 0.001},
    {PatternKind::half_wave_dipole, EslRole::furthest, StrategyKind::miso_coherent, 35.6, 0.7},
    {PatternKind::patch, EslRole::closest, StrategyKind::siso, 46.8, 0.05},
    {PatternKind::patch, EslRole::closest, StrategyKind::miso_noncoherent_uniform, 23.4, 0.018},
    {PatternKind::patch, EslRole::closest, StrategyKind::miso_coherent, 21.0, 20.0},
    {PatternKind::patch, EslRole::furthest, StrategyKind::siso, 47.2, 0.05},
    {PatternKind::patch, EslRole::furthest, StrategyKind::miso_noncoherent_uniform, 26.7, 0.008},
    {PatternKind::patch, EslRole::furthest, StrategyKind::miso_coherent, 23.8, 10.5},
}};

const TableCell &TableReport::cell(PatternKind antenna, EslRole role, StrategyKind strategy) const
{
    for (const auto &c : cells)
        if (c.reference.antenna == antenna && c.reference.role == role && c.reference.strategy == strategy)
            return c;
    throw std::invalid_argument("No such table cell.");
}

double TableReport::max_abs_delta_db() const
{
    double worst = 0.0;
    for (const auto &c : cells)
        worst = std::max(worst, std::abs(c.delta_db));
    return worst;
}

TableReport reproduce_table(const Deployment &dep, const EnergyModel &m, const ExperimentSettings &settings,
                            double patch_exponent)
{
    TableReport report;
    report.patch_exponent = patch_exponent;
    report.n_esls = dep.esls.size();
    report.closest_esl = designated_esl(dep, EslRole::closest);
    report.furthest_esl = designated_esl(dep, EslRole::furthest);

    const Deployment dipole = with_antenna_pattern(dep, RadiationPattern::dipole());
    const Deployment patch = with_antenna_pattern(dep, RadiationPattern::patch(patch_exponent));

    for (const auto &ref : reference_table)
    {
        const Deployment &d = ref.antenna == PatternKind::patch ? patch : dipole;
        std::size_t id = ref.role == EslRole::closest ? report.closest_esl : report.furthest_esl;

        TableCell c;
        c.reference = ref;
        c.computed = solve(d, m, ref.strategy, id, report.n_esls, settings);
        c.delta_db = c.computed.p_tx_total_dbm - ref.p_tx_total_dbm;
        c.efficiency_ratio = c.computed.efficiency_pct / ref.efficiency_pct;
        report.cells.push_back(c);
    }
    return report;
}

double table_residual_floor_db(const EnergyModel &m, std::size_t num_antennas, std::size_t n_esls)
{
    ExperimentSettings plain;
    double seq = strategy_target_w(StrategyKind::miso_coherent, static_cast<double>(n_esls), m, plain);
    double cont = strategy_target_w(StrategyKind::miso_noncoherent_uniform, static_cast<double>(n_esls), m, plain);
    double min_gap = db_from_ratio(seq / cont) - db_from_ratio(static_cast<double>(num_antennas));

    double floor = 0.0;
    for (std::size_t i = 0; i < reference_table.size(); ++i)
    {
        const auto &nc = reference_table[i];
        if (nc.strategy != StrategyKind::miso_noncoherent_uniform)
            continue;
        for (const auto &coh : reference_table)
            if (coh.strategy == StrategyKind::miso_coherent && coh.antenna == nc.antenna && coh.role == nc.role)
                floor = std::max(floor, 0.5 * (min_gap - (coh.p_tx_total_dbm - nc.p_tx_total_dbm)));
    }
    return floor;
}

std::vector<std::size_t> default_sweep_range()
{
    std::vector<std::size_t> out;
    for (std::size_t n = 50; n <= 2000; n += 50)
        out.push_back(n);
    return out;
}

std::vector<SweepRow> sweep_esl_count(const Deployment &dep, const EnergyModel &m,
                                      std::span<const std::size_t> n_values,
                                      std::span<const StrategyKind> strategies,
                                      std::span<const EslRole> roles, const ExperimentSettings &settings)
{
    if (n_values.empty())
        throw std::invalid_argument("Sweep range is empty.");
    if (!std::is_sorted(n_values.begin(), n_values.end()) ||
        std::adjacent_find(n_values.begin(), n_values.end()) != n_values.end())
        throw std::invalid_argument("Sweep range must be strictly ascending.");
    if (n_values.front() == 0)
        throw std::invalid_argument("Sweep range must start at one ESL or more.");
    if (strategies.empty() || roles.empty())
        throw std::invalid_argument("Sweep needs at least one strategy and one ESL role.");

    std::vector<std::vector<double>> gains;
    for (auto role : roles)
        gains.push_back(link_gains(dep, designated_esl(dep, role), settings));
    const auto peaks = peak_gains_dbi(dep);
    const PatternKind kind = dep.antennas.front().pattern.kind;

    RegulatoryLimit per_antenna = settings.limit;
    per_antenna.mode = LimitMode::per_antenna;
    RegulatoryLimit total = settings.limit;
    total.mode = LimitMode::total;

    const std::size_t block = roles.size() * strategies.size();
    std::vector<SweepRow> rows(n_values.size() * block);

    auto fill = [&](std::size_t i) {
        const double n = static_cast<double>(n_values[i]);
        for (std::size_t r = 0; r < roles.size(); ++r)
        {
            const double siso_dbm = dbm_from_watts(
                required_total_power(StrategyKind::siso, gains[r], strategy_target_w(StrategyKind::siso, n, m, settings))
                    .total);
            for (std::size_t s = 0; s < strategies.size(); ++s)
            {
                auto alloc = required_total_power(strategies[s], gains[r],
                                                  strategy_target_w(strategies[s], n, m, settings), settings.coherent);
                SweepRow &row = rows[i * block + r * strategies.size() + s];
                row.n_esls = n_values[i];
                row.strategy = strategies[s];
                row.antenna_kind = kind;
                row.esl_role = roles[r];
                row.p_tx_total_dbm = dbm_from_watts(alloc.total);
                row.p_tx_per_antenna_dbm = dbm_from_watts(alloc.peak());
                row.compliant = check(alloc, peaks, settings.limit).compliant;
                row.compliant_per_antenna = check(alloc, peaks, per_antenna).compliant;
                row.compliant_total = check(alloc, peaks, total).compliant;
                row.delta_vs_siso_db = siso_dbm - row.p_tx_total_dbm;
            }
        }
    };

    const std::size_t workers = std::clamp<std::size_t>(settings.workers, 1, n_values.size());
    if (workers == 1)
    {
        for (std::size_t i = 0; i < n_values.size(); ++i)
            fill(i);
        return rows;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try
                {
                    for (std::size_t i = next++; i < n_values.size(); i = next++)
                        fill(i);
                }
                catch (...)
                {
                    errors[w] = std::current_exception();
                }
            });
    }
    for (auto &e : errors)
        if (e)
            std::rethrow_exception(e);
    return rows;
}

Crossover find_crossover(std::span<const double> gains, const EnergyModel &m, const ExperimentSettings &settings,
                         double n_min, double n_max)
{
    if (!(n_min > 0.0) || !(n_max > n_min))
        throw std::invalid_argument("Crossover search range must satisfy 0 < n_min < n_max.");

    // Both requirements are linear in their targets: the coherent target is
    // k n (k per label), the non-coherent one a constant T. Equating
    // k n / E_coh = T / E_nc gives n* = (T / k) (E_coh / E_nc), where E is the
    // received power per watt transmitted.
    const double k = strategy_target_w(StrategyKind::miso_coherent, 1.0, m, settings);
    const double t_nc = strategy_target_w(StrategyKind::miso_noncoherent_uniform, 1.0, m, settings);

    double sum_g = 0.0, sum_sqrt_g = 0.0;
    for (double g : gains)
    {
        sum_g += g;
        sum_sqrt_g += std::sqrt(g);
    }
    if (!(sum_g > 0.0))
        throw std::domain_error("ESL is unreachable: every link gain is zero.");
    const double num = static_cast<double>(gains.size());
    const double e_nc = sum_g / num;

    double e_coh = 0.0;
    switch (settings.coherent)
    {
    case CoherentAllocation::equal_gain:
        e_coh = sum_sqrt_g * sum_sqrt_g / num;
        break;
    case CoherentAllocation::mrt:
        e_coh = sum_g;
        break;
    case CoherentAllocation::optimal_subset:
    {
        std::vector<double> sorted(gains.begin(), gains.end());
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        double s = 0.0;
        for (std::size_t i = 0; i < sorted.size(); ++i)
        {
            s += std::sqrt(sorted[i]);
            e_coh = std::max(e_coh, s * s / static_cast<double>(i + 1));
        }
        break;
    }
    }

    Crossover out;
    out.array_gain = sum_sqrt_g * sum_sqrt_g / sum_g;
    out.n_closed_form = (t_nc / k) * (e_coh / e_nc);
    out.bounded = out.n_closed_form >= n_min && out.n_closed_form <= n_max;

    auto p_coh = [&](double n) {
        return required_total_power(StrategyKind::miso_coherent, gains,
                                    strategy_target_w(StrategyKind::miso_coherent, n, m, settings), settings.coherent)
            .total;
    };
    const double p_nc =
        required_total_power(StrategyKind::miso_noncoherent_uniform, gains, t_nc, settings.coherent).total;
    out.p_noncoherent_dbm = dbm_from_watts(p_nc);
    out.p_coherent_dbm_at_crossover = dbm_from_watts(p_coh(out.n_closed_form));

    // Independent check: bisection on the two power curves in log n.
    double lo = std::log(n_min), hi = std::log(n_max);
    auto excess = [&](double log_n) { return std::log(p_coh(std::exp(log_n))) - std::log(p_nc); };
    if (excess(lo) <= 0.0 && excess(hi) >= 0.0)
    {
        for (int it = 0; it < 200 && hi - lo > 1e-15; ++it)
        {
            double mid = 0.5 * (lo + hi);
            (excess(mid) < 0.0 ? lo : hi) = mid;
        }
        out.n_bisection = std::exp(0.5 * (lo + hi));
    }
    return out;
}

Crossover find_crossover(const Deployment &dep, const EnergyModel &m, EslRole role, const ExperimentSettings &settings,
                         double n_min, double n_max)
{
    auto gains = link_gains(dep, designated_esl(dep, role), settings);
    return find_crossover(gains, m, settings, n_min, n_max);
}

} // namespace wpt
