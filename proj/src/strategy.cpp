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

#include "wpt/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace wpt {

namespace {

void check_gains(std::span<const double> gains)
{
    if (gains.empty())
        throw std::invalid_argument("Gain vector is empty.");
    for (double g : gains)
        if (!(g >= 0.0) || !std::isfinite(g))
            throw std::invalid_argument("Link gains must be finite and non-negative.");
}

void check_lengths(std::span<const double> gains, const PowerAllocation &alloc)
{
    if (gains.size() != alloc.per_antenna.size())
        throw std::invalid_argument("Gain vector and allocation differ in length.");
}

double sum_sqrt(std::span<const double> gains)
{
    double s = 0.0;
    for (double g : gains)
        s += std::sqrt(g);
    return s;
}

double sum(std::span<const double> gains)
{
    return std::accumulate(gains.begin(), gains.end(), 0.0);
}

} // namespace

std::string_view to_string(StrategyKind kind)
{
    switch (kind)
    {
    case StrategyKind::siso:
        return "siso";
    case StrategyKind::miso_noncoherent_uniform:
        return "miso_noncoherent_uniform";
    case StrategyKind::miso_coherent:
        return "miso_coherent";
    }
    return "unknown";
}

StrategyKind strategy_kind_from_string(std::string_view name)
{
    if (name == "siso")
        return StrategyKind::siso;
    if (name == "miso_noncoherent_uniform" || name == "noncoherent" || name == "nc")
        return StrategyKind::miso_noncoherent_uniform;
    if (name == "miso_coherent" || name == "coherent" || name == "coh")
        return StrategyKind::miso_coherent;
    throw std::invalid_argument("Unknown strategy '" + std::string(name) + "'.");
}

PowerAllocation PowerAllocation::uniform(std::size_t num_antennas, double total_w)
{
    if (num_antennas == 0)
        throw std::invalid_argument("Allocation needs at least one antenna.");
    PowerAllocation a;
    a.per_antenna.assign(num_antennas, total_w / static_cast<double>(num_antennas));
    a.total = total_w;
    return a;
}

PowerAllocation PowerAllocation::single(std::size_t num_antennas, std::size_t index, double power_w)
{
    if (index >= num_antennas)
        throw std::invalid_argument("Antenna index out of range.");
    PowerAllocation a;
    a.per_antenna.assign(num_antennas, 0.0);
    a.per_antenna[index] = power_w;
    a.total = power_w;
    return a;
}

double PowerAllocation::peak() const
{
    return per_antenna.empty() ? 0.0 : *std::max_element(per_antenna.begin(), per_antenna.end());
}

std::size_t PowerAllocation::active_elements() const
{
    return static_cast<std::size_t>(std::count_if(per_antenna.begin(), per_antenna.end(), [](double p) { return p > 0.0; }));
}

double received_power_noncoherent(std::span<const double> gains, const PowerAllocation &alloc)
{
    check_lengths(gains, alloc);
    double p = 0.0;
    for (std::size_t l = 0; l < gains.size(); ++l)
        p += alloc.per_antenna[l] * gains[l];
    return p;
}

double received_power_coherent(std::span<const double> gains, const PowerAllocation &alloc)
{
    check_lengths(gains, alloc);
    double amplitude = 0.0;
    for (std::size_t l = 0; l < gains.size(); ++l)
        amplitude += std::sqrt(alloc.per_antenna[l] * gains[l]);
    return amplitude * amplitude;
}

double received_power(StrategyKind kind, std::span<const double> gains, const PowerAllocation &alloc)
{
    return kind == StrategyKind::miso_coherent ? received_power_coherent(gains, alloc)
                                               : received_power_noncoherent(gains, alloc);
}

std::size_t select_siso_antenna(std::span<const double> gains)
{
    check_gains(gains);
    std::size_t best = 0;
    for (std::size_t l = 1; l < gains.size(); ++l)
        if (gains[l] > gains[best])
            best = l;
    if (gains[best] == 0.0)
        throw std::domain_error("ESL is unreachable: every link gain is zero.");
    return best;
}

PowerAllocation required_total_power(StrategyKind kind, std::span<const double> gains, double target_w,
                                     CoherentAllocation coherent)
{
    check_gains(gains);
    if (!(target_w > 0.0) || !std::isfinite(target_w))
        throw std::invalid_argument("Target received power must be positive.");
    const std::size_t num = gains.size();
    const double l = static_cast<double>(num);

    switch (kind)
    {
    case StrategyKind::siso:
    {
        std::size_t best = select_siso_antenna(gains);
        return PowerAllocation::single(num, best, target_w / gains[best]);
    }

    case StrategyKind::miso_noncoherent_uniform:
    {
        double s = sum(gains);
        if (!(s > 0.0))
            throw std::domain_error("ESL is unreachable: every link gain is zero.");
        return PowerAllocation::uniform(num, target_w * l / s);
    }

    case StrategyKind::miso_coherent:
        switch (coherent)
        {
        case CoherentAllocation::equal_gain:
        {
            double s = sum_sqrt(gains);
            if (!(s > 0.0))
                throw std::domain_error("ESL is unreachable: every link gain is zero.");
            return PowerAllocation::uniform(num, target_w * l / (s * s));
        }

        case CoherentAllocation::mrt:
        {
            double s = sum(gains);
            if (!(s > 0.0))
                throw std::domain_error("ESL is unreachable: every link gain is zero.");
            PowerAllocation a;
            a.total = target_w / s;
            a.per_antenna.resize(num);
            for (std::size_t i = 0; i < num; ++i)
                a.per_antenna[i] = a.total * gains[i] / s;
            return a;
        }

        case CoherentAllocation::optimal_subset:
        {
            // With k active elements at equal power the cost is target k / (sum of the
            // k largest sqrt g)^2, so only prefixes of the sorted order are candidates.
            std::vector<std::size_t> order(num);
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return gains[a] > gains[b]; });

            double best_cost = 0.0;
            std::size_t best_k = 0;
            double s = 0.0;
            for (std::size_t k = 1; k <= num; ++k)
            {
                s += std::sqrt(gains[order[k - 1]]);
                if (!(s > 0.0))
                    break;
                double cost = target_w * static_cast<double>(k) / (s * s);
                if (best_k == 0 || cost < best_cost)
                {
                    best_cost = cost;
                    best_k = k;
                }
            }
            if (best_k == 0)
                throw std::domain_error("ESL is unreachable: every link gain is zero.");

            PowerAllocation a;
            a.per_antenna.assign(num, 0.0);
            for (std::size_t k = 0; k < best_k; ++k)
                a.per_antenna[order[k]] = best_cost / static_cast<double>(best_k);
            a.total = best_cost;
            return a;
        }
        }
        break;
    }
    throw std::invalid_argument("Unknown strategy.");
}

double efficiency(double p_rx_w, double p_tx_total_w)
{
    if (!(p_tx_total_w > 0.0))
        throw std::domain_error("Efficiency is undefined for zero transmit power.");
    return 100.0 * p_rx_w / p_tx_total_w;
}

double array_gain(std::span<const double> gains)
{
    check_gains(gains);
    double s = sum(gains);
    if (!(s > 0.0))
        throw std::domain_error("Array gain is undefined when every link gain is zero.");
    double r = sum_sqrt(gains);
    return r * r / s;
}

} // namespace wpt
