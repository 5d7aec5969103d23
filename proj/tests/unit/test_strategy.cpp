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

#include <doctest.h>

#include "wpt/strategy.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

using namespace wpt;

namespace {

std::vector<double> random_gains(std::mt19937_64 &rng, std::size_t n)
{
    std::uniform_real_distribution<double> exponent(-9.0, -2.0);
    std::vector<double> g(n);
    for (auto &x : g)
        x = std::pow(10.0, exponent(rng));
    return g;
}

} // namespace

TEST_CASE("strategy names")
{
    for (auto k : {StrategyKind::siso, StrategyKind::miso_noncoherent_uniform, StrategyKind::miso_coherent})
        CHECK(strategy_kind_from_string(to_string(k)) == k);
    CHECK(strategy_kind_from_string("coh") == StrategyKind::miso_coherent);
    CHECK(strategy_kind_from_string("nc") == StrategyKind::miso_noncoherent_uniform);
    CHECK_THROWS_AS(strategy_kind_from_string("beam"), std::invalid_argument);
}

TEST_CASE("forward models by hand")
{
    const std::vector<double> g{1e-4, 4e-4, 9e-4};
    const auto alloc = PowerAllocation::uniform(3, 3.0);
    CHECK(received_power_noncoherent(g, alloc) == doctest::Approx(14e-4));
    // (1e-2 + 2e-2 + 3e-2)^2
    CHECK(received_power_coherent(g, alloc) == doctest::Approx(36e-4));
    CHECK(array_gain(g) == doctest::Approx(36.0 / 14.0));
    CHECK(array_gain(std::vector<double>(7, 2e-5)) == doctest::Approx(7.0));
    CHECK(array_gain(std::vector<double>{0, 0, 5e-5}) == doctest::Approx(1.0));
}

TEST_CASE("required power closed forms")
{
    const std::vector<double> g{1e-4, 4e-4, 9e-4};
    const double t = 1e-3;
    CHECK(required_total_power(StrategyKind::siso, g, t).total == doctest::Approx(t / 9e-4));
    CHECK(required_total_power(StrategyKind::miso_noncoherent_uniform, g, t).total ==
          doctest::Approx(t * 3 / 14e-4));
    CHECK(required_total_power(StrategyKind::miso_coherent, g, t).total == doctest::Approx(t * 3 / 36e-4));
    CHECK(required_total_power(StrategyKind::miso_coherent, g, t, CoherentAllocation::mrt).total ==
          doctest::Approx(t / 14e-4));
    // Best subset here is the two strongest: 2 / 25e-4 < 3 / 36e-4.
    const auto sub = required_total_power(StrategyKind::miso_coherent, g, t, CoherentAllocation::optimal_subset);
    CHECK(sub.total == doctest::Approx(t * 2 / 25e-4));
    CHECK(sub.active_elements() == 2);
    CHECK(sub.per_antenna[0] == 0.0);
}

TEST_CASE("SISO selection")
{
    CHECK(select_siso_antenna(std::vector<double>{1, 3, 2}) == 1);
    CHECK(select_siso_antenna(std::vector<double>{5, 3, 5}) == 0);
    CHECK(select_siso_antenna(std::vector<double>{0, 2, 2}) == 1);
    CHECK_THROWS_AS(select_siso_antenna(std::vector<double>{0, 0}), std::domain_error);
    CHECK_THROWS_AS(select_siso_antenna(std::vector<double>{}), std::invalid_argument);
    CHECK_THROWS_AS(select_siso_antenna(std::vector<double>{1, -1}), std::invalid_argument);
}

TEST_CASE("unreachable receivers")
{
    const std::vector<double> zero(4, 0.0);
    for (auto k : {StrategyKind::siso, StrategyKind::miso_noncoherent_uniform, StrategyKind::miso_coherent})
        for (auto c : {CoherentAllocation::equal_gain, CoherentAllocation::mrt, CoherentAllocation::optimal_subset})
            CHECK_THROWS_AS(required_total_power(k, zero, 1e-3, c), std::domain_error);
    CHECK_THROWS_AS(required_total_power(StrategyKind::siso, std::vector<double>{1e-3}, 0.0),
                    std::invalid_argument);
}

TEST_CASE("efficiency")
{
    CHECK(efficiency(1e-3, 1.0) == doctest::Approx(0.1));
    CHECK_THROWS_AS(efficiency(1e-3, 0.0), std::domain_error);
}

TEST_CASE("randomised: forward(required(target)) returns the target")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> size(1, 400);
    for (int i = 0; i < 300; ++i)
    {
        const auto g = random_gains(rng, size(rng));
        const double t = 1e-5 * (1 + i);
        for (auto k : {StrategyKind::siso, StrategyKind::miso_noncoherent_uniform, StrategyKind::miso_coherent})
            for (auto c : {CoherentAllocation::equal_gain, CoherentAllocation::mrt, CoherentAllocation::optimal_subset})
            {
                const auto a = required_total_power(k, g, t, c);
                CHECK(std::abs(received_power(k, g, a) / t - 1.0) < 1e-9);
                CHECK(std::abs(std::accumulate(a.per_antenna.begin(), a.per_antenna.end(), 0.0) / a.total - 1.0) <
                      1e-12);
            }
    }
}

TEST_CASE("randomised: allocation ordering")
{
    std::mt19937_64 rng(12);
    for (int i = 0; i < 300; ++i)
    {
        const auto g = random_gains(rng, 2 + i);
        auto p = [&](CoherentAllocation c) { return required_total_power(StrategyKind::miso_coherent, g, 1e-3, c).total; };
        const double eq = p(CoherentAllocation::equal_gain), sub = p(CoherentAllocation::optimal_subset),
                     mrt = p(CoherentAllocation::mrt);
        CHECK(mrt <= sub * (1 + 1e-12));
        CHECK(sub <= eq * (1 + 1e-12));
        const double ag = array_gain(g);
        CHECK(ag >= 1.0 - 1e-12);
        CHECK(ag <= static_cast<double>(g.size()) * (1 + 1e-12));
    }
}
