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

#include "wpt/cli/svg.hpp"
#include "wpt/cli/csv.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace wpt::cli {

namespace {

constexpr double width = 800.0, height = 500.0;
constexpr double left = 70.0, right = 200.0, top = 30.0, bottom = 60.0;
constexpr const char *palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string fx(double v)
{
    return format_fixed(v, 2);
}

} // namespace

ChartLimits chart_limits(const RegulatoryLimit &limit, double peak_dbi, std::size_t num_antennas)
{
    RegulatoryLimit total = limit, per = limit;
    total.mode = LimitMode::total;
    per.mode = LimitMode::per_antenna;
    return {max_compliant_total_dbm(total, peak_dbi, num_antennas),
            max_compliant_total_dbm(per, peak_dbi, num_antennas)};
}

void write_sweep_svg(std::ostream &os, std::span<const SweepRow> rows, const ChartLimits &limits)
{
    using Key = std::pair<EslRole, StrategyKind>;
    std::map<Key, std::vector<std::pair<double, double>>> series;
    double n_lo = INFINITY, n_hi = -INFINITY;
    double p_lo = std::min(limits.total_cap_dbm, limits.per_antenna_cap_dbm);
    double p_hi = std::max(limits.total_cap_dbm, limits.per_antenna_cap_dbm);
    for (const auto &r : rows)
    {
        if (!std::isfinite(r.p_tx_total_dbm))
            continue;
        series[{r.esl_role, r.strategy}].emplace_back(static_cast<double>(r.n_esls), r.p_tx_total_dbm);
        n_lo = std::min(n_lo, static_cast<double>(r.n_esls));
        n_hi = std::max(n_hi, static_cast<double>(r.n_esls));
        p_lo = std::min(p_lo, r.p_tx_total_dbm);
        p_hi = std::max(p_hi, r.p_tx_total_dbm);
    }
    if (!(n_hi > n_lo))
    {
        n_lo = std::isfinite(n_lo) ? n_lo - 1.0 : 0.0;
        n_hi = n_lo + 2.0;
    }
    p_lo = 10.0 * std::floor(p_lo / 10.0);
    p_hi = 10.0 * std::ceil(p_hi / 10.0);
    if (p_hi <= p_lo)
        p_hi = p_lo + 10.0;

    const double pw = width - left - right, ph = height - top - bottom;
    auto xs = [&](double n) { return left + (n - n_lo) / (n_hi - n_lo) * pw; };
    auto ys = [&](double p) { return top + (p_hi - p) / (p_hi - p_lo) * ph; };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

    // Violation zone above the total-mode cap.
    const double cap_y = std::clamp(ys(limits.total_cap_dbm), top, top + ph);
    os << "<rect x=\"" << fx(left) << "\" y=\"" << fx(top) << "\" width=\"" << fx(pw) << "\" height=\""
       << fx(cap_y - top) << "\" fill=\"#d62728\" fill-opacity=\"0.12\"/>\n";

    for (double p = p_lo; p <= p_hi + 1e-9; p += 10.0)
    {
        os << "<line x1=\"" << fx(left) << "\" x2=\"" << fx(left + pw) << "\" y1=\"" << fx(ys(p)) << "\" y2=\""
           << fx(ys(p)) << "\" stroke=\"#dddddd\"/>\n";
        os << "<text x=\"" << fx(left - 8) << "\" y=\"" << fx(ys(p) + 4) << "\" text-anchor=\"end\">" << p
           << "</text>\n";
    }
    for (int i = 0; i <= 5; ++i)
    {
        const double n = n_lo + (n_hi - n_lo) * i / 5.0;
        os << "<text x=\"" << fx(xs(n)) << "\" y=\"" << fx(top + ph + 18) << "\" text-anchor=\"middle\">"
           << std::lround(n) << "</text>\n";
    }
    os << "<rect x=\"" << fx(left) << "\" y=\"" << fx(top) << "\" width=\"" << fx(pw) << "\" height=\"" << fx(ph)
       << "\" fill=\"none\" stroke=\"black\"/>\n";
    os << "<text x=\"" << fx(left + pw / 2) << "\" y=\"" << fx(height - 15)
       << "\" text-anchor=\"middle\">number of labels</text>\n";
    os << "<text transform=\"translate(18," << fx(top + ph / 2)
       << ") rotate(-90)\" text-anchor=\"middle\">total transmit power [dBm]</text>\n";

    const double per_y = ys(limits.per_antenna_cap_dbm);
    if (per_y >= top && per_y <= top + ph)
        os << "<line x1=\"" << fx(left) << "\" x2=\"" << fx(left + pw) << "\" y1=\"" << fx(per_y) << "\" y2=\""
           << fx(per_y) << "\" stroke=\"black\" stroke-dasharray=\"6,4\"/>\n";

    double legend_y = top + 10;
    std::size_t colour = 0;
    for (const auto &[key, pts] : series)
    {
        const char *c = palette[colour++ % std::size(palette)];
        os << "<polyline fill=\"none\" stroke=\"" << c << "\" stroke-width=\"2\"";
        if (key.first == EslRole::closest)
            os << " stroke-dasharray=\"2,3\"";
        os << " points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i)
            os << (i ? " " : "") << fx(xs(pts[i].first)) << ',' << fx(ys(pts[i].second));
        os << "\"/>\n";
        os << "<line x1=\"" << fx(left + pw + 12) << "\" x2=\"" << fx(left + pw + 32) << "\" y1=\"" << fx(legend_y)
           << "\" y2=\"" << fx(legend_y) << "\" stroke=\"" << c << "\" stroke-width=\"2\"/>\n";
        os << "<text x=\"" << fx(left + pw + 38) << "\" y=\"" << fx(legend_y + 4) << "\">" << to_string(key.second)
           << " (" << to_string(key.first) << ")</text>\n";
        legend_y += 18;
    }
    os << "<line x1=\"" << fx(left + pw + 12) << "\" x2=\"" << fx(left + pw + 32) << "\" y1=\"" << fx(legend_y)
       << "\" y2=\"" << fx(legend_y) << "\" stroke=\"black\" stroke-dasharray=\"6,4\"/>\n";
    os << "<text x=\"" << fx(left + pw + 38) << "\" y=\"" << fx(legend_y + 4) << "\">per-antenna cap</text>\n";
    legend_y += 18;
    os << "<rect x=\"" << fx(left + pw + 12) << "\" y=\"" << fx(legend_y - 6) << "\" width=\"20\" height=\"12\""
       << " fill=\"#d62728\" fill-opacity=\"0.12\"/>\n";
    os << "<text x=\"" << fx(left + pw + 38) << "\" y=\"" << fx(legend_y + 4) << "\">total-mode violation</text>\n";
    os << "</svg>\n";
}

} // namespace wpt::cli
