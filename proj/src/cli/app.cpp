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

#include "wpt/cli/app.hpp"
#include "wpt/cli/config.hpp"
#include "wpt/cli/csv.hpp"
#include "wpt/cli/errors.hpp"
#include "wpt/cli/scene_json.hpp"
#include "wpt/cli/svg.hpp"
#include "wpt/channel.hpp"
#include "wpt/units.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace wpt::cli {

namespace {

struct GlobalOptions
{
    std::string config_path;
    std::string out_path;
    std::string band;
    std::optional<double> limit_dbm;
    std::string limit_mode;
    bool plot = false;
    bool include_smc = false;
    bool mrt = false;
    bool polarization_loss = false;
    std::optional<double> frequency_hz;
    std::string antenna;
    std::optional<double> patch_n;
    std::optional<std::size_t> workers;
};

struct SolveOptions
{
    std::string strategy;
    std::string esl;
    std::optional<std::size_t> n_esls;
    std::string channel_csv;
};

struct SweepOptions
{
    std::vector<std::string> roles;
    std::optional<std::size_t> n_min, n_max, n_step;
};

struct CheckOptions
{
    double p_tx_dbm = 0.0;
    std::string strategy = "miso_coherent";
    std::optional<std::size_t> elements;
};

std::string num(double v, int decimals = 2)
{
    return format_fixed(v, decimals);
}

std::string pattern_label(const RadiationPattern &p)
{
    std::string s(to_string(p.kind));
    if (p.kind == PatternKind::patch)
        s += " (n = " + format_general(p.patch_exponent) + ")";
    return s;
}

std::string limit_label(const RegulatoryLimit &l)
{
    std::ostringstream s;
    if (!l.band_label.empty())
        s << l.band_label << ", ";
    s << num(l.limit_dbm) << " dBm " << (l.reference == LimitReference::erp ? "ERP" : "conducted") << ' '
      << (l.mode == LimitMode::per_antenna ? "per antenna" : "total");
    return s.str();
}

EslRole parse_role(const std::string &s, const std::string &flag)
{
    if (s == "closest")
        return EslRole::closest;
    if (s == "furthest")
        return EslRole::furthest;
    throw ConfigError(flag, "expected 'closest' or 'furthest', got '" + s + "'");
}

StrategyKind parse_strategy(const std::string &s, const std::string &flag)
{
    try
    {
        return strategy_kind_from_string(s);
    }
    catch (const std::invalid_argument &e)
    {
        throw ConfigError(flag, e.what());
    }
}

void write_file(const std::string &path, const std::string &content)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw IoError("Cannot open '" + path + "' for writing.");
    f << content;
    f.close();
    if (!f)
        throw IoError("Failed writing '" + path + "'.");
}

RunConfig resolve_config(const GlobalOptions &g)
{
    RunConfig cfg = g.config_path.empty() ? RunConfig{} : load_config(g.config_path);

    if (!g.band.empty())
    {
        try
        {
            cfg.settings.limit = RegulatoryLimit::preset(g.band);
        }
        catch (const std::invalid_argument &e)
        {
            throw ConfigError("--band", e.what());
        }
    }
    if (g.limit_dbm)
        cfg.settings.limit.limit_dbm = *g.limit_dbm;
    if (!g.limit_mode.empty())
    {
        try
        {
            cfg.settings.limit.mode = limit_mode_from_string(g.limit_mode);
        }
        catch (const std::invalid_argument &e)
        {
            throw ConfigError("--limit-mode", e.what());
        }
    }
    if (g.include_smc)
        cfg.settings.include_smc = true;
    if (g.mrt)
        cfg.settings.coherent = CoherentAllocation::mrt;
    if (g.polarization_loss)
        cfg.settings.polarization_loss = true;
    if (g.workers)
    {
        if (*g.workers == 0)
            throw ConfigError("--workers", "must be at least 1");
        cfg.settings.workers = *g.workers;
    }

    if (cfg.deployment && g.frequency_hz)
        throw ConfigError("--frequency", "cannot override the frequency of an explicit deployment");
    if (g.frequency_hz)
        cfg.scene.frequency_hz = *g.frequency_hz;

    if (!g.antenna.empty() || g.patch_n)
    {
        RadiationPattern p = cfg.deployment ? cfg.deployment->antennas.front().pattern : cfg.scene.antenna_pattern;
        if (!g.antenna.empty())
        {
            try
            {
                p.kind = pattern_kind_from_string(g.antenna);
            }
            catch (const std::invalid_argument &e)
            {
                throw ConfigError("--antenna", e.what());
            }
        }
        if (g.patch_n)
            p.patch_exponent = *g.patch_n;
        try
        {
            p.validate();
        }
        catch (const std::invalid_argument &e)
        {
            throw ConfigError("--patch-n", e.what());
        }
        if (cfg.deployment)
            cfg.deployment = with_antenna_pattern(*cfg.deployment, p);
        else
        {
            cfg.scene.antenna_pattern = p;
            cfg.scene.esl_pattern.reset();
        }
    }

    try
    {
        cfg.scene.validate();
    }
    catch (const std::invalid_argument &e)
    {
        throw ConfigError("$.scene", e.what());
    }
    if (g.plot && g.out_path.empty() && !cfg.svg_path)
        throw ConfigError("--plot", "needs --out or output.svg to know where to write the chart");
    return cfg;
}

// CSV goes to --out, then output.csv, then stdout. Returns true if written to a file.
bool emit_csv(const RunConfig &cfg, const GlobalOptions &g, const std::string &csv, std::ostream &out)
{
    std::string path = !g.out_path.empty() ? g.out_path : cfg.csv_path.value_or("");
    if (path.empty())
    {
        out << csv;
        return false;
    }
    write_file(path, csv);
    return true;
}

std::string svg_path(const RunConfig &cfg, const GlobalOptions &g)
{
    if (cfg.svg_path)
        return *cfg.svg_path;
    return std::filesystem::path(g.out_path).replace_extension(".svg").string();
}

void warn_near_field(const Deployment &dep, std::size_t esl_id, const ExperimentSettings &s, std::ostream &err)
{
    auto h = channel_vector(dep, esl_id, s.include_smc);
    if (h.near_field_links > 0)
        err << "warning: " << h.near_field_links << " link(s) to ESL " << esl_id
            << " are shorter than two wavelengths; far-field gains may be inaccurate\n";
}

void print_result(const StrategyResult &r, const Deployment &dep, const RunConfig &cfg, std::ostream &out)
{
    const auto &e = dep.esl(r.esl_id);
    out << "strategy            " << to_string(r.strategy) << '\n'
        << "antenna pattern     " << pattern_label(dep.antennas.front().pattern) << '\n'
        << "antennas            " << dep.antennas.size() << '\n'
        << "ESL                 " << r.esl_id << " at (" << num(e.position.x, 3) << ", " << num(e.position.y, 3)
        << ", " << num(e.position.z, 3) << ") m\n"
        << "labels in aisle     " << r.n_esls << '\n'
        << "P_tx total          " << num(r.p_tx_total_dbm) << " dBm\n"
        << "P_tx per element    " << num(r.p_tx_per_antenna_dbm) << " dBm (largest)\n"
        << "P_rx                " << num(r.p_rx_dbm) << " dBm\n"
        << "efficiency          " << format_general(r.efficiency_pct) << " %\n";
    if (r.selected_antenna)
        out << "serving antenna     " << *r.selected_antenna + 1 << '\n';
    out << "compliance          " << (r.verdict.compliant ? "compliant" : "VIOLATION") << ", margin "
        << num(r.verdict.margin_db) << " dB (" << limit_label(cfg.settings.limit) << ")\n";
    if (r.informational)
        out << "note                the non-coherent field level is set by the furthest ESL; this value is "
               "informational\n";
}

int cmd_scene(const RunConfig &cfg, const GlobalOptions &g, std::ostream &out)
{
    const Deployment dep = cfg.build_deployment();
    std::string doc = scene_document(dep).dump(2) + "\n";
    if (g.out_path.empty())
        out << doc;
    else
    {
        write_file(g.out_path, doc);
        out << "L = " << dep.antennas.size() << ", M = " << dep.elements_per_array
            << ", lambda = " << num(dep.wavelength(), 6) << " m, ESLs = " << dep.esls.size() << '\n';
    }
    return exit_ok;
}

int cmd_solve(const RunConfig &cfg, const GlobalOptions &g, const SolveOptions &o, std::ostream &out,
              std::ostream &err)
{
    const Deployment dep = cfg.build_deployment();
    const EslSelector sel = o.esl.empty() ? cfg.esl : parse_esl_selector(o.esl);
    std::size_t esl_id = 0;
    try
    {
        esl_id = resolve_esl(dep, sel);
    }
    catch (const std::invalid_argument &e)
    {
        throw ConfigError("--esl", e.what());
    }
    const std::size_t n = o.n_esls.value_or(cfg.n_esls.value_or(dep.esls.size()));
    if (n == 0)
        throw ConfigError("--n-esls", "must be at least 1");

    std::vector<StrategyKind> kinds;
    if (o.strategy == "all")
        kinds = {StrategyKind::siso, StrategyKind::miso_noncoherent_uniform, StrategyKind::miso_coherent};
    else
        kinds = {o.strategy.empty() ? cfg.strategy : parse_strategy(o.strategy, "--strategy")};

    warn_near_field(dep, esl_id, cfg.settings, err);
    auto seq = required_rx_power_sequential(n, cfg.energy);
    if (seq.near_sensitivity)
        err << "warning: sequential target " << num(seq.dbm) << " dBm is within "
            << num(sensitivity_warning_margin_db, 0) << " dB of the harvester sensitivity\n";

    std::vector<StrategyResult> results;
    for (auto k : kinds)
        results.push_back(solve(dep, cfg.energy, k, esl_id, n, cfg.settings));

    for (std::size_t i = 0; i < results.size(); ++i)
    {
        if (i)
            out << '\n';
        print_result(results[i], dep, cfg, out);
    }

    const std::string path = !g.out_path.empty() ? g.out_path : cfg.csv_path.value_or("");
    if (!path.empty())
    {
        std::ostringstream csv;
        write_results_csv(csv, results);
        write_file(path, csv.str());
    }
    if (!o.channel_csv.empty())
    {
        std::ostringstream csv;
        write_channel_csv(csv, esl_id, channel_paths(dep, dep.esl(esl_id), cfg.settings.include_smc));
        write_file(o.channel_csv, csv.str());
    }
    return exit_ok;
}

int cmd_sweep(const RunConfig &cfg, const GlobalOptions &g, const SweepOptions &o, std::ostream &out)
{
    RunConfig c = cfg;
    if (o.n_min)
        c.sweep_n_min = *o.n_min;
    if (o.n_max)
        c.sweep_n_max = *o.n_max;
    if (o.n_step)
        c.sweep_n_step = *o.n_step;
    if (!o.roles.empty())
    {
        c.sweep_roles.clear();
        for (const auto &r : o.roles)
            c.sweep_roles.push_back(parse_role(r, "--role"));
    }

    const Deployment dep = c.build_deployment();
    const auto range = c.sweep_range();
    const auto rows = sweep_esl_count(dep, c.energy, range, c.sweep_strategies, c.sweep_roles, c.settings);

    std::ostringstream csv;
    write_sweep_csv(csv, rows);
    bool to_file = emit_csv(c, g, csv.str(), out);

    if (g.plot)
    {
        std::ostringstream svg;
        write_sweep_svg(svg, rows,
                        chart_limits(c.settings.limit, peak_gain_dbi(dep.antennas.front().pattern), dep.antennas.size()));
        write_file(svg_path(c, g), svg.str());
    }
    if (to_file)
        out << rows.size() << " rows (" << range.size() << " label counts)\n";
    return exit_ok;
}

int cmd_table(const RunConfig &cfg, const GlobalOptions &g, std::ostream &out)
{
    const Deployment dep = cfg.build_deployment();
    const double n = g.patch_n.value_or(cfg.scene.antenna_pattern.kind == PatternKind::patch
                                            ? cfg.scene.antenna_pattern.patch_exponent
                                            : 2.0);
    const auto report = reproduce_table(dep, cfg.energy, cfg.settings, n);

    std::ostringstream csv;
    write_table_csv(csv, report);
    if (emit_csv(cfg, g, csv.str(), out))
    {
        out << "closest ESL " << report.closest_esl << ", furthest ESL " << report.furthest_esl << ", patch n = "
            << format_general(report.patch_exponent) << '\n';
        for (const auto &c : report.cells)
            out << to_string(c.reference.antenna) << ' ' << to_string(c.reference.role) << ' '
                << to_string(c.reference.strategy) << ": " << num(c.computed.p_tx_total_dbm) << " dBm (reference "
                << num(c.reference.p_tx_total_dbm, 1) << ", delta " << num(c.delta_db) << " dB)\n";
        out << "largest |delta| " << num(report.max_abs_delta_db()) << " dB\n";
    }
    return exit_ok;
}

int cmd_crossover(const RunConfig &cfg, const GlobalOptions &g, const std::vector<std::string> &roles,
                  std::ostream &out)
{
    const Deployment dep = cfg.build_deployment();
    std::vector<CrossoverRow> rows;
    for (const auto &r : roles.empty() ? std::vector<std::string>{"furthest"} : roles)
    {
        const EslRole role = parse_role(r, "--role");
        rows.push_back({dep.antennas.front().pattern.kind, role, find_crossover(dep, cfg.energy, role, cfg.settings)});
    }
    std::ostringstream csv;
    write_crossover_csv(csv, rows);
    if (emit_csv(cfg, g, csv.str(), out))
        for (const auto &r : rows)
            out << to_string(r.esl_role) << ": n* = " << num(r.crossover.n_closed_form, 1) << ", P_nc = "
                << num(r.crossover.p_noncoherent_dbm) << " dBm, P_coh(n*) = "
                << num(r.crossover.p_coherent_dbm_at_crossover) << " dBm, array gain "
                << num(r.crossover.array_gain) << '\n';
    return exit_ok;
}

int cmd_check(const RunConfig &cfg, const CheckOptions &o, std::ostream &out)
{
    const Deployment dep = cfg.build_deployment();
    const StrategyKind kind = parse_strategy(o.strategy, "--strategy");
    std::size_t active = kind == StrategyKind::siso ? 1 : o.elements.value_or(dep.antennas.size());
    if (active == 0 || active > dep.antennas.size())
        throw ConfigError("--elements", "must lie in [1, " + std::to_string(dep.antennas.size()) + "]");

    const double total_w = watts_from_dbm(o.p_tx_dbm);
    PowerAllocation alloc;
    alloc.per_antenna.assign(dep.antennas.size(), 0.0);
    for (std::size_t i = 0; i < active; ++i)
        alloc.per_antenna[i] = total_w / static_cast<double>(active);
    alloc.total = total_w;

    std::vector<double> peaks;
    for (const auto &a : dep.antennas)
        peaks.push_back(peak_gain_dbi(a.pattern));
    const auto v = check(alloc, peaks, cfg.settings.limit);
    const double cap = max_compliant_total_dbm(cfg.settings.limit, peaks.front(), active);

    out << "limit               " << limit_label(cfg.settings.limit) << '\n'
        << "active elements     " << active << '\n'
        << "P_tx total          " << num(o.p_tx_dbm) << " dBm\n"
        << "largest compliant   " << num(cap) << " dBm total\n"
        << "verdict             " << (v.compliant ? "compliant" : "VIOLATION") << ", margin " << num(v.margin_db)
        << " dB\n";
    return exit_ok;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Link-budget simulator for RF wireless power transfer to electronic shelf labels", "wptsim"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--config", g.config_path, "JSON run configuration");
    app.add_option("--out", g.out_path, "Output file (CSV, or scene JSON)");
    app.add_option("--band", g.band, "Regulatory preset")->check(CLI::IsMember({"eu868", "eu917"}));
    app.add_option("--limit-dbm", g.limit_dbm, "Override the limit level");
    app.add_option("--limit-mode", g.limit_mode, "per_antenna or total")
        ->check(CLI::IsMember({"per_antenna", "total"}));
    app.add_flag("--plot", g.plot, "Also write an SVG chart next to the CSV");
    app.add_flag("--include-smc", g.include_smc, "Add first-order shelf and floor reflections");
    app.add_flag("--mrt", g.mrt, "Coherent transmission with maximum ratio weights");
    app.add_flag("--polarization-loss", g.polarization_loss, "Apply a flat 3 dB polarisation mismatch");
    app.add_option("--frequency", g.frequency_hz, "Carrier frequency [Hz]");
    app.add_option("--antenna", g.antenna, "Antenna pattern")->check(CLI::IsMember({"isotropic", "dipole", "patch"}));
    app.add_option("--patch-n", g.patch_n, "Patch pattern exponent");
    app.add_option("--workers", g.workers, "Worker threads for sweeps");

    auto *scene = app.add_subcommand("scene", "Print the resolved deployment as JSON");

    SolveOptions so;
    auto *solve_cmd = app.add_subcommand("solve", "Required transmit power for one ESL");
    solve_cmd->add_option("--strategy", so.strategy, "siso, miso_noncoherent_uniform, miso_coherent or all");
    solve_cmd->add_option("--esl", so.esl, "closest, furthest or an ESL id");
    solve_cmd->add_option("--n-esls", so.n_esls, "Labels sharing the charger");
    solve_cmd->add_option("--channel-csv", so.channel_csv, "Write the per-path channel to this file");

    SweepOptions sw;
    auto *sweep = app.add_subcommand("sweep", "Required power against the number of labels");
    sweep->add_option("--role", sw.roles, "closest and/or furthest");
    sweep->add_option("--n-min", sw.n_min);
    sweep->add_option("--n-max", sw.n_max);
    sweep->add_option("--n-step", sw.n_step);

    auto *table = app.add_subcommand("table", "Compare against the reference link-budget table");

    std::vector<std::string> cross_roles;
    auto *cross = app.add_subcommand("crossover", "Label count where coherent and non-coherent power meet");
    cross->add_option("--role", cross_roles, "closest and/or furthest");

    CheckOptions co;
    auto *check_cmd = app.add_subcommand("check", "Compliance of a given transmit power");
    check_cmd->add_option("--p-tx-dbm", co.p_tx_dbm, "Total conducted power")->required();
    check_cmd->add_option("--strategy", co.strategy, "siso uses one element, MISO spreads uniformly");
    check_cmd->add_option("--elements", co.elements, "Number of active elements");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        if (e.get_exit_code() == 0)
        {
            app.exit(e, out, err);
            return exit_ok;
        }
        err << "error: " << e.what() << '\n';
        return exit_config_error;
    }

    try
    {
        const RunConfig cfg = resolve_config(g);
        if (*scene)
            return cmd_scene(cfg, g, out);
        if (*solve_cmd)
            return cmd_solve(cfg, g, so, out, err);
        if (*sweep)
            return cmd_sweep(cfg, g, sw, out);
        if (*table)
            return cmd_table(cfg, g, out);
        if (*cross)
            return cmd_crossover(cfg, g, cross_roles, out);
        if (*check_cmd)
            return cmd_check(cfg, co, out);
    }
    catch (const IoError &e)
    {
        err << "I/O error: " << e.what() << '\n';
        return exit_io_error;
    }
    catch (const std::invalid_argument &e)
    {
        err << "config error: " << e.what() << '\n';
        return exit_config_error;
    }
    catch (const std::exception &e)
    {
        err << "error: " << e.what() << '\n';
        return exit_physics_error;
    }
    return exit_config_error;
}

} // namespace wpt::cli
