// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: runs parameter sweeps or single points, writes
// CSV results, renders SVG plots, and validates configurations.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "riscomp/experiments.hpp"
#include "riscomp/plot.hpp"
#include "riscomp/topology.hpp"
#include "riscomp/units.hpp"

namespace {

using namespace riscomp;

struct CommonOpts {
    std::string config_path;
    std::string out_dir;
    std::uint64_t seed = 1000003ull;
    std::int64_t trials = 10000;
    int workers = 0;  // 0 = hardware concurrency
    bool plot = true;
};

std::string default_out_dir() {
    if (const char *env = std::getenv("RISCOMP_OUT"); env && *env)
        return env;
    return "out";
}

void add_common(CLI::App *sub, CommonOpts &c) {
    sub->add_option("--config", c.config_path, "JSON configuration file");
    sub->add_option("--out", c.out_dir,
                    "output directory (default: $RISCOMP_OUT or ./out)");
    sub->add_option("--seed", c.seed, "master seed");
    sub->add_option("--trials", c.trials, "Monte Carlo trials per grid point")
        ->check(CLI::PositiveNumber);
    sub->add_option("--workers", c.workers,
                    "worker threads (default: hardware concurrency)");
    sub->add_flag("--plot,!--no-plot", c.plot, "write an SVG plot (default on)");
}

int resolved_workers(const CommonOpts &c) {
    if (c.workers > 0) return c.workers;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

SimConfig resolve_config(const CommonOpts &c) {
    SimConfig cfg;
    if (!c.config_path.empty()) cfg = load_config_file(c.config_path);
    return cfg;
}

std::vector<EvalScheme> resolve_schemes(const std::vector<std::string> &tags,
                                        std::vector<EvalScheme> fallback) {
    if (tags.empty()) return fallback;
    std::vector<EvalScheme> out;
    out.reserve(tags.size());
    for (const auto &t : tags) out.push_back(scheme_by_tag(t));
    return out;
}

void write_text(const std::string &path, const std::string &content) {
    std::filesystem::path p(path);
    if (p.has_parent_path())
        std::filesystem::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

void print_records(const SweepResult &result) {
    for (const auto &r : result.records) {
        std::string axes;
        char buf[160];
        for (const auto &axis : result.axis_columns) {
            if (axis == "coop")
                std::snprintf(buf, sizeof(buf), "coop=%d ", r.coop);
            else if (axis == "elements")
                std::snprintf(buf, sizeof(buf), "elements=%d ", r.elements);
            else if (axis == "pt_dbm")
                std::snprintf(buf, sizeof(buf), "pt=%g ", r.pt_dbm);
            else if (axis == "rth")
                std::snprintf(buf, sizeof(buf), "rth=%g ", r.rth);
            else if (axis == "ratio")
                std::snprintf(buf, sizeof(buf), "ratio=%g ", r.ratio);
            axes += buf;
        }
        std::snprintf(buf, sizeof(buf),
                      "%sscheme=%s p_out_edge=%.4g osr=%.6g ee=%.6g",
                      axes.c_str(), r.scheme_tag.c_str(), r.p_out_edge,
                      r.outage_sum_rate, r.energy_efficiency);
        std::cout << buf << "\n";
    }
}

void emit(const SweepResult &result, const CommonOpts &c,
          const SimConfig &cfg, const std::string &subcommand) {
    const std::string out_dir =
        c.out_dir.empty() ? default_out_dir() : c.out_dir;
    const std::string stem = to_string(result.kind);
    const std::string csv_path = out_dir + "/" + stem + ".csv";
    write_text(csv_path, to_csv(result));

    std::string svg_path;
    if (c.plot) svg_path = write_plot(result, out_dir, stem);

    nlohmann::json manifest;
    manifest["subcommand"] = subcommand;
    manifest["version"] = result.provenance.version_tag;
    manifest["config_hash"] = result.provenance.config_hash;
    manifest["master_seed"] = result.provenance.master_seed;
    manifest["trials"] = c.trials;
    manifest["workers"] = resolved_workers(c);
    manifest["records"] = result.records.size();
    manifest["csv"] = csv_path;
    if (!svg_path.empty()) manifest["svg"] = svg_path;
    manifest["config"] = nlohmann::json::parse(config_to_json(cfg));
    write_text(out_dir + "/" + stem + ".manifest.json",
               manifest.dump(2) + "\n");

    print_records(result);
    std::cout << "wrote " << csv_path << " (" << result.records.size()
              << " records)\n";
}

int cmd_validate(const CommonOpts &c) {
    const SimConfig cfg = resolve_config(c);
    validate_config(cfg);
    const NetworkTopology topo = build_topology(cfg);
    std::cout << config_to_json(cfg);
    char buf[128];
    std::snprintf(buf, sizeof(buf), "pt_watts = %.10g\n",
                  topo.power.pt_watts());
    std::cout << buf;
    std::snprintf(buf, sizeof(buf), "p_q_watts = %.10g\n",
                  topo.power.p_q_watts());
    std::cout << buf;
    std::snprintf(buf, sizeof(buf), "p_ele_watts = %.10g\n",
                  topo.power.p_ele_watts());
    std::cout << buf;
    std::snprintf(buf, sizeof(buf), "noise_watts = %.10g\n",
                  topo.power.noise_watts());
    std::cout << buf;
    std::snprintf(buf, sizeof(buf), "kappa_linear = %.10g\n", topo.kappa);
    std::cout << buf;
    std::snprintf(buf, sizeof(buf), "gamma_center = %.10g\n",
                  topo.thresholds.gamma_center);
    std::cout << buf;
    std::snprintf(buf, sizeof(buf), "gamma_edge = %.10g\n",
                  topo.thresholds.gamma_edge);
    std::cout << buf;
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{
        "Monte Carlo simulator for multi-cell downlink networks with "
        "reconfigurable reflecting surfaces"};
    app.require_subcommand(1);

    CommonOpts c;

    auto *sweep_j_cmd = app.add_subcommand(
        "sweep-j", "energy efficiency vs. cooperative BS count");
    std::vector<int> coop_grid;
    int anchor_elements = -1;
    double anchor_pt = std::nan("");
    double anchor_rth = std::nan("");
    std::vector<std::string> scheme_tags;
    add_common(sweep_j_cmd, c);
    sweep_j_cmd->add_option("--coop", coop_grid, "cooperative count grid");
    sweep_j_cmd->add_option("--elements", anchor_elements,
                            "surface elements per cell");
    sweep_j_cmd->add_option("--pt", anchor_pt, "transmit power (dBm)");
    sweep_j_cmd->add_option("--rth", anchor_rth,
                            "rate threshold for both user classes");
    sweep_j_cmd->add_option("--scheme", scheme_tags, "scheme tags to compare");

    auto *sweep_k_cmd = app.add_subcommand(
        "sweep-k", "energy efficiency vs. surface element count");
    std::vector<int> elements_grid;
    int anchor_coop = -1;
    add_common(sweep_k_cmd, c);
    sweep_k_cmd->add_option("--elements", elements_grid,
                            "element count grid");
    sweep_k_cmd->add_option("--coop", anchor_coop, "cooperative BS count");
    sweep_k_cmd->add_option("--pt", anchor_pt, "transmit power (dBm)");
    sweep_k_cmd->add_option("--rth", anchor_rth,
                            "rate threshold for both user classes");
    sweep_k_cmd->add_option("--scheme", scheme_tags, "scheme tags to compare");

    auto *sweep_pt_cmd = app.add_subcommand(
        "sweep-pt", "outage sum rate vs. transmit power");
    std::vector<double> pt_grid;
    add_common(sweep_pt_cmd, c);
    sweep_pt_cmd->add_option("--pt", pt_grid, "transmit power grid (dBm)");
    sweep_pt_cmd->add_option("--coop", anchor_coop, "cooperative BS count");
    sweep_pt_cmd->add_option("--elements", anchor_elements,
                             "surface elements per cell");
    sweep_pt_cmd->add_option("--rth", anchor_rth,
                             "rate threshold for both user classes");
    sweep_pt_cmd->add_option("--scheme", scheme_tags,
                             "scheme tags to compare");

    auto *contour_cmd = app.add_subcommand(
        "contour", "energy efficiency over power and rate threshold");
    std::vector<double> rth_grid;
    add_common(contour_cmd, c);
    contour_cmd->add_option("--pt", pt_grid, "transmit power grid (dBm)");
    contour_cmd->add_option("--rth", rth_grid, "rate threshold grid");
    contour_cmd->add_option("--coop", anchor_coop, "cooperative BS count");
    contour_cmd->add_option("--elements", anchor_elements,
                            "surface elements per cell");
    contour_cmd->add_option("--scheme", scheme_tags, "scheme tag");

    auto *split_cmd = app.add_subcommand(
        "split-ratio", "outage sum rate vs. cancel/enhance split ratio");
    std::vector<double> ratio_grid;
    std::vector<int> split_coop_list;
    add_common(split_cmd, c);
    split_cmd->add_option("--ratio", ratio_grid, "cancel fraction grid");
    split_cmd->add_option("--coop", split_coop_list,
                          "cooperative BS counts to compare");
    split_cmd->add_option("--elements", anchor_elements,
                          "surface elements per cell (default 72 here)");
    split_cmd->add_option("--pt", anchor_pt, "transmit power (dBm)");
    split_cmd->add_option("--rth", anchor_rth,
                          "rate threshold for both user classes");
    split_cmd->add_option("--scheme", scheme_tags, "base scheme tag");

    auto *point_cmd =
        app.add_subcommand("point", "single configuration evaluation");
    std::string point_scheme = "ec";
    double point_ratio = -1.0;
    add_common(point_cmd, c);
    point_cmd->add_option("--scheme", point_scheme, "scheme tag");
    point_cmd->add_option("--coop", anchor_coop, "cooperative BS count");
    point_cmd->add_option("--elements", anchor_elements,
                          "surface elements per cell");
    point_cmd->add_option("--pt", anchor_pt, "transmit power (dBm)");
    point_cmd->add_option("--rth", anchor_rth,
                          "rate threshold for both user classes");
    point_cmd->add_option("--ratio", point_ratio,
                          "cancel fraction (split layout)");

    auto *validate_cmd = app.add_subcommand(
        "validate", "check a configuration and echo resolved parameters");
    add_common(validate_cmd, c);

    auto *replot_cmd =
        app.add_subcommand("replot", "render plots from an existing CSV");
    std::string replot_csv;
    add_common(replot_cmd, c);
    replot_cmd->add_option("csv", replot_csv, "CSV file produced by a sweep")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        // Help/version exits report success; anything else is bad usage.
        return code == 0 ? 0 : 2;
    }

    try {
        SimConfig cfg = resolve_config(c);
        if (anchor_elements >= 0) cfg.ris_elements = anchor_elements;
        if (anchor_coop >= 1) cfg.coop = anchor_coop;
        if (!std::isnan(anchor_pt)) cfg.pt_dbm = anchor_pt;
        if (!std::isnan(anchor_rth)) {
            cfg.rate_center = anchor_rth;
            cfg.rate_edge = anchor_rth;
        }
        validate_config(cfg);
        const RunOptions options = make_run_options(cfg, resolved_workers(c));

        if (app.got_subcommand(validate_cmd)) return cmd_validate(c);

        if (app.got_subcommand(replot_cmd)) {
            std::ifstream in(replot_csv);
            if (!in)
                throw std::runtime_error("cannot open CSV file: " +
                                         replot_csv);
            std::ostringstream buf;
            buf << in.rdbuf();
            const SweepResult parsed = parse_csv(buf.str());
            const std::string out_dir =
                c.out_dir.empty() ? default_out_dir() : c.out_dir;
            const std::string stem =
                std::filesystem::path(replot_csv).stem().string();
            const std::string svg = write_plot(parsed, out_dir, stem);
            std::cout << "wrote " << svg << "\n";
            return 0;
        }

        SweepResult result;
        std::string name;
        if (app.got_subcommand(sweep_j_cmd)) {
            name = "sweep-j";
            result = sweep_coop(
                cfg, coop_grid.empty() ? default_coop_grid() : coop_grid,
                resolve_schemes(scheme_tags, schemes_ee()), c.trials, c.seed,
                options);
        } else if (app.got_subcommand(sweep_k_cmd)) {
            name = "sweep-k";
            result = sweep_elements(
                cfg,
                elements_grid.empty() ? default_elements_grid()
                                      : elements_grid,
                resolve_schemes(scheme_tags, schemes_elements()), c.trials,
                c.seed, options);
        } else if (app.got_subcommand(sweep_pt_cmd)) {
            name = "sweep-pt";
            result = sweep_power(
                cfg, pt_grid.empty() ? default_pt_grid() : pt_grid,
                resolve_schemes(scheme_tags, schemes_power()), c.trials,
                c.seed, options);
        } else if (app.got_subcommand(contour_cmd)) {
            name = "contour";
            SweepSpec spec;
            spec.kind = ExperimentKind::ContourSweep;
            spec.pt_dbm_grid = pt_grid.empty() ? default_pt_grid() : pt_grid;
            spec.rth_grid = rth_grid.empty() ? default_rth_grid() : rth_grid;
            spec.schemes = resolve_schemes(scheme_tags, {});
            spec.trials = c.trials;
            spec.master_seed = c.seed;
            result = run_sweep(cfg, spec, options);
        } else if (app.got_subcommand(split_cmd)) {
            name = "split-ratio";
            if (anchor_elements < 0) cfg.ris_elements = 72;
            SweepSpec spec;
            spec.kind = ExperimentKind::SplitSweep;
            spec.ratio_grid =
                ratio_grid.empty() ? default_ratio_grid() : ratio_grid;
            spec.coop_grid = split_coop_list.empty()
                                 ? default_split_coop_list()
                                 : split_coop_list;
            spec.schemes = resolve_schemes(scheme_tags, {});
            spec.trials = c.trials;
            spec.master_seed = c.seed;
            result = run_sweep(cfg, spec, options);
        } else if (app.got_subcommand(point_cmd)) {
            name = "point";
            EvalScheme scheme = scheme_by_tag(point_scheme);
            if (point_ratio >= 0.0) scheme.split_ratio = point_ratio;
            result = run_point(cfg, scheme, c.trials, c.seed, options);
        }
        emit(result, c, cfg, name);
        return 0;
    } catch (const std::invalid_argument &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
