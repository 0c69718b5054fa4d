// SPDX-License-Identifier: Apache-2.0
#include "riscomp/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "riscomp/rng.hpp"
#include "riscomp/topology.hpp"

namespace riscomp {
namespace {

std::string fmt10(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

template <typename T>
void require_sorted_grid(const std::vector<T> &grid, const char *name) {
    if (grid.empty())
        throw std::invalid_argument(std::string("sweep grid '") + name +
                                    "' must be non-empty");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i - 1] < grid[i]))
            throw std::invalid_argument(std::string("sweep grid '") + name +
                                        "' must be strictly ascending");
}

// One resolved evaluation: configuration, scheme, and the axis values the
// record reports.
struct PointJob {
    SimConfig cfg;
    EvalScheme scheme;
    double ratio = -1.0;
};

SweepRecord run_job(const PointJob &job, std::int64_t trials,
                    std::uint64_t master_seed, const RunOptions &options) {
    validate_config(job.cfg);
    const NetworkTopology topo = build_topology(job.cfg);
    NetworkTopology effective = topo;
    if (job.scheme.coop_override >= 1) {
        if (job.scheme.coop_override > effective.cells)
            throw std::invalid_argument(
                "scheme coop override exceeds the cell count");
        effective.coop = job.scheme.coop_override;
    }
    const std::uint64_t seed = derive_point_seed(master_seed, job.cfg);

    const auto start = std::chrono::steady_clock::now();
    const Estimates est = run_trials(topo, job.scheme, trials, seed, options);
    const auto stop = std::chrono::steady_clock::now();

    SweepRecord rec;
    rec.coop = effective.coop;
    rec.elements = job.cfg.ris_elements;
    rec.pt_dbm = job.cfg.pt_dbm;
    rec.rth = job.cfg.rate_edge;
    rec.ratio = job.ratio;
    rec.scheme_tag = job.scheme.tag;
    rec.estimates = est;
    rec.p_out_edge = est.p_out_edge.mean;
    double p_center = 0.0;
    double rate_center_sum = 0.0;
    for (const auto &p : est.p_out_center) p_center += p.mean;
    for (const auto &r : est.rate_center) rate_center_sum += r.mean;
    rec.p_out_center_mean = p_center / static_cast<double>(topo.cells);
    rec.rate_edge = est.rate_edge.mean;
    rec.rate_center_sum = rate_center_sum;
    rec.outage_sum_rate = outage_sum_rate(est, effective, options);
    rec.energy_efficiency = energy_efficiency(est, effective, options);
    rec.stderr_p_out_edge = est.p_out_edge.stderr_mean;
    rec.stderr_rate_edge = est.rate_edge.stderr_mean;
    rec.stderr_outage_sum_rate =
        outage_sum_rate_stderr(est, effective, options);
    rec.stderr_energy_efficiency =
        energy_efficiency_stderr(est, effective, options);
    rec.n_trials = trials;
    rec.seed = seed;
    rec.wall_seconds =
        std::chrono::duration<double>(stop - start).count();
    return rec;
}

Provenance make_provenance(const SimConfig &base, std::uint64_t master_seed) {
    Provenance p;
    p.master_seed = master_seed;
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(config_hash(base)));
    p.config_hash = buf;
    p.version_tag = kVersionTag;
    return p;
}

}  // namespace

std::string to_string(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::CoopSweep: return "sweep-j";
        case ExperimentKind::ElementsSweep: return "sweep-k";
        case ExperimentKind::PowerSweep: return "sweep-pt";
        case ExperimentKind::ContourSweep: return "contour";
        case ExperimentKind::SplitSweep: return "split-ratio";
        case ExperimentKind::Point: return "point";
    }
    return "?";
}

RunOptions make_run_options(const SimConfig &cfg, int workers) {
    RunOptions o;
    o.workers = workers;
    o.per_trial_composition = cfg.outage_composition;
    o.eo_noncoop_random = cfg.eo_noncoop_random;
    o.charge_all_active_ris = cfg.charge_all_active_ris;
    return o;
}

std::uint64_t derive_point_seed(std::uint64_t master_seed,
                                const SimConfig &resolved_point) {
    const SimConfig &c = resolved_point;
    char buf[512];
    std::snprintf(
        buf, sizeof(buf),
        "cells=%d;coop=%d;elements=%d;"
        "d=%.17g,%.17g,%.17g,%.17g,%.17g;"
        "a=%.17g,%.17g,%.17g,%.17g;"
        "kappa_db=%.17g;topology_seed=%llu",
        c.cells, c.coop, c.ris_elements, c.distances.bs_center,
        c.distances.bs_edge, c.distances.bs_foreign_center,
        c.distances.bs_ris, c.distances.ris_edge, c.exponents.ris,
        c.exponents.center, c.exponents.edge, c.exponents.ici, c.kappa_db,
        static_cast<unsigned long long>(c.topology_seed));
    return hash_combine(master_seed, fnv1a64(buf, std::char_traits<char>::length(buf)));
}

std::vector<EvalScheme> schemes_ee() {
    return {
        {Access::Noma, Scheme::None, -1.0, -1, "none"},
        {Access::Noma, Scheme::Random, -1.0, -1, "random"},
        {Access::Noma, Scheme::Enhance, -1.0, -1, "eo"},
        {Access::Noma, Scheme::Cancel, -1.0, -1, "ec"},
    };
}

std::vector<EvalScheme> schemes_elements() {
    auto s = schemes_ee();
    s.push_back({Access::Noma, Scheme::Cancel, -1.0, 1, "no_comp"});
    return s;
}

std::vector<EvalScheme> schemes_power() {
    auto s = schemes_elements();
    s.push_back({Access::Oma, Scheme::None, -1.0, -1, "oma"});
    return s;
}

EvalScheme scheme_by_tag(const std::string &tag) {
    for (const auto &s : schemes_power())
        if (s.tag == tag) return s;
    throw std::invalid_argument("unknown scheme tag '" + tag + "'");
}

std::vector<int> default_coop_grid() { return {1, 2, 3, 4, 5, 6}; }
std::vector<int> default_elements_grid() {
    return {10, 30, 50, 70, 90, 110, 130, 150};
}
std::vector<double> default_pt_grid() {
    return {-10, -5, 0, 5, 10, 15, 20};
}
std::vector<double> default_rth_grid() { return {0.25, 0.5, 1.0, 1.5, 2.0}; }
std::vector<double> default_ratio_grid() {
    return {0.0, 0.25, 0.5, 0.75, 1.0};
}
std::vector<int> default_split_coop_list() { return {1, 3, 6}; }

SweepResult run_sweep(const SimConfig &base, const SweepSpec &spec,
                      const RunOptions &options) {
    validate_config(base);
    if (spec.trials < 1)
        throw std::invalid_argument("sweep trials must be >= 1");
    if (spec.schemes.empty() && spec.kind != ExperimentKind::ContourSweep &&
        spec.kind != ExperimentKind::SplitSweep)
        throw std::invalid_argument("sweep scheme list must be non-empty");

    SweepResult result;
    result.kind = spec.kind;
    result.base_config = base;
    result.provenance = make_provenance(base, spec.master_seed);

    std::vector<PointJob> jobs;
    switch (spec.kind) {
        case ExperimentKind::CoopSweep: {
            require_sorted_grid(spec.coop_grid, "coop");
            result.axis_columns = {"coop"};
            for (int j : spec.coop_grid) {
                if (j < 1 || j > base.cells)
                    throw std::invalid_argument(
                        "sweep grid 'coop': point outside [1, cells]");
                for (const auto &s : spec.schemes) {
                    PointJob job{base, s, -1.0};
                    job.cfg.coop = j;
                    jobs.push_back(job);
                }
            }
            break;
        }
        case ExperimentKind::ElementsSweep: {
            require_sorted_grid(spec.elements_grid, "elements");
            result.axis_columns = {"elements"};
            for (int k : spec.elements_grid) {
                if (k < 0)
                    throw std::invalid_argument(
                        "sweep grid 'elements': point must be >= 0");
                for (const auto &s : spec.schemes) {
                    PointJob job{base, s, -1.0};
                    job.cfg.ris_elements = k;
                    jobs.push_back(job);
                }
            }
            break;
        }
        case ExperimentKind::PowerSweep: {
            require_sorted_grid(spec.pt_dbm_grid, "pt_dbm");
            result.axis_columns = {"pt_dbm"};
            for (double pt : spec.pt_dbm_grid)
                for (const auto &s : spec.schemes) {
                    PointJob job{base, s, -1.0};
                    job.cfg.pt_dbm = pt;
                    jobs.push_back(job);
                }
            break;
        }
        case ExperimentKind::ContourSweep: {
            require_sorted_grid(spec.pt_dbm_grid, "pt_dbm");
            require_sorted_grid(spec.rth_grid, "rth");
            result.axis_columns = {"pt_dbm", "rth"};
            const std::vector<EvalScheme> schemes =
                spec.schemes.empty()
                    ? std::vector<EvalScheme>{scheme_by_tag("ec")}
                    : spec.schemes;
            for (double pt : spec.pt_dbm_grid)
                for (double rth : spec.rth_grid) {
                    if (!(rth > 0.0))
                        throw std::invalid_argument(
                            "sweep grid 'rth': point must be positive");
                    for (const auto &s : schemes) {
                        PointJob job{base, s, -1.0};
                        job.cfg.pt_dbm = pt;
                        job.cfg.rate_center = rth;
                        job.cfg.rate_edge = rth;
                        jobs.push_back(job);
                    }
                }
            break;
        }
        case ExperimentKind::SplitSweep: {
            require_sorted_grid(spec.ratio_grid, "ratio");
            require_sorted_grid(spec.coop_grid, "coop");
            result.axis_columns = {"ratio", "coop"};
            for (double ratio : spec.ratio_grid) {
                if (ratio < 0.0 || ratio > 1.0)
                    throw std::invalid_argument(
                        "sweep grid 'ratio': point outside [0, 1]");
                for (int j : spec.coop_grid) {
                    if (j < 1 || j > base.cells)
                        throw std::invalid_argument(
                            "sweep grid 'coop': point outside [1, cells]");
                    EvalScheme s = spec.schemes.empty()
                                       ? scheme_by_tag("ec")
                                       : spec.schemes.front();
                    s.split_ratio = ratio;
                    s.tag = "ec_split";
                    PointJob job{base, s, ratio};
                    job.cfg.coop = j;
                    jobs.push_back(job);
                }
            }
            break;
        }
        case ExperimentKind::Point: {
            for (const auto &s : spec.schemes)
                jobs.push_back(PointJob{base, s, s.split_ratio});
            break;
        }
    }

    result.records.reserve(jobs.size());
    for (const auto &job : jobs)
        result.records.push_back(
            run_job(job, spec.trials, spec.master_seed, options));
    return result;
}

SweepResult sweep_coop(const SimConfig &base, const std::vector<int> &coop_grid,
                       const std::vector<EvalScheme> &schemes,
                       std::int64_t trials, std::uint64_t seed,
                       const RunOptions &options) {
    SweepSpec spec;
    spec.kind = ExperimentKind::CoopSweep;
    spec.coop_grid = coop_grid;
    spec.schemes = schemes;
    spec.trials = trials;
    spec.master_seed = seed;
    return run_sweep(base, spec, options);
}

SweepResult sweep_elements(const SimConfig &base,
                           const std::vector<int> &elements_grid,
                           const std::vector<EvalScheme> &schemes,
                           std::int64_t trials, std::uint64_t seed,
                           const RunOptions &options) {
    SweepSpec spec;
    spec.kind = ExperimentKind::ElementsSweep;
    spec.elements_grid = elements_grid;
    spec.schemes = schemes;
    spec.trials = trials;
    spec.master_seed = seed;
    return run_sweep(base, spec, options);
}

SweepResult sweep_power(const SimConfig &base,
                        const std::vector<double> &pt_grid,
                        const std::vector<EvalScheme> &schemes,
                        std::int64_t trials, std::uint64_t seed,
                        const RunOptions &options) {
    SweepSpec spec;
    spec.kind = ExperimentKind::PowerSweep;
    spec.pt_dbm_grid = pt_grid;
    spec.schemes = schemes;
    spec.trials = trials;
    spec.master_seed = seed;
    return run_sweep(base, spec, options);
}

SweepResult sweep_contour(const SimConfig &base,
                          const std::vector<double> &pt_grid,
                          const std::vector<double> &rth_grid,
                          std::int64_t trials, std::uint64_t seed,
                          const RunOptions &options) {
    SweepSpec spec;
    spec.kind = ExperimentKind::ContourSweep;
    spec.pt_dbm_grid = pt_grid;
    spec.rth_grid = rth_grid;
    spec.trials = trials;
    spec.master_seed = seed;
    return run_sweep(base, spec, options);
}

SweepResult sweep_split(const SimConfig &base,
                        const std::vector<double> &ratio_grid,
                        const std::vector<int> &coop_list,
                        std::int64_t trials, std::uint64_t seed,
                        const RunOptions &options) {
    SweepSpec spec;
    spec.kind = ExperimentKind::SplitSweep;
    spec.ratio_grid = ratio_grid;
    spec.coop_grid = coop_list;
    spec.trials = trials;
    spec.master_seed = seed;
    return run_sweep(base, spec, options);
}

SweepResult run_point(const SimConfig &config, const EvalScheme &scheme,
                      std::int64_t trials, std::uint64_t seed,
                      const RunOptions &options) {
    SweepSpec spec;
    spec.kind = ExperimentKind::Point;
    spec.schemes = {scheme};
    spec.trials = trials;
    spec.master_seed = seed;
    return run_sweep(config, spec, options);
}

std::string to_csv(const SweepResult &result) {
    std::ostringstream out;
    for (const auto &axis : result.axis_columns) out << axis << ",";
    out << "scheme,p_out_edge,p_out_center_mean,rate_edge,rate_center_sum,"
           "outage_sum_rate,energy_efficiency,stderr_p_out_edge,"
           "stderr_rate_edge,stderr_outage_sum_rate,"
           "stderr_energy_efficiency,n_trials,seed\n";
    for (const auto &r : result.records) {
        for (const auto &axis : result.axis_columns) {
            if (axis == "coop") out << r.coop;
            else if (axis == "elements") out << r.elements;
            else if (axis == "pt_dbm") out << fmt10(r.pt_dbm);
            else if (axis == "rth") out << fmt10(r.rth);
            else if (axis == "ratio") out << fmt10(r.ratio);
            out << ",";
        }
        out << r.scheme_tag << "," << fmt10(r.p_out_edge) << ","
            << fmt10(r.p_out_center_mean) << "," << fmt10(r.rate_edge) << ","
            << fmt10(r.rate_center_sum) << "," << fmt10(r.outage_sum_rate)
            << "," << fmt10(r.energy_efficiency) << ","
            << fmt10(r.stderr_p_out_edge) << "," << fmt10(r.stderr_rate_edge)
            << "," << fmt10(r.stderr_outage_sum_rate) << ","
            << fmt10(r.stderr_energy_efficiency) << "," << r.n_trials << ","
            << r.seed << "\n";
    }
    return out.str();
}

SweepResult parse_csv(const std::string &csv_text) {
    std::istringstream in(csv_text);
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("csv: empty input");
    std::vector<std::string> header;
    {
        std::istringstream hs(line);
        std::string cell;
        while (std::getline(hs, cell, ',')) header.push_back(cell);
    }
    std::size_t scheme_col = header.size();
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == "scheme") {
            scheme_col = i;
            break;
        }
    if (scheme_col == header.size())
        throw std::invalid_argument("csv: missing 'scheme' column");

    SweepResult result;
    result.axis_columns.assign(header.begin(),
                               header.begin() +
                                   static_cast<std::ptrdiff_t>(scheme_col));
    if (result.axis_columns == std::vector<std::string>{"coop"})
        result.kind = ExperimentKind::CoopSweep;
    else if (result.axis_columns == std::vector<std::string>{"elements"})
        result.kind = ExperimentKind::ElementsSweep;
    else if (result.axis_columns == std::vector<std::string>{"pt_dbm"})
        result.kind = ExperimentKind::PowerSweep;
    else if (result.axis_columns ==
             std::vector<std::string>{"pt_dbm", "rth"})
        result.kind = ExperimentKind::ContourSweep;
    else if (result.axis_columns == std::vector<std::string>{"ratio", "coop"})
        result.kind = ExperimentKind::SplitSweep;
    else if (result.axis_columns.empty())
        result.kind = ExperimentKind::Point;
    else
        throw std::invalid_argument("csv: unrecognized axis columns");

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (cells.size() != header.size())
            throw std::invalid_argument("csv: ragged row");
        SweepRecord r;
        for (std::size_t i = 0; i < header.size(); ++i) {
            const std::string &name = header[i];
            const std::string &value = cells[i];
            if (name == "scheme") r.scheme_tag = value;
            else if (name == "coop") r.coop = std::stoi(value);
            else if (name == "elements") r.elements = std::stoi(value);
            else if (name == "pt_dbm") r.pt_dbm = std::stod(value);
            else if (name == "rth") r.rth = std::stod(value);
            else if (name == "ratio") r.ratio = std::stod(value);
            else if (name == "p_out_edge") r.p_out_edge = std::stod(value);
            else if (name == "p_out_center_mean")
                r.p_out_center_mean = std::stod(value);
            else if (name == "rate_edge") r.rate_edge = std::stod(value);
            else if (name == "rate_center_sum")
                r.rate_center_sum = std::stod(value);
            else if (name == "outage_sum_rate")
                r.outage_sum_rate = std::stod(value);
            else if (name == "energy_efficiency")
                r.energy_efficiency = std::stod(value);
            else if (name == "stderr_p_out_edge")
                r.stderr_p_out_edge = std::stod(value);
            else if (name == "stderr_rate_edge")
                r.stderr_rate_edge = std::stod(value);
            else if (name == "stderr_outage_sum_rate")
                r.stderr_outage_sum_rate = std::stod(value);
            else if (name == "stderr_energy_efficiency")
                r.stderr_energy_efficiency = std::stod(value);
            else if (name == "n_trials") r.n_trials = std::stoll(value);
            else if (name == "seed") r.seed = std::stoull(value);
            else
                throw std::invalid_argument("csv: unknown column '" + name +
                                            "'");
        }
        result.records.push_back(std::move(r));
    }
    return result;
}

}  // namespace riscomp
