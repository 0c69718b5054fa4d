// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "riscomp/config.hpp"
#include "riscomp/montecarlo.hpp"

namespace riscomp {

inline constexpr const char *kVersionTag = "riscomp-0.1.0";

enum class ExperimentKind : std::uint8_t {
    CoopSweep,      // EE vs. number of cooperative BSs
    ElementsSweep,  // EE vs. surface element count
    PowerSweep,     // outage sum rate vs. transmit power
    ContourSweep,   // EE over (transmit power, rate threshold)
    SplitSweep,     // outage sum rate vs. cancel/enhance split ratio
    Point,          // single configuration
};

std::string to_string(ExperimentKind k);

// Declarative description of one experiment run.
struct SweepSpec {
    ExperimentKind kind = ExperimentKind::Point;
    std::vector<int> coop_grid;
    std::vector<int> elements_grid;
    std::vector<double> pt_dbm_grid;
    std::vector<double> rth_grid;    // applied to both user classes
    std::vector<double> ratio_grid;  // cancel fraction in [0, 1]
    std::vector<EvalScheme> schemes;
    std::int64_t trials = 10000;
    std::uint64_t master_seed = 1;
};

// One (grid point, scheme) result row. Axis fields hold the resolved
// values whether or not the experiment sweeps them.
struct SweepRecord {
    int coop = 0;
    int elements = 0;
    double pt_dbm = 0.0;
    double rth = 0.0;    // edge-user threshold when not swept jointly
    double ratio = -1.0;
    std::string scheme_tag;
    Estimates estimates;
    double p_out_edge = 0.0;
    double p_out_center_mean = 0.0;
    double rate_edge = 0.0;
    double rate_center_sum = 0.0;
    double outage_sum_rate = 0.0;
    double energy_efficiency = 0.0;
    double stderr_p_out_edge = 0.0;
    double stderr_rate_edge = 0.0;
    double stderr_outage_sum_rate = 0.0;
    double stderr_energy_efficiency = 0.0;
    std::int64_t n_trials = 0;
    std::uint64_t seed = 0;       // derived per-point seed
    double wall_seconds = 0.0;    // not emitted to CSV (determinism)
};

struct Provenance {
    std::uint64_t master_seed = 0;
    std::string config_hash;
    std::string version_tag;
};

struct SweepResult {
    ExperimentKind kind = ExperimentKind::Point;
    std::vector<std::string> axis_columns;  // CSV axis column names, in order
    std::vector<SweepRecord> records;       // grid-major, scheme-minor order
    Provenance provenance;
    SimConfig base_config;
};

// Per-point seed, derived from the master seed and the channel-shaping
// parameters of the resolved point (cell count, cooperative count, element
// count, distances, exponents, reference gain, Rician factor, geometry
// seed). Transmit power, thresholds, and the surface scheme are excluded
// on purpose: points that differ only in those share fading realizations,
// so scheme comparisons are paired and a standalone point run reproduces
// the matching sweep cell exactly.
std::uint64_t derive_point_seed(std::uint64_t master_seed,
                                const SimConfig &resolved_point);

// Builds the trial-run options implied by a configuration's estimator and
// accounting switches, with the worker count supplied by the caller.
RunOptions make_run_options(const SimConfig &cfg, int workers);

// Scheme lists used by the stock experiments.
std::vector<EvalScheme> schemes_ee();         // none, random, eo, ec
std::vector<EvalScheme> schemes_elements();   // ee set + single-cell ec
std::vector<EvalScheme> schemes_power();      // ee set + single-cell ec + oma
EvalScheme scheme_by_tag(const std::string &tag);  // CLI lookup, throws

// Stock grids (anchor values bracketed by the defaults).
std::vector<int> default_coop_grid();        // 1..6
std::vector<int> default_elements_grid();    // 10, 30, ..., 150
std::vector<double> default_pt_grid();       // -10..20 dBm step 5
std::vector<double> default_rth_grid();      // 0.25, 0.5, 1, 1.5, 2
std::vector<double> default_ratio_grid();    // 0, 0.25, 0.5, 0.75, 1
std::vector<int> default_split_coop_list();  // 1, 3, 6

// Generic engine: validates the sweep definition, resolves one configuration per grid
// point, and runs every scheme on it. Throws std::invalid_argument on an
// empty or unsorted grid, an empty scheme list, trials < 1, or a
// cooperative count outside [1, cells].
SweepResult run_sweep(const SimConfig &base, const SweepSpec &spec,
                      const RunOptions &options);

// Figure-shaped wrappers over run_sweep.
SweepResult sweep_coop(const SimConfig &base, const std::vector<int> &coop_grid,
                       const std::vector<EvalScheme> &schemes,
                       std::int64_t trials, std::uint64_t seed,
                       const RunOptions &options);
SweepResult sweep_elements(const SimConfig &base,
                           const std::vector<int> &elements_grid,
                           const std::vector<EvalScheme> &schemes,
                           std::int64_t trials, std::uint64_t seed,
                           const RunOptions &options);
SweepResult sweep_power(const SimConfig &base,
                        const std::vector<double> &pt_grid,
                        const std::vector<EvalScheme> &schemes,
                        std::int64_t trials, std::uint64_t seed,
                        const RunOptions &options);
SweepResult sweep_contour(const SimConfig &base,
                          const std::vector<double> &pt_grid,
                          const std::vector<double> &rth_grid,
                          std::int64_t trials, std::uint64_t seed,
                          const RunOptions &options);
SweepResult sweep_split(const SimConfig &base,
                        const std::vector<double> &ratio_grid,
                        const std::vector<int> &coop_list,
                        std::int64_t trials, std::uint64_t seed,
                        const RunOptions &options);
SweepResult run_point(const SimConfig &config, const EvalScheme &scheme,
                      std::int64_t trials, std::uint64_t seed,
                      const RunOptions &options);

// CSV serialization: axis columns, then
//   scheme, p_out_edge, p_out_center_mean, rate_edge, rate_center_sum,
//   outage_sum_rate, energy_efficiency, stderr_p_out_edge,
//   stderr_rate_edge, stderr_outage_sum_rate, stderr_energy_efficiency,
//   n_trials, seed
// with floating point at 10 significant digits. Byte-stable for a fixed
// result.
std::string to_csv(const SweepResult &result);

// Parses a CSV produced by to_csv back into records (estimates are not
// recoverable; axis and metric columns only). Used by the replot path.
SweepResult parse_csv(const std::string &csv_text);

}  // namespace riscomp
