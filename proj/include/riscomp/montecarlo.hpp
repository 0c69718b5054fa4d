// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "riscomp/pbf.hpp"
#include "riscomp/phy.hpp"
#include "riscomp/topology.hpp"

namespace riscomp {

// Access mode of an evaluation: power-domain multiplexing with a surface
// scheme, or the orthogonal baseline (which ignores the surface fields).
enum class Access : std::uint8_t { Noma, Oma };

// One scheme under evaluation.
struct EvalScheme {
    Access access = Access::Noma;
    Scheme ris = Scheme::None;
    double split_ratio = -1.0;  // >= 0 activates the split layout (Cancel)
    int coop_override = -1;     // >= 1 forces the cooperative set size
    std::string tag;            // label used in CSV output
};

struct RunOptions {
    int workers = 1;
    // "mean": outage-weighted sum rate uses (1 - p_out) * mean(rate).
    // "per_trial": uses mean over trials of (1 - outage_i) * rate_i.
    std::string per_trial_composition = "mean";
    bool eo_noncoop_random = false;    // Enhance scheme: idle cells randomize
    bool charge_all_active_ris = false;  // EE: bill every reflecting element
};

// Sample-mean estimate with its standard error.
struct UserEstimate {
    double mean = 0.0;
    double stderr_mean = 0.0;
};

// Aggregated Monte Carlo estimates for one (topology, scheme) pair.
struct Estimates {
    std::int64_t n_trials = 0;
    UserEstimate rate_edge;
    UserEstimate p_out_edge;
    std::vector<UserEstimate> rate_center;      // per cell
    std::vector<UserEstimate> p_out_center;     // per cell
    // Outage-weighted per-user goodput, both compositions:
    UserEstimate goodput_edge_mean;             // (1 - p_out) * mean rate
    UserEstimate goodput_edge_per_trial;        // mean of (1-out_i) * r_i
    std::vector<UserEstimate> goodput_center_mean;
    std::vector<UserEstimate> goodput_center_per_trial;
    // Cross moments of the per-trial composites, needed for the standard
    // errors of the network metrics under the per-trial composition.
    UserEstimate center_goodput_sum_per_trial;  // sum_i (1-out_i) * r_i
    double cov_center_sum_edge_goodput = 0.0;   // sample covariance
    int ris_active_elements = 0;                // reflecting elements, total
};

// Runs n trials of one scheme. Trials are distributed over
// options.workers threads in stride order, per-trial statistics are stored
// by trial index, and the reduction is a fixed pairwise tree, so results
// are bit-identical for any worker count.
Estimates run_trials(const NetworkTopology &topo, const EvalScheme &scheme,
                     std::int64_t n_trials, std::uint64_t seed,
                     const RunOptions &options);

// Network outage sum rate: sum over all center users of their
// outage-weighted goodput plus the edge user's goodput, counted once.
// Composition selected by options.
double outage_sum_rate(const Estimates &est, const NetworkTopology &topo,
                       const RunOptions &options);
double outage_sum_rate_stderr(const Estimates &est,
                              const NetworkTopology &topo,
                              const RunOptions &options);

// Network energy efficiency in bps/Hz/W:
//   sum_i R_out_center[i] / (P/lambda + P_Q)
//   + |J| * R_out_edge / (P/lambda + P_Q + K_billed * P_ele)
// K_billed is the elements of one surface by default; with
// charge_all_active_ris every reflecting element network-wide is billed.
double energy_efficiency(const Estimates &est, const NetworkTopology &topo,
                         const RunOptions &options);
// Delta-method standard error; the |J| edge copies are one random variable
// scaled, so their errors add coherently, not in quadrature.
double energy_efficiency_stderr(const Estimates &est,
                                const NetworkTopology &topo,
                                const RunOptions &options);

}  // namespace riscomp
