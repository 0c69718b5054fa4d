// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "riscomp/channel.hpp"
#include "riscomp/pbf.hpp"
#include "riscomp/topology.hpp"

namespace riscomp {

// Effective BS->edge channel: direct path plus the surface cascade
// sum_k out_k * e^{j theta_k} * in_k. The raw form takes explicit phases
// for all-active elements; the plan form skips off elements. Vector
// lengths must agree.
cplx effective_channel(cplx direct, std::span<const cplx> in,
                       std::span<const double> phases,
                       std::span<const cplx> out);
cplx effective_channel(cplx direct, std::span<const cplx> in,
                       std::span<const cplx> out, const PhasePlan &plan,
                       int cell);

// Post-combining SINRs for one trial under power-domain multiplexing.
struct SinrBundle {
    double edge = 0.0;                // edge signal at the edge user
    double y_edge = 0.0;              // inter-cell aggregate at the edge user
    std::vector<double> center_sic;   // edge signal decoded at center user i
    std::vector<double> center_own;   // center user i's own signal after SIC
    std::vector<double> y_center;     // inter-cell aggregate at center user i
};

// Evaluates the SINR expressions for one realization. All three ratios
// follow the printed forms verbatim, for every cell, cooperative or not.
//
// Edge user, non-coherent combining over the cooperative set J:
//   gamma_e = zeta * P * sum_{j in J} |H_j|^2
//             / ((1 - zeta) * P * sum_{j in J} |H_j|^2 + Y_f + sigma^2)
//   Y_f     = P * sum_{m in I \ J} |H_m|^2
// where H_m is the effective BS_m -> edge channel (direct + own cascade).
//
// Center user of cell i (direct paths only; the surfaces sit at the cell
// edge and do not reach the center users):
//   gamma_sic = zeta * P * sum_{j in J} |h_{j,c_i}|^2
//               / ((1 - zeta) * P * sum_{j in J} |h_{j,c_i}|^2
//                  + Y_i + sigma^2)
//   gamma_own = (1 - zeta) * P * |h_{i,c_i}|^2
//               / ((1 - zeta) * P * sum_{j in J, j != i} |h_{j,c_i}|^2
//                  + Y_i + sigma^2)
//   Y_i       = P * sum_{m in I \ J} |h_{m,c_i}|^2
// The index sets are literal: for a non-cooperative cell i, Y_i contains
// the m = i term, so that cell's center user sees its own BS as
// interference. This asymmetry is part of the printed model.
SinrBundle compute_sinrs(const NetworkTopology &topo,
                         const ChannelRealization &ch, const PhasePlan &plan);

// Shannon rate log2(1 + sinr) in bps/Hz, stable for tiny sinr.
double rate_bps_hz(double sinr);

// Per-trial rates and outage indicators. Success requires the achieved
// SINR to strictly exceed the threshold; equality counts as outage. A
// center user must clear both the SIC stage (edge threshold) and the own
// stage (center threshold).
struct TrialOutcome {
    double rate_edge = 0.0;
    std::vector<double> rate_center;    // per cell
    bool outage_edge = true;
    std::vector<bool> outage_center;    // per cell
};

TrialOutcome evaluate_trial(const NetworkTopology &topo,
                            const ChannelRealization &ch,
                            const PhasePlan &plan);

// Orthogonal-access baseline on the same realization: no surfaces, two
// equal resource halves. In the edge half every cooperative BS sends the
// edge signal at full power and non-cooperative BSs interfere at full
// power; in the center half every BS serves its own center user at full
// power, so center user i sees all other BSs as interference. Rates are
// halved and thresholds map as gamma = 2^(2 * R_th) - 1 to keep target
// rates comparable.
TrialOutcome evaluate_trial_oma(const NetworkTopology &topo,
                                const ChannelRealization &ch);

}  // namespace riscomp
