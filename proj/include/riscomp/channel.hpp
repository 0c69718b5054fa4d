// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "riscomp/rng.hpp"
#include "riscomp/topology.hpp"

namespace riscomp {

using cplx = std::complex<double>;

// Large-scale gain rho_o / d^alpha. Requires d > 0, alpha >= 0, rho_o > 0.
double path_gain(double distance_m, double exponent, double rho_o);

// One Rayleigh flat-fading coefficient sqrt(gain) * v with v ~ CN(0, 1),
// so E|h|^2 = gain.
cplx rayleigh_scalar(double gain, RandomStream &rs);

// Uniform linear array response with unit-magnitude entries. Element k
// (0-based) equals exp(j * k * pi * sin(omega)). Requires elements >= 1.
std::vector<cplx> los_steering(int elements, double omega);

// Rician fading vector with per-entry mean power `gain`:
//   sqrt(gain) * (sqrt(kappa/(1+kappa)) * a(omega)
//                 + sqrt(1/(1+kappa)) * w),   w ~ CN(0, I).
// kappa is the linear K-factor, kappa >= 0.
std::vector<cplx> rician_vector(int elements, double gain, double kappa,
                                double omega, RandomStream &rs);

// All small-scale channel coefficients for one Monte Carlo trial.
//
// direct(bs, user) holds the direct path from BS `bs` to a user: indices
// 0..cells-1 are the center users of those cells, index == cells is the
// shared edge user. The RIS vectors exist once per cell and carry only the
// own-BS feed; signals do not reflect off foreign surfaces.
struct ChannelRealization {
    int cells = 0;
    int ris_elements = 0;
    std::int64_t trial = 0;
    std::vector<cplx> direct;        // cells x (cells + 1)
    std::vector<cplx> bs_to_ris;     // cells x ris_elements
    std::vector<cplx> ris_to_edge;   // cells x ris_elements

    cplx direct_center(int bs, int cell) const {
        return direct[static_cast<std::size_t>(bs) * (cells + 1) + cell];
    }
    cplx direct_edge(int bs) const {
        return direct[static_cast<std::size_t>(bs) * (cells + 1) + cells];
    }
    std::span<const cplx> ris_in(int cell) const {
        return {bs_to_ris.data() + static_cast<std::size_t>(cell) * ris_elements,
                static_cast<std::size_t>(ris_elements)};
    }
    std::span<const cplx> ris_out(int cell) const {
        return {ris_to_edge.data() + static_cast<std::size_t>(cell) * ris_elements,
                static_cast<std::size_t>(ris_elements)};
    }
};

// Draws every link for one trial. Each link consumes its own stream
// addressed by (seed, trial, link tag), so draws are independent across
// links and trials and identical no matter which thread runs the trial.
ChannelRealization realize_channels(const NetworkTopology &topo,
                                    std::int64_t trial, std::uint64_t seed);

// Structured text dump of one realization, 17 significant digits per
// component, for debugging and regression diffs.
std::string dump_realization(const ChannelRealization &r,
                             const NetworkTopology &topo);

}  // namespace riscomp
