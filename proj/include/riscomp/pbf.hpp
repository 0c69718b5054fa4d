// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "riscomp/channel.hpp"
#include "riscomp/rng.hpp"
#include "riscomp/topology.hpp"

namespace riscomp {

// Per-element operating mode of a reflecting surface.
enum class ElementMode : std::uint8_t {
    EnhanceObjective,  // align cascade with the direct path
    CancelObjective,   // oppose the direct path
    Random,            // phase drawn uniformly from [-pi, pi)
    Off,               // element absorbs; contributes nothing
};

// Network-wide surface configuration.
enum class Scheme : std::uint8_t {
    None,    // all surfaces off
    Random,  // all elements random on every surface
    Enhance, // cooperative cells enhance; the rest sit off (or random; see
             // RunOptions::eo_noncoop_random)
    Cancel,  // cooperative cells enhance, non-cooperative cells cancel
};

std::string to_string(ElementMode m);
std::string to_string(Scheme s);

// Wraps y into [-pi, pi).
double wrap_phase(double y);

// Closed-form per-element phases for the edge-user cascade of one cell.
// cascade_element is the product out_k * in_k of the two hop coefficients.
// Enhance aligns the cascade term with the direct BS->edge path:
//   theta_k = wrap(arg(direct) - arg(cascade_element));
// Cancel points the term the opposite way: wrap(enhance + pi).
// A zero cascade element is degenerate (measure-zero): the phase is 0 and
// *degenerate, when non-null, is set.
double eo_phase(cplx direct, cplx cascade_element, bool *degenerate = nullptr);
double co_phase(cplx direct, cplx cascade_element, bool *degenerate = nullptr);

// Mode assignment for every element of every surface. Row = cell,
// ris_elements entries per row.
struct ModeMap {
    int cells = 0;
    int ris_elements = 0;
    std::vector<ElementMode> modes;  // cells x ris_elements

    ElementMode mode(int cell, int k) const {
        return modes[static_cast<std::size_t>(cell) * ris_elements + k];
    }
    ElementMode &mode(int cell, int k) {
        return modes[static_cast<std::size_t>(cell) * ris_elements + k];
    }
};

// Builds the mode map for a scheme. A split_ratio in [0, 1] overrides the
// scheme's per-surface uniformity: on EVERY surface the first
// floor(split_ratio * K) elements (lowest indices) cancel and the
// remainder enhance, regardless of cell cooperation. split_ratio < 0
// selects the pure scheme layout; values above 1 are rejected.
ModeMap assign_modes(const NetworkTopology &topo, Scheme scheme,
                     double split_ratio = -1.0,
                     bool eo_noncoop_random = false);

// Concrete per-element phases plus on/off state for one trial.
struct PhasePlan {
    int cells = 0;
    int ris_elements = 0;
    std::vector<double> phases;     // cells x ris_elements, wrapped
    std::vector<std::uint8_t> on;   // 1 = reflecting, 0 = off

    double phase(int cell, int k) const {
        return phases[static_cast<std::size_t>(cell) * ris_elements + k];
    }
    bool active(int cell, int k) const {
        return on[static_cast<std::size_t>(cell) * ris_elements + k] != 0;
    }
    // Unit-modulus reflection coefficient, or 0 when the element is off.
    cplx reflection(int cell, int k) const {
        return active(cell, k) ? std::polar(1.0, phase(cell, k)) : cplx{0.0, 0.0};
    }
    // Count of reflecting elements across all surfaces.
    int active_elements() const;
};

// Turns a mode map plus the trial's channels into concrete phases.
// Random modes draw from the dedicated phase stream of (seed, trial), so
// plans are reproducible and independent of the fading draws.
PhasePlan build_phase_plan(const ModeMap &map, const ChannelRealization &ch,
                           std::int64_t trial, std::uint64_t seed);

}  // namespace riscomp
