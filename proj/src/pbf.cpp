// SPDX-License-Identifier: Apache-2.0
#include "riscomp/pbf.hpp"

#include <cmath>
#include <stdexcept>

namespace riscomp {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;

}  // namespace

std::string to_string(ElementMode m) {
    switch (m) {
        case ElementMode::EnhanceObjective: return "eo";
        case ElementMode::CancelObjective: return "co";
        case ElementMode::Random: return "random";
        case ElementMode::Off: return "off";
    }
    return "?";
}

std::string to_string(Scheme s) {
    switch (s) {
        case Scheme::None: return "none";
        case Scheme::Random: return "random";
        case Scheme::Enhance: return "eo";
        case Scheme::Cancel: return "ec";
    }
    return "?";
}

double wrap_phase(double y) {
    double w = y - kTwoPi * std::floor((y + kPi) / kTwoPi);
    // Guard the rounding edge so the contract [-pi, pi) holds exactly.
    if (w >= kPi) w -= kTwoPi;
    if (w < -kPi) w += kTwoPi;
    return w;
}

double eo_phase(cplx direct, cplx cascade_element, bool *degenerate) {
    if (degenerate) *degenerate = false;
    if (cascade_element == cplx{0.0, 0.0}) {
        if (degenerate) *degenerate = true;
        return 0.0;
    }
    return wrap_phase(std::arg(direct) - std::arg(cascade_element));
}

double co_phase(cplx direct, cplx cascade_element, bool *degenerate) {
    bool degen = false;
    const double eo = eo_phase(direct, cascade_element, &degen);
    if (degenerate) *degenerate = degen;
    if (degen) return 0.0;
    return wrap_phase(eo + kPi);
}

ModeMap assign_modes(const NetworkTopology &topo, Scheme scheme,
                     double split_ratio, bool eo_noncoop_random) {
    if (split_ratio > 1.0)
        throw std::invalid_argument("assign_modes: split_ratio must be <= 1");
    ModeMap map;
    map.cells = topo.cells;
    map.ris_elements = topo.ris_elements;
    map.modes.assign(
        static_cast<std::size_t>(topo.cells) * topo.ris_elements,
        ElementMode::Off);
    if (topo.ris_elements == 0) return map;

    if (split_ratio >= 0.0) {
        // floor with a tolerance so ratios like 0.3 * 70 land on 21, not 20
        const int n_co = static_cast<int>(
            std::floor(split_ratio * topo.ris_elements + 1e-9));
        for (int cell = 0; cell < topo.cells; ++cell)
            for (int k = 0; k < topo.ris_elements; ++k)
                map.mode(cell, k) = k < n_co ? ElementMode::CancelObjective
                                             : ElementMode::EnhanceObjective;
        return map;
    }

    for (int cell = 0; cell < topo.cells; ++cell) {
        ElementMode m = ElementMode::Off;
        switch (scheme) {
            case Scheme::None:
                m = ElementMode::Off;
                break;
            case Scheme::Random:
                m = ElementMode::Random;
                break;
            case Scheme::Enhance:
                m = topo.is_coop(cell)
                        ? ElementMode::EnhanceObjective
                        : (eo_noncoop_random ? ElementMode::Random
                                             : ElementMode::Off);
                break;
            case Scheme::Cancel:
                m = topo.is_coop(cell) ? ElementMode::EnhanceObjective
                                       : ElementMode::CancelObjective;
                break;
        }
        for (int k = 0; k < topo.ris_elements; ++k) map.mode(cell, k) = m;
    }
    return map;
}

int PhasePlan::active_elements() const {
    int n = 0;
    for (auto v : on) n += v != 0;
    return n;
}

PhasePlan build_phase_plan(const ModeMap &map, const ChannelRealization &ch,
                           std::int64_t trial, std::uint64_t seed) {
    if (map.cells != ch.cells || map.ris_elements != ch.ris_elements)
        throw std::invalid_argument(
            "build_phase_plan: mode map does not match the realization");
    PhasePlan plan;
    plan.cells = map.cells;
    plan.ris_elements = map.ris_elements;
    const auto total =
        static_cast<std::size_t>(map.cells) * map.ris_elements;
    plan.phases.assign(total, 0.0);
    plan.on.assign(total, 0);
    if (total == 0) return plan;

    RandomStream rphase(seed, static_cast<std::uint64_t>(trial),
                        streamtag::random_phases());
    for (int cell = 0; cell < map.cells; ++cell) {
        const cplx direct = ch.direct_edge(cell);
        auto in = ch.ris_in(cell);
        auto out = ch.ris_out(cell);
        for (int k = 0; k < map.ris_elements; ++k) {
            const auto idx =
                static_cast<std::size_t>(cell) * map.ris_elements + k;
            switch (map.mode(cell, k)) {
                case ElementMode::Off:
                    break;
                case ElementMode::Random:
                    plan.phases[idx] = rphase.next_uniform(-kPi, kPi);
                    plan.on[idx] = 1;
                    break;
                case ElementMode::EnhanceObjective:
                    plan.phases[idx] = eo_phase(
                        direct, out[static_cast<std::size_t>(k)] *
                                    in[static_cast<std::size_t>(k)]);
                    plan.on[idx] = 1;
                    break;
                case ElementMode::CancelObjective:
                    plan.phases[idx] = co_phase(
                        direct, out[static_cast<std::size_t>(k)] *
                                    in[static_cast<std::size_t>(k)]);
                    plan.on[idx] = 1;
                    break;
            }
        }
    }
    return plan;
}

}  // namespace riscomp
