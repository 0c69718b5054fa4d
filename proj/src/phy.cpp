// SPDX-License-Identifier: Apache-2.0
#include "riscomp/phy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace riscomp {

cplx effective_channel(cplx direct, std::span<const cplx> in,
                       std::span<const double> phases,
                       std::span<const cplx> out) {
    if (in.size() != phases.size() || in.size() != out.size())
        throw std::invalid_argument(
            "effective_channel: vector lengths must match");
    cplx h = direct;
    for (std::size_t k = 0; k < in.size(); ++k)
        h += out[k] * std::polar(1.0, phases[k]) * in[k];
    return h;
}

cplx effective_channel(cplx direct, std::span<const cplx> in,
                       std::span<const cplx> out, const PhasePlan &plan,
                       int cell) {
    if (in.size() != out.size() ||
        in.size() != static_cast<std::size_t>(plan.ris_elements))
        throw std::invalid_argument(
            "effective_channel: vector lengths must match");
    cplx h = direct;
    for (int k = 0; k < plan.ris_elements; ++k) {
        if (!plan.active(cell, k)) continue;
        const auto ku = static_cast<std::size_t>(k);
        h += out[ku] * std::polar(1.0, plan.phase(cell, k)) * in[ku];
    }
    return h;
}

SinrBundle compute_sinrs(const NetworkTopology &topo,
                         const ChannelRealization &ch, const PhasePlan &plan) {
    const double p = topo.power.pt_watts();
    const double zeta = topo.zeta;
    const double sigma2 = topo.power.noise_watts();

    std::vector<double> h2_edge(static_cast<std::size_t>(topo.cells));
    for (int m = 0; m < topo.cells; ++m) {
        const cplx h = effective_channel(ch.direct_edge(m), ch.ris_in(m),
                                         ch.ris_out(m), plan, m);
        h2_edge[static_cast<std::size_t>(m)] = std::norm(h);
    }

    SinrBundle b;
    double coop_power = 0.0;
    double y_f = 0.0;
    for (int m = 0; m < topo.cells; ++m) {
        if (topo.is_coop(m))
            coop_power += p * h2_edge[static_cast<std::size_t>(m)];
        else
            y_f += p * h2_edge[static_cast<std::size_t>(m)];
    }
    b.edge = zeta * coop_power /
             ((1.0 - zeta) * coop_power + y_f + sigma2);
    b.y_edge = y_f;

    b.center_sic.resize(static_cast<std::size_t>(topo.cells));
    b.center_own.resize(static_cast<std::size_t>(topo.cells));
    b.y_center.resize(static_cast<std::size_t>(topo.cells));
    for (int i = 0; i < topo.cells; ++i) {
        double coop_sum = 0.0;    // sum over j in J of P |h_{j,c_i}|^2
        double other_sum = 0.0;   // same, excluding j = i
        double y_i = 0.0;
        for (int m = 0; m < topo.cells; ++m) {
            const double q = p * std::norm(ch.direct_center(m, i));
            if (topo.is_coop(m)) {
                coop_sum += q;
                if (m != i) other_sum += q;
            } else {
                y_i += q;
            }
        }
        const double own = p * std::norm(ch.direct_center(i, i));
        const auto iu = static_cast<std::size_t>(i);
        b.center_sic[iu] = zeta * coop_sum /
                           ((1.0 - zeta) * coop_sum + y_i + sigma2);
        b.center_own[iu] = (1.0 - zeta) * own /
                           ((1.0 - zeta) * other_sum + y_i + sigma2);
        b.y_center[iu] = y_i;
    }
    return b;
}

double rate_bps_hz(double sinr) {
    return std::log1p(sinr) / std::numbers::ln2;
}

TrialOutcome evaluate_trial(const NetworkTopology &topo,
                            const ChannelRealization &ch,
                            const PhasePlan &plan) {
    const SinrBundle b = compute_sinrs(topo, ch, plan);
    TrialOutcome out;
    out.rate_edge = rate_bps_hz(b.edge);
    out.outage_edge = !(b.edge > topo.thresholds.gamma_edge);
    out.rate_center.resize(static_cast<std::size_t>(topo.cells));
    out.outage_center.resize(static_cast<std::size_t>(topo.cells));
    for (int i = 0; i < topo.cells; ++i) {
        const auto iu = static_cast<std::size_t>(i);
        out.rate_center[iu] = rate_bps_hz(b.center_own[iu]);
        out.outage_center[iu] =
            !(b.center_sic[iu] > topo.thresholds.gamma_edge &&
              b.center_own[iu] > topo.thresholds.gamma_center);
    }
    return out;
}

TrialOutcome evaluate_trial_oma(const NetworkTopology &topo,
                                const ChannelRealization &ch) {
    const double p = topo.power.pt_watts();
    const double sigma2 = topo.power.noise_watts();
    const double gamma_edge = std::exp2(2.0 * topo.thresholds.rate_edge) - 1.0;
    const double gamma_center =
        std::exp2(2.0 * topo.thresholds.rate_center) - 1.0;

    TrialOutcome out;
    double signal = 0.0;
    double interference = 0.0;
    for (int m = 0; m < topo.cells; ++m) {
        const double q = p * std::norm(ch.direct_edge(m));
        if (topo.is_coop(m))
            signal += q;
        else
            interference += q;
    }
    const double sinr_edge = signal / (interference + sigma2);
    out.rate_edge = 0.5 * rate_bps_hz(sinr_edge);
    out.outage_edge = !(sinr_edge > gamma_edge);

    out.rate_center.resize(static_cast<std::size_t>(topo.cells));
    out.outage_center.resize(static_cast<std::size_t>(topo.cells));
    for (int i = 0; i < topo.cells; ++i) {
        double own = 0.0;
        double other = 0.0;
        for (int m = 0; m < topo.cells; ++m) {
            const double q = p * std::norm(ch.direct_center(m, i));
            if (m == i)
                own = q;
            else
                other += q;
        }
        const double sinr = own / (other + sigma2);
        const auto iu = static_cast<std::size_t>(i);
        out.rate_center[iu] = 0.5 * rate_bps_hz(sinr);
        out.outage_center[iu] = !(sinr > gamma_center);
    }
    return out;
}

}  // namespace riscomp
