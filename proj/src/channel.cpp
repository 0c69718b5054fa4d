// SPDX-License-Identifier: Apache-2.0
#include "riscomp/channel.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace riscomp {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

}  // namespace

double path_gain(double distance_m, double exponent, double rho_o) {
    if (!(distance_m > 0.0))
        throw std::invalid_argument("path_gain: distance must be positive");
    if (!(rho_o > 0.0))
        throw std::invalid_argument("path_gain: rho_o must be positive");
    return rho_o / std::pow(distance_m, exponent);
}

cplx rayleigh_scalar(double gain, RandomStream &rs) {
    return std::sqrt(gain) * rs.next_cn();
}

std::vector<cplx> los_steering(int elements, double omega) {
    if (elements < 1)
        throw std::invalid_argument("los_steering: element count must be >= 1");
    std::vector<cplx> a(static_cast<std::size_t>(elements));
    const double step = kPi * std::sin(omega);
    for (int k = 0; k < elements; ++k)
        a[static_cast<std::size_t>(k)] = std::polar(1.0, step * k);
    return a;
}

std::vector<cplx> rician_vector(int elements, double gain, double kappa,
                                double omega, RandomStream &rs) {
    if (elements < 1)
        throw std::invalid_argument("rician_vector: element count must be >= 1");
    if (!(kappa >= 0.0))
        throw std::invalid_argument("rician_vector: kappa must be >= 0");
    std::vector<cplx> v = los_steering(elements, omega);
    const double amp = std::sqrt(gain);
    const double los = std::sqrt(kappa / (1.0 + kappa));
    const double nlos = std::sqrt(1.0 / (1.0 + kappa));
    for (int k = 0; k < elements; ++k) {
        auto &e = v[static_cast<std::size_t>(k)];
        e = amp * (los * e + nlos * rs.next_cn());
    }
    return v;
}

ChannelRealization realize_channels(const NetworkTopology &topo,
                                    std::int64_t trial, std::uint64_t seed) {
    ChannelRealization r;
    r.cells = topo.cells;
    r.ris_elements = topo.ris_elements;
    r.trial = trial;
    const int users = topo.cells + 1;
    r.direct.resize(static_cast<std::size_t>(topo.cells) * users);

    const auto counter = static_cast<std::uint64_t>(trial);
    for (int bs = 0; bs < topo.cells; ++bs) {
        for (int cell = 0; cell < topo.cells; ++cell) {
            RandomStream rs(seed, counter, streamtag::direct(bs, cell));
            r.direct[static_cast<std::size_t>(bs) * users + cell] =
                rayleigh_scalar(topo.gain_center(bs, cell), rs);
        }
        RandomStream rs(seed, counter, streamtag::direct(bs, topo.cells));
        r.direct[static_cast<std::size_t>(bs) * users + topo.cells] =
            rayleigh_scalar(topo.gain_edge_direct(bs), rs);
    }

    if (topo.ris_elements > 0) {
        r.bs_to_ris.resize(static_cast<std::size_t>(topo.cells) *
                           topo.ris_elements);
        r.ris_to_edge.resize(static_cast<std::size_t>(topo.cells) *
                             topo.ris_elements);
        for (int cell = 0; cell < topo.cells; ++cell) {
            RandomStream in(seed, counter, streamtag::bs_ris(cell));
            RandomStream out(seed, counter, streamtag::ris_edge(cell));
            auto vin = rician_vector(topo.ris_elements, topo.gain_bs_ris(cell),
                                     topo.kappa, topo.aoa_bs_ris[cell], in);
            auto vout =
                rician_vector(topo.ris_elements, topo.gain_ris_edge(cell),
                              topo.kappa, topo.aoa_ris_edge[cell], out);
            std::copy(vin.begin(), vin.end(),
                      r.bs_to_ris.begin() +
                          static_cast<std::size_t>(cell) * topo.ris_elements);
            std::copy(vout.begin(), vout.end(),
                      r.ris_to_edge.begin() +
                          static_cast<std::size_t>(cell) * topo.ris_elements);
        }
    }
    return r;
}

std::string dump_realization(const ChannelRealization &r,
                             const NetworkTopology &topo) {
    std::ostringstream out;
    char buf[160];
    auto put = [&](const char *label, cplx v) {
        std::snprintf(buf, sizeof(buf), "%s = %.17g%+.17gj\n", label,
                      v.real(), v.imag());
        out << buf;
    };
    out << "trial " << r.trial << "\n";
    char label[64];
    for (int bs = 0; bs < topo.cells; ++bs) {
        for (int cell = 0; cell < topo.cells; ++cell) {
            std::snprintf(label, sizeof(label), "direct[bs%d,center%d]", bs,
                          cell);
            put(label, r.direct_center(bs, cell));
        }
        std::snprintf(label, sizeof(label), "direct[bs%d,edge]", bs);
        put(label, r.direct_edge(bs));
    }
    for (int cell = 0; cell < topo.cells && topo.ris_elements > 0; ++cell) {
        auto in = r.ris_in(cell);
        auto out_v = r.ris_out(cell);
        for (int k = 0; k < topo.ris_elements; ++k) {
            std::snprintf(label, sizeof(label), "bs_to_ris[cell%d,%d]", cell,
                          k);
            put(label, in[static_cast<std::size_t>(k)]);
            std::snprintf(label, sizeof(label), "ris_to_edge[cell%d,%d]", cell,
                          k);
            put(label, out_v[static_cast<std::size_t>(k)]);
        }
    }
    return out.str();
}

}  // namespace riscomp
