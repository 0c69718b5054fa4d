// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "riscomp/config.hpp"
#include "riscomp/units.hpp"

namespace riscomp {

// Transmit and circuit power figures for one BS, plus the receiver noise
// floor. All stored in dBm and converted on demand.
struct PowerModel {
    double pt_dbm = 0.0;
    double p_q_dbm = 30.0;
    double p_ele_dbm = 5.0;
    double amp_efficiency = 0.4;  // lambda
    double bandwidth_hz = 10e6;

    double pt_watts() const { return dbm_to_watts(pt_dbm); }
    double p_q_watts() const { return dbm_to_watts(p_q_dbm); }
    double p_ele_watts() const { return dbm_to_watts(p_ele_dbm); }
    double noise_watts() const { return noise_power_watts(bandwidth_hz); }

    bool operator==(const PowerModel &) const = default;
};

// Per-user-class target rates and the SINR thresholds they imply.
// gamma = 2^rate - 1; the stored thresholds must always satisfy that
// identity.
struct Thresholds {
    double rate_center = 1.0;
    double rate_edge = 0.5;
    double gamma_center = 1.0;
    double gamma_edge = 0.41421356237309515;

    static Thresholds from_rates(double center, double edge);

    bool operator==(const Thresholds &) const = default;
};

// Immutable geometry and radio parameters for one network instance.
//
// Cells are indexed 0..cells-1 and the cooperative set is the prefix
// {0..coop-1}. Every cell has one BS, one RIS and one center user; a single
// edge user is shared by the cooperative BSs. Angles of arrival/departure
// for the RIS hops are drawn once from topology_seed and frozen for the
// lifetime of the topology.
struct NetworkTopology {
    int cells = 6;
    int coop = 4;
    int ris_elements = 70;
    double zeta = 0.7;
    double rho_o = 1e-3;  // reference path gain at 1 m
    double kappa = 1.9952623149688795;
    PowerModel power;
    Thresholds thresholds;
    Distances distances;
    Exponents exponents;
    std::vector<double> aoa_bs_ris;    // radians, one per RIS
    std::vector<double> aoa_ris_edge;  // radians, one per RIS
    std::uint64_t topology_seed = 0;

    bool is_coop(int bs) const { return bs < coop; }

    // Distance and exponent per physical link. Direct BS-to-edge paths of
    // non-cooperative BSs and all foreign-center paths are interference
    // links and use the ici exponent.
    double dist_center(int bs, int cell) const {
        return bs == cell ? distances.bs_center : distances.bs_foreign_center;
    }
    double exp_center(int bs, int cell) const {
        return bs == cell ? exponents.center : exponents.ici;
    }
    double dist_edge(int) const { return distances.bs_edge; }
    double exp_edge(int bs) const {
        return is_coop(bs) ? exponents.edge : exponents.ici;
    }

    // Large-scale gains rho_o / d^alpha per link.
    double gain_center(int bs, int cell) const;
    double gain_edge_direct(int bs) const;
    double gain_bs_ris(int cell) const;
    double gain_ris_edge(int cell) const;

    bool operator==(const NetworkTopology &) const = default;
};

// Validates the configuration, converts dB quantities to linear form and
// draws the frozen AoA table. Throws std::invalid_argument on any
// out-of-range field.
NetworkTopology build_topology(const SimConfig &cfg);

// JSON round-trip. parse_topology(serialize_topology(t)) == t exactly.
std::string serialize_topology(const NetworkTopology &topo);
NetworkTopology parse_topology(const std::string &json_text);

}  // namespace riscomp
