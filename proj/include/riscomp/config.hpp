// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

namespace riscomp {

// Link distances in meters. One value per link class; the network is
// symmetric across cells.
struct Distances {
    double bs_center = 50.0;            // BS to its own center user
    double bs_edge = 150.0;             // any BS to the edge user, direct path
    double bs_foreign_center = 200.0;   // BS to another cell's center user
    double bs_ris = 75.0;               // BS to its own RIS
    double ris_edge = 75.0;             // RIS to the edge user

    bool operator==(const Distances &) const = default;
};

// Path loss exponents per link class.
struct Exponents {
    double ris = 2.7;      // both RIS hops
    double center = 3.0;   // serving BS to its own center user
    double edge = 3.5;     // cooperative BS to edge user, direct path
    double ici = 4.0;      // inter-cell interference paths

    bool operator==(const Exponents &) const = default;
};

// Full simulation configuration. Field defaults reproduce the reference
// six-cell deployment; a config file or CLI flags may override any subset.
struct SimConfig {
    int cells = 6;              // I
    int coop = 4;               // J, cooperative set is cells 0..J-1
    int ris_elements = 70;      // K
    double pt_dbm = 0.0;        // per-BS transmit power
    double zeta = 0.7;          // NOMA power fraction given to the edge user
    double p_q_dbm = 30.0;      // static circuit power per BS
    double p_ele_dbm = 5.0;     // control power per RIS element
    double lambda = 0.4;        // power amplifier efficiency
    double bandwidth_hz = 10e6;
    double kappa_db = 3.0;      // Rician K-factor on RIS hops
    double rate_center = 1.0;   // target rate, center users, bits/s/Hz
    double rate_edge = 0.5;     // target rate, edge user, bits/s/Hz
    Distances distances;
    Exponents exponents;
    std::uint64_t topology_seed = 8675309ull;

    // Estimator and accounting switches.
    std::string outage_composition = "mean";  // "mean" or "per_trial"
    bool charge_all_active_ris = false;
    bool eo_noncoop_random = false;

    bool operator==(const SimConfig &) const = default;
};

// Parses a JSON config file. Unknown keys are rejected; missing keys keep
// their defaults. Throws std::invalid_argument naming the offending key.
SimConfig load_config_file(const std::string &path);

// Same, from an in-memory JSON document.
SimConfig parse_config(const std::string &json_text);

// Field-by-field validation. Throws std::invalid_argument naming the key.
void validate_config(const SimConfig &cfg);

// Canonical JSON text with a fixed field order, 17 significant digits.
std::string config_to_json(const SimConfig &cfg);

// Hash of the canonical form, stable across runs and platforms.
std::uint64_t config_hash(const SimConfig &cfg);

}  // namespace riscomp
