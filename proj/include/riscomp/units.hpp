// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

namespace riscomp {

inline double dbm_to_watts(double dbm) {
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

inline double watts_to_dbm(double watts) {
    return 10.0 * std::log10(watts) + 30.0;
}

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

inline double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

// Thermal noise power over `bandwidth_hz` at the standard -174 dBm/Hz
// density.
inline double noise_power_watts(double bandwidth_hz) {
    return dbm_to_watts(-174.0 + 10.0 * std::log10(bandwidth_hz));
}

}  // namespace riscomp
