// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "riscomp/config.hpp"

using namespace riscomp;

namespace {

// Returns the exception message for a call expected to throw, or "" if it
// did not throw. Lets tests assert that the offending key is named.
template <typename F>
std::string error_of(F &&f) {
    try {
        f();
    } catch (const std::invalid_argument &e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("defaults carry the reference operating point") {
    SimConfig cfg;
    CHECK(cfg.cells == 6);
    CHECK(cfg.coop == 4);
    CHECK(cfg.ris_elements == 70);
    CHECK(cfg.pt_dbm == 0.0);
    CHECK(cfg.zeta == 0.7);
    CHECK(cfg.p_q_dbm == 30.0);
    CHECK(cfg.p_ele_dbm == 5.0);
    CHECK(cfg.lambda == 0.4);
    CHECK(cfg.bandwidth_hz == 10e6);
    CHECK(cfg.kappa_db == 3.0);
    CHECK(cfg.rate_center == 1.0);
    CHECK(cfg.rate_edge == 0.5);
    CHECK(cfg.distances.bs_center == 50.0);
    CHECK(cfg.distances.bs_edge == 150.0);
    CHECK(cfg.distances.bs_foreign_center == 200.0);
    CHECK(cfg.distances.bs_ris == 75.0);
    CHECK(cfg.distances.ris_edge == 75.0);
    CHECK(cfg.exponents.ris == 2.7);
    CHECK(cfg.exponents.center == 3.0);
    CHECK(cfg.exponents.edge == 3.5);
    CHECK(cfg.exponents.ici == 4.0);
    CHECK(cfg.outage_composition == "mean");
    CHECK_FALSE(cfg.charge_all_active_ris);
    CHECK_FALSE(cfg.eo_noncoop_random);
    CHECK_NOTHROW(validate_config(cfg));
}

TEST_CASE("canonical json round trip is the identity") {
    SimConfig cfg;
    cfg.coop = 3;
    cfg.pt_dbm = -7.5;
    cfg.kappa_db = 10.0;
    cfg.distances.bs_ris = 62.5;
    cfg.exponents.ici = 4.25;
    cfg.topology_seed = 12345;
    cfg.outage_composition = "per_trial";
    cfg.charge_all_active_ris = true;

    const SimConfig back = parse_config(config_to_json(cfg));
    CHECK(back == cfg);
    // Serialization of the round-tripped value is byte-identical.
    CHECK(config_to_json(back) == config_to_json(cfg));
}

TEST_CASE("partial configs overlay defaults") {
    const SimConfig cfg = parse_config(
        R"({"coop": 2, "pt_dbm": 10.0, "distances": {"bs_ris": 80.0}})");
    CHECK(cfg.coop == 2);
    CHECK(cfg.pt_dbm == 10.0);
    CHECK(cfg.distances.bs_ris == 80.0);
    // Untouched keys keep their defaults.
    CHECK(cfg.cells == 6);
    CHECK(cfg.distances.bs_center == 50.0);
}

TEST_CASE("unknown keys are rejected by name") {
    CHECK(error_of([] { parse_config(R"({"coopp": 3})"); })
              .find("coopp") != std::string::npos);
    CHECK(error_of([] { parse_config(R"({"distances": {"bs_moon": 1}})"); })
              .find("distances.bs_moon") != std::string::npos);
    CHECK(error_of([] { parse_config(R"({"rho_o": 1e-3})"); })
              .find("rho_o") != std::string::npos);
}

TEST_CASE("type errors are rejected by name") {
    CHECK(error_of([] { parse_config(R"({"cells": "six"})"); })
              .find("cells") != std::string::npos);
    CHECK(error_of([] { parse_config(R"({"zeta": true})"); })
              .find("zeta") != std::string::npos);
    CHECK(error_of([] { parse_config(R"({"topology_seed": -4})"); })
              .find("topology_seed") != std::string::npos);
    CHECK(error_of([] { parse_config("[1,2]"); }).find("<root>") !=
          std::string::npos);
    CHECK(error_of([] { parse_config("{oops"); }).find("parse error") !=
          std::string::npos);
}

TEST_CASE("validation bounds name the offending key") {
    auto withf = [](auto mutate) {
        SimConfig cfg;
        mutate(cfg);
        return error_of([&] { validate_config(cfg); });
    };
    CHECK(withf([](SimConfig &c) { c.coop = 7; }).find("coop") !=
          std::string::npos);
    CHECK(withf([](SimConfig &c) { c.coop = 0; }).find("coop") !=
          std::string::npos);
    CHECK(withf([](SimConfig &c) { c.cells = 0; }).find("cells") !=
          std::string::npos);
    CHECK(withf([](SimConfig &c) { c.ris_elements = -1; })
              .find("ris_elements") != std::string::npos);
    // Power split must leave the edge user with the larger share.
    CHECK(withf([](SimConfig &c) { c.zeta = 0.5; }).find("zeta") !=
          std::string::npos);
    CHECK(withf([](SimConfig &c) { c.zeta = 1.0; }).find("zeta") !=
          std::string::npos);
    CHECK(withf([](SimConfig &c) { c.lambda = 0.0; }).find("lambda") !=
          std::string::npos);
    CHECK(withf([](SimConfig &c) { c.lambda = 1.5; }).find("lambda") !=
          std::string::npos);
    CHECK(withf([](SimConfig &c) { c.bandwidth_hz = 0.0; })
              .find("bandwidth_hz") != std::string::npos);
    CHECK(withf([](SimConfig &c) { c.rate_edge = 0.0; }).find("rate_edge") !=
          std::string::npos);
    CHECK(withf([](SimConfig &c) { c.distances.ris_edge = -5; })
              .find("distances.ris_edge") != std::string::npos);
    CHECK(withf([](SimConfig &c) { c.exponents.center = 1.9; })
              .find("exponents.center") != std::string::npos);
    CHECK(withf([](SimConfig &c) { c.outage_composition = "median"; })
              .find("outage_composition") != std::string::npos);
}

TEST_CASE("zeta above one half is accepted down to the boundary") {
    SimConfig cfg;
    cfg.zeta = 0.5000001;
    CHECK_NOTHROW(validate_config(cfg));
    cfg.zeta = 0.9999999;
    CHECK_NOTHROW(validate_config(cfg));
}

TEST_CASE("config hash tracks content") {
    SimConfig a;
    SimConfig b;
    CHECK(config_hash(a) == config_hash(b));
    b.pt_dbm = 5.0;
    CHECK(config_hash(a) != config_hash(b));
    b.pt_dbm = 0.0;
    b.eo_noncoop_random = true;
    CHECK(config_hash(a) != config_hash(b));
}

TEST_CASE("load_config_file reads and validates") {
    const std::string path = "test_config_tmp.json";
    {
        std::ofstream out(path);
        out << R"({"coop": 5, "ris_elements": 30})";
    }
    const SimConfig cfg = load_config_file(path);
    CHECK(cfg.coop == 5);
    CHECK(cfg.ris_elements == 30);
    std::remove(path.c_str());

    CHECK_THROWS_AS((void)load_config_file("no_such_file.json"),
                    std::invalid_argument);
}
