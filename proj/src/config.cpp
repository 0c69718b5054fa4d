// SPDX-License-Identifier: Apache-2.0
#include "riscomp/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "riscomp/rng.hpp"

namespace riscomp {
namespace {

using nlohmann::json;

[[noreturn]] void bad_key(const std::string &key, const std::string &what) {
    throw std::invalid_argument("config key '" + key + "': " + what);
}

double get_double(const json &j, const std::string &key) {
    if (!j.is_number()) bad_key(key, "expected a number");
    return j.get<double>();
}

int get_int(const json &j, const std::string &key) {
    if (!j.is_number_integer()) bad_key(key, "expected an integer");
    return j.get<int>();
}

std::uint64_t get_u64(const json &j, const std::string &key) {
    if (!j.is_number_unsigned() && !j.is_number_integer())
        bad_key(key, "expected a non-negative integer");
    if (j.is_number_integer() && j.get<std::int64_t>() < 0)
        bad_key(key, "expected a non-negative integer");
    return j.get<std::uint64_t>();
}

bool get_bool(const json &j, const std::string &key) {
    if (!j.is_boolean()) bad_key(key, "expected a boolean");
    return j.get<bool>();
}

std::string get_string(const json &j, const std::string &key) {
    if (!j.is_string()) bad_key(key, "expected a string");
    return j.get<std::string>();
}

void parse_distances(const json &j, Distances &d) {
    if (!j.is_object()) bad_key("distances", "expected an object");
    for (const auto &[key, value] : j.items()) {
        const std::string full = "distances." + key;
        if (key == "bs_center") d.bs_center = get_double(value, full);
        else if (key == "bs_edge") d.bs_edge = get_double(value, full);
        else if (key == "bs_foreign_center")
            d.bs_foreign_center = get_double(value, full);
        else if (key == "bs_ris") d.bs_ris = get_double(value, full);
        else if (key == "ris_edge") d.ris_edge = get_double(value, full);
        else bad_key(full, "unknown key");
    }
}

void parse_exponents(const json &j, Exponents &e) {
    if (!j.is_object()) bad_key("exponents", "expected an object");
    for (const auto &[key, value] : j.items()) {
        const std::string full = "exponents." + key;
        if (key == "ris") e.ris = get_double(value, full);
        else if (key == "center") e.center = get_double(value, full);
        else if (key == "edge") e.edge = get_double(value, full);
        else if (key == "ici") e.ici = get_double(value, full);
        else bad_key(full, "unknown key");
    }
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void check_positive(double v, const std::string &key) {
    if (!(v > 0.0) || !std::isfinite(v)) bad_key(key, "must be positive");
}

void check_finite(double v, const std::string &key) {
    if (!std::isfinite(v)) bad_key(key, "must be finite");
}

}  // namespace

SimConfig parse_config(const std::string &json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string("config parse error: ") +
                                    e.what());
    }
    if (!doc.is_object())
        throw std::invalid_argument("config key '<root>': expected an object");

    SimConfig cfg;
    for (const auto &[key, value] : doc.items()) {
        if (key == "cells") cfg.cells = get_int(value, key);
        else if (key == "coop") cfg.coop = get_int(value, key);
        else if (key == "ris_elements") cfg.ris_elements = get_int(value, key);
        else if (key == "pt_dbm") cfg.pt_dbm = get_double(value, key);
        else if (key == "zeta") cfg.zeta = get_double(value, key);
        else if (key == "p_q_dbm") cfg.p_q_dbm = get_double(value, key);
        else if (key == "p_ele_dbm") cfg.p_ele_dbm = get_double(value, key);
        else if (key == "lambda") cfg.lambda = get_double(value, key);
        else if (key == "bandwidth_hz") cfg.bandwidth_hz = get_double(value, key);
        else if (key == "kappa_db") cfg.kappa_db = get_double(value, key);
        else if (key == "rate_center") cfg.rate_center = get_double(value, key);
        else if (key == "rate_edge") cfg.rate_edge = get_double(value, key);
        else if (key == "distances") parse_distances(value, cfg.distances);
        else if (key == "exponents") parse_exponents(value, cfg.exponents);
        else if (key == "topology_seed") cfg.topology_seed = get_u64(value, key);
        else if (key == "outage_composition")
            cfg.outage_composition = get_string(value, key);
        else if (key == "charge_all_active_ris")
            cfg.charge_all_active_ris = get_bool(value, key);
        else if (key == "eo_noncoop_random")
            cfg.eo_noncoop_random = get_bool(value, key);
        else bad_key(key, "unknown key");
    }
    validate_config(cfg);
    return cfg;
}

SimConfig load_config_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("config file '" + path + "': cannot open");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

void validate_config(const SimConfig &cfg) {
    if (cfg.cells < 1) bad_key("cells", "must be >= 1");
    if (cfg.coop < 1 || cfg.coop > cfg.cells)
        bad_key("coop", "must be in [1, cells]");
    if (cfg.ris_elements < 0) bad_key("ris_elements", "must be >= 0");
    check_finite(cfg.pt_dbm, "pt_dbm");
    if (!(cfg.zeta > 0.5) || !(cfg.zeta < 1.0))
        bad_key("zeta", "must lie in (0.5, 1)");
    check_finite(cfg.p_q_dbm, "p_q_dbm");
    check_finite(cfg.p_ele_dbm, "p_ele_dbm");
    if (!(cfg.lambda > 0.0) || !(cfg.lambda <= 1.0))
        bad_key("lambda", "must lie in (0, 1]");
    check_positive(cfg.bandwidth_hz, "bandwidth_hz");
    check_finite(cfg.kappa_db, "kappa_db");
    check_positive(cfg.rate_center, "rate_center");
    check_positive(cfg.rate_edge, "rate_edge");
    check_positive(cfg.distances.bs_center, "distances.bs_center");
    check_positive(cfg.distances.bs_edge, "distances.bs_edge");
    check_positive(cfg.distances.bs_foreign_center,
                   "distances.bs_foreign_center");
    check_positive(cfg.distances.bs_ris, "distances.bs_ris");
    check_positive(cfg.distances.ris_edge, "distances.ris_edge");
    if (!(cfg.exponents.ris >= 2.0)) bad_key("exponents.ris", "must be >= 2");
    if (!(cfg.exponents.center >= 2.0))
        bad_key("exponents.center", "must be >= 2");
    if (!(cfg.exponents.edge >= 2.0)) bad_key("exponents.edge", "must be >= 2");
    if (!(cfg.exponents.ici >= 2.0)) bad_key("exponents.ici", "must be >= 2");
    if (cfg.outage_composition != "mean" &&
        cfg.outage_composition != "per_trial")
        bad_key("outage_composition", "must be 'mean' or 'per_trial'");
}

std::string config_to_json(const SimConfig &cfg) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"cells\": " << cfg.cells << ",\n";
    out << "  \"coop\": " << cfg.coop << ",\n";
    out << "  \"ris_elements\": " << cfg.ris_elements << ",\n";
    out << "  \"pt_dbm\": " << fmt(cfg.pt_dbm) << ",\n";
    out << "  \"zeta\": " << fmt(cfg.zeta) << ",\n";
    out << "  \"p_q_dbm\": " << fmt(cfg.p_q_dbm) << ",\n";
    out << "  \"p_ele_dbm\": " << fmt(cfg.p_ele_dbm) << ",\n";
    out << "  \"lambda\": " << fmt(cfg.lambda) << ",\n";
    out << "  \"bandwidth_hz\": " << fmt(cfg.bandwidth_hz) << ",\n";
    out << "  \"kappa_db\": " << fmt(cfg.kappa_db) << ",\n";
    out << "  \"rate_center\": " << fmt(cfg.rate_center) << ",\n";
    out << "  \"rate_edge\": " << fmt(cfg.rate_edge) << ",\n";
    out << "  \"distances\": {\n";
    out << "    \"bs_center\": " << fmt(cfg.distances.bs_center) << ",\n";
    out << "    \"bs_edge\": " << fmt(cfg.distances.bs_edge) << ",\n";
    out << "    \"bs_foreign_center\": "
        << fmt(cfg.distances.bs_foreign_center) << ",\n";
    out << "    \"bs_ris\": " << fmt(cfg.distances.bs_ris) << ",\n";
    out << "    \"ris_edge\": " << fmt(cfg.distances.ris_edge) << "\n";
    out << "  },\n";
    out << "  \"exponents\": {\n";
    out << "    \"ris\": " << fmt(cfg.exponents.ris) << ",\n";
    out << "    \"center\": " << fmt(cfg.exponents.center) << ",\n";
    out << "    \"edge\": " << fmt(cfg.exponents.edge) << ",\n";
    out << "    \"ici\": " << fmt(cfg.exponents.ici) << "\n";
    out << "  },\n";
    out << "  \"topology_seed\": " << cfg.topology_seed << ",\n";
    out << "  \"outage_composition\": \"" << cfg.outage_composition << "\",\n";
    out << "  \"charge_all_active_ris\": "
        << (cfg.charge_all_active_ris ? "true" : "false") << ",\n";
    out << "  \"eo_noncoop_random\": "
        << (cfg.eo_noncoop_random ? "true" : "false") << "\n";
    out << "}\n";
    return out.str();
}

std::uint64_t config_hash(const SimConfig &cfg) {
    const std::string text = config_to_json(cfg);
    return fnv1a64(text.data(), text.size());
}

}  // namespace riscomp
