// SPDX-License-Identifier: Apache-2.0
#include "riscomp/topology.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "riscomp/channel.hpp"
#include "riscomp/rng.hpp"

namespace riscomp {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

using nlohmann::json;

double jd(const json &j, const char *key) {
    if (!j.contains(key) || !j.at(key).is_number())
        throw std::invalid_argument(std::string("topology key '") + key +
                                    "': expected a number");
    return j.at(key).get<double>();
}

int ji(const json &j, const char *key) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw std::invalid_argument(std::string("topology key '") + key +
                                    "': expected an integer");
    return j.at(key).get<int>();
}

}  // namespace

Thresholds Thresholds::from_rates(double center, double edge) {
    Thresholds t;
    t.rate_center = center;
    t.rate_edge = edge;
    t.gamma_center = std::exp2(center) - 1.0;
    t.gamma_edge = std::exp2(edge) - 1.0;
    return t;
}

double NetworkTopology::gain_center(int bs, int cell) const {
    return path_gain(dist_center(bs, cell), exp_center(bs, cell), rho_o);
}

double NetworkTopology::gain_edge_direct(int bs) const {
    return path_gain(dist_edge(bs), exp_edge(bs), rho_o);
}

double NetworkTopology::gain_bs_ris(int) const {
    return path_gain(distances.bs_ris, exponents.ris, rho_o);
}

double NetworkTopology::gain_ris_edge(int) const {
    return path_gain(distances.ris_edge, exponents.ris, rho_o);
}

NetworkTopology build_topology(const SimConfig &cfg) {
    validate_config(cfg);
    NetworkTopology t;
    t.cells = cfg.cells;
    t.coop = cfg.coop;
    t.ris_elements = cfg.ris_elements;
    t.zeta = cfg.zeta;
    t.rho_o = 1e-3;
    t.kappa = db_to_linear(cfg.kappa_db);
    t.power.pt_dbm = cfg.pt_dbm;
    t.power.p_q_dbm = cfg.p_q_dbm;
    t.power.p_ele_dbm = cfg.p_ele_dbm;
    t.power.amp_efficiency = cfg.lambda;
    t.power.bandwidth_hz = cfg.bandwidth_hz;
    t.thresholds = Thresholds::from_rates(cfg.rate_center, cfg.rate_edge);
    t.distances = cfg.distances;
    t.exponents = cfg.exponents;
    t.topology_seed = cfg.topology_seed;

    t.aoa_bs_ris.resize(t.cells);
    t.aoa_ris_edge.resize(t.cells);
    for (int i = 0; i < t.cells; ++i) {
        RandomStream in(cfg.topology_seed, 0, streamtag::aoa(i, 0));
        RandomStream out(cfg.topology_seed, 0, streamtag::aoa(i, 1));
        t.aoa_bs_ris[i] = in.next_uniform(-kPi / 2, kPi / 2);
        t.aoa_ris_edge[i] = out.next_uniform(-kPi / 2, kPi / 2);
    }
    return t;
}

std::string serialize_topology(const NetworkTopology &t) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"cells\": " << t.cells << ",\n";
    out << "  \"coop\": " << t.coop << ",\n";
    out << "  \"ris_elements\": " << t.ris_elements << ",\n";
    out << "  \"zeta\": " << fmt(t.zeta) << ",\n";
    out << "  \"rho_o\": " << fmt(t.rho_o) << ",\n";
    out << "  \"kappa\": " << fmt(t.kappa) << ",\n";
    out << "  \"power\": {\n";
    out << "    \"pt_dbm\": " << fmt(t.power.pt_dbm) << ",\n";
    out << "    \"p_q_dbm\": " << fmt(t.power.p_q_dbm) << ",\n";
    out << "    \"p_ele_dbm\": " << fmt(t.power.p_ele_dbm) << ",\n";
    out << "    \"amp_efficiency\": " << fmt(t.power.amp_efficiency) << ",\n";
    out << "    \"bandwidth_hz\": " << fmt(t.power.bandwidth_hz) << "\n";
    out << "  },\n";
    out << "  \"thresholds\": {\n";
    out << "    \"rate_center\": " << fmt(t.thresholds.rate_center) << ",\n";
    out << "    \"rate_edge\": " << fmt(t.thresholds.rate_edge) << ",\n";
    out << "    \"gamma_center\": " << fmt(t.thresholds.gamma_center) << ",\n";
    out << "    \"gamma_edge\": " << fmt(t.thresholds.gamma_edge) << "\n";
    out << "  },\n";
    out << "  \"distances\": {\n";
    out << "    \"bs_center\": " << fmt(t.distances.bs_center) << ",\n";
    out << "    \"bs_edge\": " << fmt(t.distances.bs_edge) << ",\n";
    out << "    \"bs_foreign_center\": " << fmt(t.distances.bs_foreign_center)
        << ",\n";
    out << "    \"bs_ris\": " << fmt(t.distances.bs_ris) << ",\n";
    out << "    \"ris_edge\": " << fmt(t.distances.ris_edge) << "\n";
    out << "  },\n";
    out << "  \"exponents\": {\n";
    out << "    \"ris\": " << fmt(t.exponents.ris) << ",\n";
    out << "    \"center\": " << fmt(t.exponents.center) << ",\n";
    out << "    \"edge\": " << fmt(t.exponents.edge) << ",\n";
    out << "    \"ici\": " << fmt(t.exponents.ici) << "\n";
    out << "  },\n";
    out << "  \"aoa_bs_ris\": [";
    for (int i = 0; i < t.cells; ++i)
        out << (i ? ", " : "") << fmt(t.aoa_bs_ris[i]);
    out << "],\n";
    out << "  \"aoa_ris_edge\": [";
    for (int i = 0; i < t.cells; ++i)
        out << (i ? ", " : "") << fmt(t.aoa_ris_edge[i]);
    out << "],\n";
    out << "  \"topology_seed\": " << t.topology_seed << "\n";
    out << "}\n";
    return out.str();
}

NetworkTopology parse_topology(const std::string &json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string("topology parse error: ") +
                                    e.what());
    }
    NetworkTopology t;
    t.cells = ji(doc, "cells");
    t.coop = ji(doc, "coop");
    t.ris_elements = ji(doc, "ris_elements");
    t.zeta = jd(doc, "zeta");
    t.rho_o = jd(doc, "rho_o");
    t.kappa = jd(doc, "kappa");
    const json &p = doc.at("power");
    t.power.pt_dbm = jd(p, "pt_dbm");
    t.power.p_q_dbm = jd(p, "p_q_dbm");
    t.power.p_ele_dbm = jd(p, "p_ele_dbm");
    t.power.amp_efficiency = jd(p, "amp_efficiency");
    t.power.bandwidth_hz = jd(p, "bandwidth_hz");
    const json &th = doc.at("thresholds");
    t.thresholds.rate_center = jd(th, "rate_center");
    t.thresholds.rate_edge = jd(th, "rate_edge");
    t.thresholds.gamma_center = jd(th, "gamma_center");
    t.thresholds.gamma_edge = jd(th, "gamma_edge");
    const json &d = doc.at("distances");
    t.distances.bs_center = jd(d, "bs_center");
    t.distances.bs_edge = jd(d, "bs_edge");
    t.distances.bs_foreign_center = jd(d, "bs_foreign_center");
    t.distances.bs_ris = jd(d, "bs_ris");
    t.distances.ris_edge = jd(d, "ris_edge");
    const json &e = doc.at("exponents");
    t.exponents.ris = jd(e, "ris");
    t.exponents.center = jd(e, "center");
    t.exponents.edge = jd(e, "edge");
    t.exponents.ici = jd(e, "ici");
    t.aoa_bs_ris = doc.at("aoa_bs_ris").get<std::vector<double>>();
    t.aoa_ris_edge = doc.at("aoa_ris_edge").get<std::vector<double>>();
    t.topology_seed = doc.at("topology_seed").get<std::uint64_t>();
    if (static_cast<int>(t.aoa_bs_ris.size()) != t.cells ||
        static_cast<int>(t.aoa_ris_edge.size()) != t.cells)
        throw std::invalid_argument(
            "topology key 'aoa_bs_ris': length must equal cells");
    return t;
}

}  // namespace riscomp
