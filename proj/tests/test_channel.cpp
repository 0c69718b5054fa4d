// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "riscomp/channel.hpp"

using namespace riscomp;

TEST_CASE("path gain anchors and argument checks") {
    CHECK(path_gain(50.0, 3.0, 1e-3) ==
          doctest::Approx(8.0000000000000005e-09).epsilon(1e-14));
    CHECK(path_gain(150.0, 3.5, 1e-3) ==
          doctest::Approx(2.4192491286747438e-11).epsilon(1e-14));
    CHECK(path_gain(200.0, 4.0, 1e-3) ==
          doctest::Approx(6.25e-13).epsilon(1e-14));
    CHECK(path_gain(75.0, 2.7, 1e-3) ==
          doctest::Approx(8.6563456350260573e-09).epsilon(1e-14));
    CHECK(path_gain(1.0, 5.0, 1e-3) == doctest::Approx(1e-3));
    CHECK_THROWS_AS((void)path_gain(0.0, 3.0, 1e-3), std::invalid_argument);
    CHECK_THROWS_AS((void)path_gain(-1.0, 3.0, 1e-3), std::invalid_argument);
    CHECK_THROWS_AS((void)path_gain(10.0, 3.0, 0.0), std::invalid_argument);
}

TEST_CASE("rayleigh scalar carries the requested mean power") {
    RandomStream rs(77, 0, 0);
    const double gain = 2.4192491286747438e-11;
    const int n = 200000;
    double power = 0.0;
    cplx mean = 0.0;
    for (int i = 0; i < n; ++i) {
        const cplx h = rayleigh_scalar(gain, rs);
        power += std::norm(h);
        mean += h;
    }
    // Relative tolerance 5/sqrt(n) on the second moment.
    CHECK(power / n == doctest::Approx(gain).epsilon(5.0 / std::sqrt(n)));
    CHECK(std::abs(mean) / n < 0.02 * std::sqrt(gain));
}

TEST_CASE("rayleigh power is exponentially distributed") {
    // |h|^2 / gain ~ Exp(1); Kolmogorov-Smirnov against the exact CDF at
    // the 1% level (critical value 1.63 / sqrt(n)).
    RandomStream rs(78, 0, 0);
    const int n = 4000;
    std::vector<double> x(n);
    for (auto &v : x) v = std::norm(rayleigh_scalar(1.0, rs));
    std::sort(x.begin(), x.end());
    double d = 0.0;
    for (int i = 0; i < n; ++i) {
        const double f = 1.0 - std::exp(-x[i]);
        d = std::max(d, std::abs(f - (i + 1.0) / n));
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
    }
    CHECK(d < 1.63 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("steering vector closed forms") {
    const auto one = los_steering(1, 0.7);
    REQUIRE(one.size() == 1);
    CHECK(one[0].real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(one[0].imag() == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));

    // Broadside: every element in phase.
    const auto broadside = los_steering(4, 0.0);
    for (const auto &a : broadside) {
        CHECK(a.real() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(a.imag()) < 1e-12);
    }

    // Endfire: element k carries phase k*pi, alternating signs.
    const auto endfire = los_steering(3, std::numbers::pi / 2.0);
    CHECK(endfire[0].real() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(endfire[1].real() == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(endfire[2].real() == doctest::Approx(1.0).epsilon(1e-9));

    // sin(omega) = 1/2 puts element 1 at phase pi/2.
    const auto quarter = los_steering(2, std::asin(0.5));
    CHECK(quarter[1].real() == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
    CHECK(quarter[1].imag() == doctest::Approx(1.0).epsilon(1e-9));

    // Unit magnitude everywhere.
    for (const auto &a : los_steering(16, -1.1))
        CHECK(std::abs(a) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS((void)los_steering(0, 0.0), std::invalid_argument);
}

TEST_CASE("rician vector limits") {
    RandomStream rs(79, 0, 0);
    const double gain = 8.6563456350260573e-09;

    SUBCASE("kappa = 0 reduces to rayleigh statistics") {
        const int trials = 20000, k = 8;
        double power = 0.0;
        cplx mean = 0.0;
        for (int t = 0; t < trials; ++t) {
            const auto h = rician_vector(k, gain, 0.0, 0.3, rs);
            for (const auto &v : h) {
                power += std::norm(v);
                mean += v;
            }
        }
        const double n = static_cast<double>(trials) * k;
        CHECK(power / n == doctest::Approx(gain).epsilon(5.0 / std::sqrt(n)));
        CHECK(std::abs(mean) / n < 0.02 * std::sqrt(gain));
    }

    SUBCASE("large kappa pins the vector to the LoS response") {
        const auto a = los_steering(5, 0.4);
        const auto h = rician_vector(5, gain, 1e16, 0.4, rs);
        for (int i = 0; i < 5; ++i)
            CHECK(std::abs(h[i] - std::sqrt(gain) * a[i]) <
                  1e-6 * std::sqrt(gain));
    }

    SUBCASE("per-entry power at the reference K-factor") {
        // kappa = 10^0.3: per-entry mean power must stay within 2%.
        const double kappa = 1.9952623149688795;
        const int trials = 40000, k = 4;
        std::vector<double> power(k, 0.0);
        for (int t = 0; t < trials; ++t) {
            const auto h = rician_vector(k, gain, kappa, -0.8, rs);
            for (int i = 0; i < k; ++i) power[i] += std::norm(h[i]);
        }
        for (int i = 0; i < k; ++i)
            CHECK(power[i] / trials == doctest::Approx(gain).epsilon(0.02));
    }

    SUBCASE("mean vector equals the scaled LoS component") {
        const double kappa = 3.0;
        const auto a = los_steering(3, 0.9);
        const int trials = 60000;
        std::vector<cplx> mean(3, 0.0);
        for (int t = 0; t < trials; ++t) {
            const auto h = rician_vector(3, gain, kappa, 0.9, rs);
            for (int i = 0; i < 3; ++i) mean[i] += h[i];
        }
        const double los_scale = std::sqrt(gain * kappa / (1.0 + kappa));
        for (int i = 0; i < 3; ++i)
            CHECK(std::abs(mean[i] / static_cast<double>(trials) -
                           los_scale * a[i]) < 0.03 * std::sqrt(gain));
    }

    CHECK_THROWS_AS((void)rician_vector(0, gain, 1.0, 0.0, rs),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)rician_vector(2, gain, -0.5, 0.0, rs),
                    std::invalid_argument);
}

TEST_CASE("realize_channels layout and determinism") {
    const NetworkTopology topo = build_topology(SimConfig{});
    const ChannelRealization a = realize_channels(topo, 3, 12345);
    CHECK(a.cells == 6);
    CHECK(a.ris_elements == 70);
    CHECK(a.direct.size() == 6u * 7u);
    CHECK(a.bs_to_ris.size() == 6u * 70u);
    CHECK(a.ris_to_edge.size() == 6u * 70u);

    const ChannelRealization b = realize_channels(topo, 3, 12345);
    CHECK(a.direct == b.direct);
    CHECK(a.bs_to_ris == b.bs_to_ris);
    CHECK(a.ris_to_edge == b.ris_to_edge);

    const ChannelRealization c = realize_channels(topo, 4, 12345);
    CHECK(a.direct != c.direct);
    const ChannelRealization d = realize_channels(topo, 3, 54321);
    CHECK(a.direct != d.direct);
}

TEST_CASE("element count does not perturb direct-link draws") {
    // Per-link stream addressing: growing the surfaces must reproduce the
    // same direct coefficients bit for bit.
    SimConfig small;
    small.ris_elements = 10;
    SimConfig large;
    large.ris_elements = 70;
    const ChannelRealization a =
        realize_channels(build_topology(small), 11, 777);
    const ChannelRealization b =
        realize_channels(build_topology(large), 11, 777);
    CHECK(a.direct == b.direct);
    // And the first 10 elements of each surface vector also agree.
    for (int cell = 0; cell < 6; ++cell)
        for (int k = 0; k < 10; ++k) {
            CHECK(a.ris_in(cell)[k] == b.ris_in(cell)[k]);
            CHECK(a.ris_out(cell)[k] == b.ris_out(cell)[k]);
        }
}

TEST_CASE("zero-element networks carry only direct paths") {
    SimConfig cfg;
    cfg.ris_elements = 0;
    const ChannelRealization r = realize_channels(build_topology(cfg), 0, 1);
    CHECK(r.bs_to_ris.empty());
    CHECK(r.ris_to_edge.empty());
    CHECK(r.direct.size() == 6u * 7u);
    CHECK(r.ris_in(0).empty());
}

TEST_CASE("per-class mean powers match large-scale gains") {
    SimConfig cfg;
    cfg.ris_elements = 16;
    const NetworkTopology topo = build_topology(cfg);
    const int trials = 20000;

    double own = 0, foreign = 0, edge_coop = 0, edge_non = 0;
    double ris_in_p = 0, ris_out_p = 0;
    for (int t = 0; t < trials; ++t) {
        const ChannelRealization r = realize_channels(topo, t, 2024);
        for (int bs = 0; bs < 6; ++bs) {
            for (int cell = 0; cell < 6; ++cell) {
                const double p = std::norm(r.direct_center(bs, cell));
                (bs == cell ? own : foreign) += p;
            }
            const double pe = std::norm(r.direct_edge(bs));
            (topo.is_coop(bs) ? edge_coop : edge_non) += pe;
        }
        for (int cell = 0; cell < 6; ++cell) {
            for (const auto &v : r.ris_in(cell)) ris_in_p += std::norm(v);
            for (const auto &v : r.ris_out(cell)) ris_out_p += std::norm(v);
        }
    }
    const double n_own = 6.0 * trials, n_foreign = 30.0 * trials;
    const double n_ec = 4.0 * trials, n_en = 2.0 * trials;
    const double n_ris = 6.0 * 16.0 * trials;
    CHECK(own / n_own == doctest::Approx(topo.gain_center(0, 0))
                             .epsilon(5.0 / std::sqrt(n_own)));
    CHECK(foreign / n_foreign == doctest::Approx(topo.gain_center(1, 0))
                                     .epsilon(5.0 / std::sqrt(n_foreign)));
    CHECK(edge_coop / n_ec == doctest::Approx(topo.gain_edge_direct(0))
                                  .epsilon(5.0 / std::sqrt(n_ec)));
    CHECK(edge_non / n_en == doctest::Approx(topo.gain_edge_direct(5))
                                 .epsilon(5.0 / std::sqrt(n_en)));
    // Rician entries keep unit mean power times the hop gain; their
    // variance is below Rayleigh so the same bound is conservative.
    CHECK(ris_in_p / n_ris == doctest::Approx(topo.gain_bs_ris(0))
                                  .epsilon(5.0 / std::sqrt(n_ris)));
    CHECK(ris_out_p / n_ris == doctest::Approx(topo.gain_ris_edge(0))
                                   .epsilon(5.0 / std::sqrt(n_ris)));
}

TEST_CASE("links are mutually uncorrelated") {
    const NetworkTopology topo = build_topology(SimConfig{});
    const int trials = 20000;
    double c01 = 0, c0e = 0, serial = 0;
    double prev = 0.0;
    for (int t = 0; t < trials; ++t) {
        const ChannelRealization r = realize_channels(topo, t, 99);
        const double a = r.direct_center(0, 0).real() * std::numbers::sqrt2;
        const double b = r.direct_center(0, 1).real() * std::numbers::sqrt2;
        const double e = r.direct_edge(0).real() * std::numbers::sqrt2;
        const double ga = a / std::sqrt(topo.gain_center(0, 0));
        const double gb = b / std::sqrt(topo.gain_center(0, 1));
        const double ge = e / std::sqrt(topo.gain_edge_direct(0));
        c01 += ga * gb;
        c0e += ga * ge;
        if (t > 0) serial += ga * prev;
        prev = ga;
    }
    // Standardized products have se ~ 1/sqrt(n) ~ 0.007; use 5 sigma.
    CHECK(std::abs(c01 / trials) < 0.05);
    CHECK(std::abs(c0e / trials) < 0.05);
    CHECK(std::abs(serial / (trials - 1)) < 0.05);
}

TEST_CASE("dump_realization is stable and labeled") {
    const NetworkTopology topo = build_topology(SimConfig{});
    const ChannelRealization r = realize_channels(topo, 1, 7);
    const std::string a = dump_realization(r, topo);
    const std::string b = dump_realization(r, topo);
    CHECK(a == b);
    CHECK(a.find("direct") != std::string::npos);
    CHECK_FALSE(a.empty());
}
