// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "riscomp/plot.hpp"

using namespace riscomp;

namespace {

std::size_t count_occurrences(const std::string &hay,
                              const std::string &needle) {
    std::size_t n = 0;
    for (std::size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size()))
        ++n;
    return n;
}

SweepResult small_coop_sweep() {
    SimConfig cfg;
    return sweep_coop(cfg, {1, 3, 6}, schemes_ee(), 20, 101,
                      RunOptions{.workers = 2});
}

}  // namespace

TEST_CASE("line chart draws one polyline and legend entry per scheme") {
    const SweepResult result = small_coop_sweep();
    const std::string svg = render_svg(result);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(count_occurrences(svg, "<polyline") == 4);
    // 4 schemes x 3 grid points markers.
    CHECK(count_occurrences(svg, "<circle") == 12);
    for (const char *label : {">none<", ">random<", ">eo<", ">ec<"})
        CHECK(svg.find(label) != std::string::npos);
    CHECK(svg.find("Cooperative base stations") != std::string::npos);
    CHECK(svg.find("Energy efficiency") != std::string::npos);
}

TEST_CASE("rendering is deterministic") {
    const SweepResult result = small_coop_sweep();
    CHECK(render_svg(result) == render_svg(result));
}

TEST_CASE("split chart keys series by cooperative-set size") {
    SimConfig cfg;
    const SweepResult result = sweep_split(cfg, {0.0, 0.5, 1.0}, {1, 6}, 20,
                                           7, RunOptions{.workers = 2});
    const std::string svg = render_svg(result);
    CHECK(count_occurrences(svg, "<polyline") == 2);
    CHECK(svg.find(">J=1<") != std::string::npos);
    CHECK(svg.find(">J=6<") != std::string::npos);
    CHECK(svg.find("split ratio") != std::string::npos);
}

TEST_CASE("contour chart fills the grid and adds a color bar") {
    SimConfig cfg;
    const SweepResult result = sweep_contour(cfg, {-10.0, 0.0, 10.0},
                                             {0.5, 1.0, 1.5}, 20, 3,
                                             RunOptions{.workers = 2});
    const std::string svg = render_svg(result);
    // 1 background + 4 interior cells + 1 frame + 64 color bar slabs.
    CHECK(count_occurrences(svg, "<rect") == 70);
    CHECK(svg.find(">EE<") != std::string::npos);
    CHECK(count_occurrences(svg, "<polyline") == 0);
}

TEST_CASE("empty result is rejected") {
    SweepResult empty;
    CHECK_THROWS_AS((void)render_svg(empty), std::invalid_argument);
}

TEST_CASE("write_plot creates the file with the rendered bytes") {
    const SweepResult result = small_coop_sweep();
    const std::string dir = "plot_test_out";
    const std::string path = write_plot(result, dir, "coop");
    CHECK(path == dir + "/coop.svg");
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == render_svg(result));
    std::filesystem::remove_all(dir);
}
