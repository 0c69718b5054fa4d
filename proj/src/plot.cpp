// SPDX-License-Identifier: Apache-2.0
#include "riscomp/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace riscomp {
namespace {

constexpr double kWidth = 860.0;
constexpr double kHeight = 560.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 700.0;   // plot area right edge; legend sits after
constexpr double kTop = 60.0;
constexpr double kBottom = 490.0;

const char *kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                          "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};

std::string f2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string g4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct ChartText {
    std::string title;
    std::string x_label;
    std::string y_label;
};

ChartText chart_text(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::CoopSweep:
            return {"Energy efficiency vs. cooperative base stations",
                    "Cooperative base stations J",
                    "Energy efficiency (bits/Hz/J)"};
        case ExperimentKind::ElementsSweep:
            return {"Energy efficiency vs. surface elements",
                    "Surface elements K", "Energy efficiency (bits/Hz/J)"};
        case ExperimentKind::PowerSweep:
            return {"Outage sum rate vs. transmit power",
                    "Transmit power (dBm)", "Outage sum rate (bits/s/Hz)"};
        case ExperimentKind::SplitSweep:
            return {"Outage sum rate vs. cancel/enhance split ratio",
                    "Cancel fraction of elements",
                    "Outage sum rate (bits/s/Hz)"};
        case ExperimentKind::ContourSweep:
            return {"Energy efficiency over power and rate threshold",
                    "Transmit power (dBm)", "Rate threshold (bits/s/Hz)"};
        case ExperimentKind::Point:
            return {"Energy efficiency by scheme", "Scheme",
                    "Energy efficiency (bits/Hz/J)"};
    }
    return {"", "", ""};
}

// Monotone blue-to-yellow map, t in [0, 1].
std::string heat_color(double t) {
    t = std::clamp(t, 0.0, 1.0);
    const double stops[5][3] = {{68, 1, 84},
                                {59, 82, 139},
                                {33, 145, 140},
                                {94, 201, 98},
                                {253, 231, 37}};
    const double pos = t * 4.0;
    const int lo = std::min(static_cast<int>(pos), 3);
    const double f = pos - lo;
    char buf[16];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x",
                  static_cast<int>(std::lround(stops[lo][0] +
                                               f * (stops[lo + 1][0] -
                                                    stops[lo][0]))),
                  static_cast<int>(std::lround(stops[lo][1] +
                                               f * (stops[lo + 1][1] -
                                                    stops[lo][1]))),
                  static_cast<int>(std::lround(stops[lo][2] +
                                               f * (stops[lo + 1][2] -
                                                    stops[lo][2]))));
    return buf;
}

void open_svg(std::ostringstream &out) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
        << kHeight << "\">\n"
        << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" fill=\"white\"/>\n";
}

void draw_frame(std::ostringstream &out, const ChartText &text) {
    out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\""
        << kRight - kLeft << "\" height=\"" << kBottom - kTop
        << "\" fill=\"none\" stroke=\"#333\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << (kLeft + kRight) / 2 << "\" y=\"" << kTop - 24
        << "\" font-family=\"sans-serif\" font-size=\"18\" "
           "text-anchor=\"middle\">"
        << text.title << "</text>\n";
    out << "<text x=\"" << (kLeft + kRight) / 2 << "\" y=\"" << kBottom + 44
        << "\" font-family=\"sans-serif\" font-size=\"14\" "
           "text-anchor=\"middle\">"
        << text.x_label << "</text>\n";
    out << "<text x=\"22\" y=\"" << (kTop + kBottom) / 2
        << "\" font-family=\"sans-serif\" font-size=\"14\" "
           "text-anchor=\"middle\" transform=\"rotate(-90 22 "
        << (kTop + kBottom) / 2 << ")\">" << text.y_label << "</text>\n";
}

struct LinearScale {
    double lo = 0.0, hi = 1.0, out_lo = 0.0, out_hi = 1.0;
    double operator()(double v) const {
        const double t = hi == lo ? 0.5 : (v - lo) / (hi - lo);
        return out_lo + t * (out_hi - out_lo);
    }
};

void draw_ticks(std::ostringstream &out, const LinearScale &xs,
                const LinearScale &ys) {
    for (int i = 0; i <= 5; ++i) {
        const double xv = xs.lo + (xs.hi - xs.lo) * i / 5.0;
        const double x = xs(xv);
        out << "<line x1=\"" << f2(x) << "\" y1=\"" << kBottom << "\" x2=\""
            << f2(x) << "\" y2=\"" << kBottom + 6
            << "\" stroke=\"#333\"/>\n";
        out << "<text x=\"" << f2(x) << "\" y=\"" << kBottom + 22
            << "\" font-family=\"sans-serif\" font-size=\"12\" "
               "text-anchor=\"middle\">"
            << g4(xv) << "</text>\n";
        const double yv = ys.lo + (ys.hi - ys.lo) * i / 5.0;
        const double y = ys(yv);
        out << "<line x1=\"" << kLeft - 6 << "\" y1=\"" << f2(y) << "\" x2=\""
            << kLeft << "\" y2=\"" << f2(y) << "\" stroke=\"#333\"/>\n";
        out << "<text x=\"" << kLeft - 10 << "\" y=\"" << f2(y + 4)
            << "\" font-family=\"sans-serif\" font-size=\"12\" "
               "text-anchor=\"end\">"
            << g4(yv) << "</text>\n";
    }
}

std::string line_chart(const SweepResult &result) {
    const ChartText text = chart_text(result.kind);
    std::vector<Series> series;
    std::map<std::string, std::size_t> index;
    for (const auto &r : result.records) {
        std::string key;
        double x = 0.0;
        double y = 0.0;
        switch (result.kind) {
            case ExperimentKind::CoopSweep:
                key = r.scheme_tag;
                x = r.coop;
                y = r.energy_efficiency;
                break;
            case ExperimentKind::ElementsSweep:
                key = r.scheme_tag;
                x = r.elements;
                y = r.energy_efficiency;
                break;
            case ExperimentKind::PowerSweep:
                key = r.scheme_tag;
                x = r.pt_dbm;
                y = r.outage_sum_rate;
                break;
            case ExperimentKind::SplitSweep: {
                char buf[16];
                std::snprintf(buf, sizeof(buf), "J=%d", r.coop);
                key = buf;
                x = r.ratio;
                y = r.outage_sum_rate;
                break;
            }
            default:
                key = r.scheme_tag;
                x = static_cast<double>(index.size());
                y = r.energy_efficiency;
                break;
        }
        auto [it, inserted] = index.try_emplace(key, series.size());
        if (inserted) series.push_back(Series{key, {}, {}});
        series[it->second].x.push_back(x);
        series[it->second].y.push_back(y);
    }

    double xlo = series[0].x[0], xhi = xlo, ylo = series[0].y[0], yhi = ylo;
    for (const auto &s : series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            xlo = std::min(xlo, s.x[i]);
            xhi = std::max(xhi, s.x[i]);
            ylo = std::min(ylo, s.y[i]);
            yhi = std::max(yhi, s.y[i]);
        }
    const double pad = (yhi - ylo) * 0.06 + 1e-12;
    LinearScale xs{xlo, xhi, kLeft, kRight};
    LinearScale ys{std::min(ylo - pad, 0.0), yhi + pad, kBottom, kTop};

    std::ostringstream out;
    open_svg(out);
    draw_frame(out, text);
    draw_ticks(out, xs, ys);
    for (std::size_t si = 0; si < series.size(); ++si) {
        const auto &s = series[si];
        const char *color = kPalette[si % 8];
        out << "<polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i)
            out << f2(xs(s.x[i])) << "," << f2(ys(s.y[i])) << " ";
        out << "\"/>\n";
        for (std::size_t i = 0; i < s.x.size(); ++i)
            out << "<circle cx=\"" << f2(xs(s.x[i])) << "\" cy=\""
                << f2(ys(s.y[i])) << "\" r=\"3\" fill=\"" << color
                << "\"/>\n";
        const double ly = kTop + 18 + 22 * static_cast<double>(si);
        out << "<line x1=\"" << kRight + 16 << "\" y1=\"" << f2(ly)
            << "\" x2=\"" << kRight + 44 << "\" y2=\"" << f2(ly)
            << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << kRight + 50 << "\" y=\"" << f2(ly + 4)
            << "\" font-family=\"sans-serif\" font-size=\"13\">" << s.label
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string contour_chart(const SweepResult &result) {
    const ChartText text = chart_text(result.kind);
    std::vector<double> xs_vals, ys_vals;
    for (const auto &r : result.records) {
        if (std::find(xs_vals.begin(), xs_vals.end(), r.pt_dbm) ==
            xs_vals.end())
            xs_vals.push_back(r.pt_dbm);
        if (std::find(ys_vals.begin(), ys_vals.end(), r.rth) == ys_vals.end())
            ys_vals.push_back(r.rth);
    }
    std::sort(xs_vals.begin(), xs_vals.end());
    std::sort(ys_vals.begin(), ys_vals.end());
    const std::size_t nx = xs_vals.size();
    const std::size_t ny = ys_vals.size();
    std::vector<double> grid(nx * ny, 0.0);
    double vlo = result.records[0].energy_efficiency, vhi = vlo;
    for (const auto &r : result.records) {
        const auto ix = static_cast<std::size_t>(
            std::find(xs_vals.begin(), xs_vals.end(), r.pt_dbm) -
            xs_vals.begin());
        const auto iy = static_cast<std::size_t>(
            std::find(ys_vals.begin(), ys_vals.end(), r.rth) -
            ys_vals.begin());
        grid[iy * nx + ix] = r.energy_efficiency;
        vlo = std::min(vlo, r.energy_efficiency);
        vhi = std::max(vhi, r.energy_efficiency);
    }
    const double span = vhi - vlo > 0 ? vhi - vlo : 1.0;

    LinearScale sx{xs_vals.front(), xs_vals.back(), kLeft, kRight};
    LinearScale sy{ys_vals.front(), ys_vals.back(), kBottom, kTop};

    std::ostringstream out;
    open_svg(out);

    // Filled cells between grid nodes, colored by the mean of the corners.
    for (std::size_t iy = 0; iy + 1 < ny; ++iy)
        for (std::size_t ix = 0; ix + 1 < nx; ++ix) {
            const double v = (grid[iy * nx + ix] + grid[iy * nx + ix + 1] +
                              grid[(iy + 1) * nx + ix] +
                              grid[(iy + 1) * nx + ix + 1]) /
                             4.0;
            const double x0 = sx(xs_vals[ix]);
            const double x1 = sx(xs_vals[ix + 1]);
            const double y1 = sy(ys_vals[iy]);
            const double y0 = sy(ys_vals[iy + 1]);
            out << "<rect x=\"" << f2(x0) << "\" y=\"" << f2(y0)
                << "\" width=\"" << f2(x1 - x0) << "\" height=\""
                << f2(y1 - y0) << "\" fill=\""
                << heat_color((v - vlo) / span) << "\"/>\n";
        }

    // Level lines by marching squares over the node grid.
    for (int level = 1; level <= 4; ++level) {
        const double lv = vlo + span * level / 5.0;
        out << "<g stroke=\"#ffffff\" stroke-width=\"1.2\" fill=\"none\">\n";
        for (std::size_t iy = 0; iy + 1 < ny; ++iy)
            for (std::size_t ix = 0; ix + 1 < nx; ++ix) {
                const double v00 = grid[iy * nx + ix];
                const double v10 = grid[iy * nx + ix + 1];
                const double v01 = grid[(iy + 1) * nx + ix];
                const double v11 = grid[(iy + 1) * nx + ix + 1];
                const double x0 = xs_vals[ix], x1 = xs_vals[ix + 1];
                const double y0 = ys_vals[iy], y1 = ys_vals[iy + 1];
                std::vector<std::pair<double, double>> pts;
                auto cross = [&](double a, double b, double pa_x, double pa_y,
                                 double pb_x, double pb_y) {
                    if ((a < lv) == (b < lv)) return;
                    const double t = (lv - a) / (b - a);
                    pts.emplace_back(pa_x + t * (pb_x - pa_x),
                                     pa_y + t * (pb_y - pa_y));
                };
                cross(v00, v10, x0, y0, x1, y0);
                cross(v10, v11, x1, y0, x1, y1);
                cross(v01, v11, x0, y1, x1, y1);
                cross(v00, v01, x0, y0, x0, y1);
                for (std::size_t p = 0; p + 1 < pts.size(); p += 2)
                    out << "<line x1=\"" << f2(sx(pts[p].first)) << "\" y1=\""
                        << f2(sy(pts[p].second)) << "\" x2=\""
                        << f2(sx(pts[p + 1].first)) << "\" y2=\""
                        << f2(sy(pts[p + 1].second)) << "\"/>\n";
            }
        out << "</g>\n";
    }

    draw_frame(out, text);
    draw_ticks(out, sx, sy);

    // Color bar.
    const double bar_x = kRight + 30;
    for (int i = 0; i < 64; ++i) {
        const double t = (63 - i) / 63.0;
        const double y = kTop + (kBottom - kTop) * i / 64.0;
        out << "<rect x=\"" << bar_x << "\" y=\"" << f2(y)
            << "\" width=\"18\" height=\"" << f2((kBottom - kTop) / 64.0 + 0.5)
            << "\" fill=\"" << heat_color(t) << "\"/>\n";
    }
    out << "<text x=\"" << bar_x + 24 << "\" y=\"" << kTop + 6
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << g4(vhi)
        << "</text>\n";
    out << "<text x=\"" << bar_x + 24 << "\" y=\"" << kBottom
        << "\" font-family=\"sans-serif\" font-size=\"12\">" << g4(vlo)
        << "</text>\n";
    out << "<text x=\"" << bar_x + 9 << "\" y=\"" << kTop - 10
        << "\" font-family=\"sans-serif\" font-size=\"12\" "
           "text-anchor=\"middle\">EE</text>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace

std::string render_svg(const SweepResult &result) {
    if (result.records.empty())
        throw std::invalid_argument("render_svg: empty sweep result");
    if (result.kind == ExperimentKind::ContourSweep)
        return contour_chart(result);
    return line_chart(result);
}

std::string write_plot(const SweepResult &result, const std::string &dir,
                       const std::string &stem) {
    std::filesystem::create_directories(dir);
    const std::string path = dir + "/" + stem + ".svg";
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write plot file: " + path);
    out << render_svg(result);
    return path;
}

}  // namespace riscomp
