// SPDX-License-Identifier: Apache-2.0
#include "riscomp/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>
#include <vector>

namespace riscomp {
namespace {

// Per-trial statistics layout, all doubles:
//   [0..4]                edge user: r, r^2, outage, g, g^2 with
//                         g = (1 - outage) * r
//   [5 + 5i .. 9 + 5i]    center user of cell i, same five entries
//   [tail, tail+2]        S, S^2, S * g_edge with S = sum_i g_center_i
constexpr int kPerUser = 5;

int stat_width(int cells) { return kPerUser * (cells + 1) + 3; }

void fill_user_stats(double *slot, double rate, bool outage) {
    const double g = outage ? 0.0 : rate;
    slot[0] = rate;
    slot[1] = rate * rate;
    slot[2] = outage ? 1.0 : 0.0;
    slot[3] = g;
    slot[4] = g * g;
}

// Fixed pairwise tree over the trial axis; independent of how the slots
// were produced, so any worker count yields bit-identical sums.
void reduce_tree(const double *stats, std::int64_t lo, std::int64_t hi,
                 int width, double *out) {
    if (hi - lo == 1) {
        const double *row = stats + lo * width;
        std::copy(row, row + width, out);
        return;
    }
    const std::int64_t mid = lo + (hi - lo) / 2;
    std::vector<double> right(static_cast<std::size_t>(width));
    reduce_tree(stats, lo, mid, width, out);
    reduce_tree(stats, mid, hi, width, right.data());
    for (int i = 0; i < width; ++i) out[i] += right[i];
}

// Sample variance from sums; non-negative by construction.
double sample_variance(double sum, double sum_sq, std::int64_t n) {
    if (n < 2) return 0.0;
    const double mean = sum / static_cast<double>(n);
    const double var =
        (sum_sq - static_cast<double>(n) * mean * mean) /
        static_cast<double>(n - 1);
    return std::max(var, 0.0);
}

UserEstimate mean_estimate(double sum, double sum_sq, std::int64_t n) {
    UserEstimate e;
    e.mean = sum / static_cast<double>(n);
    e.stderr_mean =
        std::sqrt(sample_variance(sum, sum_sq, n) / static_cast<double>(n));
    return e;
}

UserEstimate outage_estimate(double sum_outage, std::int64_t n) {
    UserEstimate e;
    const double p = sum_outage / static_cast<double>(n);
    e.mean = p;
    e.stderr_mean = std::sqrt(p * (1.0 - p) / static_cast<double>(n));
    return e;
}

// Delta-method standard error of (1 - p_out) * mean_rate from the sums of
// one user's statistics.
UserEstimate goodput_mean_estimate(const double *sums, std::int64_t n) {
    const double nn = static_cast<double>(n);
    const double mean_rate = sums[0] / nn;
    const double p = sums[2] / nn;
    UserEstimate e;
    e.mean = (1.0 - p) * mean_rate;
    if (n < 2) {
        e.stderr_mean = 0.0;
        return e;
    }
    const double var_rate = sample_variance(sums[0], sums[1], n);
    const double var_p = p * (1.0 - p);
    // E[outage * r] = E[r] - E[(1 - outage) * r]
    const double sum_out_r = sums[0] - sums[3];
    const double cov =
        (sum_out_r - nn * p * mean_rate) / static_cast<double>(n - 1);
    double var = mean_rate * mean_rate * var_p + (1.0 - p) * (1.0 - p) * var_rate -
                 2.0 * mean_rate * (1.0 - p) * cov;
    e.stderr_mean = std::sqrt(std::max(var, 0.0) / nn);
    return e;
}

int billed_elements(const Estimates &est, const NetworkTopology &topo,
                    const RunOptions &options) {
    return options.charge_all_active_ris ? est.ris_active_elements
                                         : topo.ris_elements;
}

struct GoodputView {
    double center_sum = 0.0;        // sum_i R_out_center[i]
    double edge = 0.0;              // R_out_edge
    double var_center_sum = 0.0;    // variance of the center-sum estimator
    double var_edge = 0.0;
    double cov_center_edge = 0.0;   // covariance of the two estimators
};

GoodputView goodput_view(const Estimates &est, const RunOptions &options) {
    GoodputView v;
    const bool per_trial = options.per_trial_composition == "per_trial";
    if (per_trial) {
        for (const auto &g : est.goodput_center_per_trial)
            v.center_sum += g.mean;
        v.edge = est.goodput_edge_per_trial.mean;
        const double se_sum = est.center_goodput_sum_per_trial.stderr_mean;
        const double se_edge = est.goodput_edge_per_trial.stderr_mean;
        v.var_center_sum = se_sum * se_sum;
        v.var_edge = se_edge * se_edge;
        v.cov_center_edge = est.cov_center_sum_edge_goodput /
                            static_cast<double>(est.n_trials);
    } else {
        for (const auto &g : est.goodput_center_mean) {
            v.center_sum += g.mean;
            // Center users depend on disjoint link draws: independent.
            v.var_center_sum += g.stderr_mean * g.stderr_mean;
        }
        v.edge = est.goodput_edge_mean.mean;
        v.var_edge =
            est.goodput_edge_mean.stderr_mean * est.goodput_edge_mean.stderr_mean;
        v.cov_center_edge = 0.0;
    }
    return v;
}

}  // namespace

Estimates run_trials(const NetworkTopology &topo, const EvalScheme &scheme,
                     std::int64_t n_trials, std::uint64_t seed,
                     const RunOptions &options) {
    if (n_trials < 1)
        throw std::invalid_argument("run_trials: n_trials must be >= 1");
    NetworkTopology t = topo;
    if (scheme.coop_override >= 1) {
        if (scheme.coop_override > t.cells)
            throw std::invalid_argument(
                "run_trials: coop_override exceeds the cell count");
        t.coop = scheme.coop_override;
    }

    ModeMap map;
    int active = 0;
    if (scheme.access == Access::Noma) {
        map = assign_modes(t, scheme.ris, scheme.split_ratio,
                           options.eo_noncoop_random);
        for (auto m : map.modes) active += m != ElementMode::Off;
    }

    const int width = stat_width(t.cells);
    std::vector<double> stats(static_cast<std::size_t>(n_trials) * width);

    const int workers = static_cast<int>(std::clamp<std::int64_t>(
        options.workers, 1, n_trials));
    auto work = [&](int w) {
        for (std::int64_t trial = w; trial < n_trials; trial += workers) {
            const ChannelRealization ch = realize_channels(t, trial, seed);
            TrialOutcome out;
            if (scheme.access == Access::Noma) {
                const PhasePlan plan = build_phase_plan(map, ch, trial, seed);
                out = evaluate_trial(t, ch, plan);
            } else {
                out = evaluate_trial_oma(t, ch);
            }
            double *row = stats.data() + trial * width;
            fill_user_stats(row, out.rate_edge, out.outage_edge);
            double center_sum = 0.0;
            for (int i = 0; i < t.cells; ++i) {
                const auto iu = static_cast<std::size_t>(i);
                fill_user_stats(row + kPerUser * (i + 1), out.rate_center[iu],
                                out.outage_center[iu]);
                if (!out.outage_center[iu]) center_sum += out.rate_center[iu];
            }
            const double g_edge = out.outage_edge ? 0.0 : out.rate_edge;
            row[width - 3] = center_sum;
            row[width - 2] = center_sum * center_sum;
            row[width - 1] = center_sum * g_edge;
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(
            static_cast<std::size_t>(workers));
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    work(w);
                } catch (...) {
                    errors[static_cast<std::size_t>(w)] =
                        std::current_exception();
                }
            });
        for (auto &th : pool) th.join();
        for (auto &err : errors)
            if (err) std::rethrow_exception(err);
    }

    std::vector<double> sums(static_cast<std::size_t>(width));
    reduce_tree(stats.data(), 0, n_trials, width, sums.data());

    Estimates est;
    est.n_trials = n_trials;
    est.ris_active_elements = active;
    const double *edge = sums.data();
    est.rate_edge = mean_estimate(edge[0], edge[1], n_trials);
    est.p_out_edge = outage_estimate(edge[2], n_trials);
    est.goodput_edge_per_trial = mean_estimate(edge[3], edge[4], n_trials);
    est.goodput_edge_mean = goodput_mean_estimate(edge, n_trials);
    est.rate_center.resize(static_cast<std::size_t>(t.cells));
    est.p_out_center.resize(static_cast<std::size_t>(t.cells));
    est.goodput_center_mean.resize(static_cast<std::size_t>(t.cells));
    est.goodput_center_per_trial.resize(static_cast<std::size_t>(t.cells));
    for (int i = 0; i < t.cells; ++i) {
        const double *row = sums.data() + kPerUser * (i + 1);
        const auto iu = static_cast<std::size_t>(i);
        est.rate_center[iu] = mean_estimate(row[0], row[1], n_trials);
        est.p_out_center[iu] = outage_estimate(row[2], n_trials);
        est.goodput_center_per_trial[iu] =
            mean_estimate(row[3], row[4], n_trials);
        est.goodput_center_mean[iu] = goodput_mean_estimate(row, n_trials);
    }
    est.center_goodput_sum_per_trial =
        mean_estimate(sums[static_cast<std::size_t>(width) - 3],
                      sums[static_cast<std::size_t>(width) - 2], n_trials);
    if (n_trials >= 2) {
        const double nn = static_cast<double>(n_trials);
        const double mean_s = sums[static_cast<std::size_t>(width) - 3] / nn;
        const double mean_ge = edge[3] / nn;
        est.cov_center_sum_edge_goodput =
            (sums[static_cast<std::size_t>(width) - 1] -
             nn * mean_s * mean_ge) /
            static_cast<double>(n_trials - 1);
    }
    return est;
}

double outage_sum_rate(const Estimates &est, const NetworkTopology &,
                       const RunOptions &options) {
    const GoodputView v = goodput_view(est, options);
    return v.center_sum + v.edge;
}

double outage_sum_rate_stderr(const Estimates &est, const NetworkTopology &,
                              const RunOptions &options) {
    const GoodputView v = goodput_view(est, options);
    const double var =
        v.var_center_sum + v.var_edge + 2.0 * v.cov_center_edge;
    return std::sqrt(std::max(var, 0.0));
}

double energy_efficiency(const Estimates &est, const NetworkTopology &topo,
                         const RunOptions &options) {
    const GoodputView v = goodput_view(est, options);
    const double p = topo.power.pt_watts() / topo.power.amp_efficiency;
    const double a = 1.0 / (p + topo.power.p_q_watts());
    const double b = 1.0 / (p + topo.power.p_q_watts() +
                            billed_elements(est, topo, options) *
                                topo.power.p_ele_watts());
    return a * v.center_sum + b * topo.coop * v.edge;
}

double energy_efficiency_stderr(const Estimates &est,
                                const NetworkTopology &topo,
                                const RunOptions &options) {
    const GoodputView v = goodput_view(est, options);
    const double p = topo.power.pt_watts() / topo.power.amp_efficiency;
    const double a = 1.0 / (p + topo.power.p_q_watts());
    const double bj = topo.coop /
                      (p + topo.power.p_q_watts() +
                       billed_elements(est, topo, options) *
                           topo.power.p_ele_watts());
    // The edge copies are one estimator scaled by |J|: coherent, not in
    // quadrature.
    const double var = a * a * v.var_center_sum + bj * bj * v.var_edge +
                       2.0 * a * bj * v.cov_center_edge;
    return std::sqrt(std::max(var, 0.0));
}

}  // namespace riscomp
