// SPDX-License-Identifier: Apache-2.0
//
// mimo-adhoc: outage and transmission capacity of MIMO-MMSE ad hoc networks
// Copyright (C) 2026 The mimo-adhoc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "mimo_adhoc/validation.hpp"

#include "mimo_adhoc/errors.hpp"
#include "mimo_adhoc/partitions.hpp"
#include "mimo_adhoc/presets.hpp"
#include "mimo_adhoc/root_finding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace mimo_adhoc {

namespace {

std::vector<double> log_grid(double lo, double hi, int points)
{
    std::vector<double> out;
    for (int i = 0; i < points; ++i) {
        const double f = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
        out.push_back(lo * std::pow(hi / lo, f));
    }
    return out;
}

// Theta for one stream through the reflection formula Gamma(1+d)Gamma(1-d) = pi d / sin(pi d).
double single_stream_theta(double z, double d0, double alpha)
{
    const double d = 2.0 / alpha;
    return std::numbers::pi * std::pow(std::pow(d0, alpha) * z, d) * std::numbers::pi * d /
           std::sin(std::numbers::pi * d);
}

// 1 - e^{-s} sum_{k < n} s^k / k!
double noise_only_outage(double s, int n)
{
    double sum = 0.0;
    double term = 1.0;
    for (int k = 0; k < n; ++k) {
        sum += term;
        term *= s / (k + 1);
    }
    return 1.0 - std::exp(-s) * sum;
}

}  // namespace

CheckResult check_partition_examples()
{
    CheckResult r{"partition worked examples (k = 4)", true, {}};
    const std::vector<Partition> expected{Partition({4}), Partition({3, 1}), Partition({2, 2}),
                                          Partition({2, 1, 1}), Partition({1, 1, 1, 1})};
    std::ostringstream detail;
    auto expect = [&](const char* what, long got, long want) {
        detail << what << "=" << got << " ";
        if (got != want)
            r.passed = false;
    };
    if (enumerate_partitions(4) != expected) {
        r.passed = false;
        detail << "enumeration order differs; ";
    }
    expect("h(2,3,4)", summand(2, 3, 4), 2);
    expect("h(2,4,4)", summand(2, 4, 4), 1);
    expect("|h(.,3,4)|", summand_count(3, 4), 2);
    expect("|h(.,.,4)|", static_cast<long>(partition_count(4)), 5);
    expect("g(1,3,4)", repeat_count(1, 3, 4), 2);
    expect("g(1,5,4)", repeat_count(1, 5, 4), 4);
    expect("|g(.,3,4)|", distinct_count(3, 4), 1);
    r.detail = detail.str();
    return r;
}

CheckResult check_partition_oracle(int k_max)
{
    CheckResult r{"partition counts vs dynamic-programming oracle (k <= " + std::to_string(k_max) + ")",
                  true, {}};
    // bounded[n][m]: partitions of n with every part <= m.
    std::vector<std::vector<long long>> bounded(
        static_cast<std::size_t>(k_max + 1), std::vector<long long>(static_cast<std::size_t>(k_max + 1), 0));
    for (int m = 0; m <= k_max; ++m)
        bounded[0][static_cast<std::size_t>(m)] = 1;
    for (int n = 1; n <= k_max; ++n)
        for (int m = 1; m <= k_max; ++m)
            bounded[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] =
                bounded[static_cast<std::size_t>(n)][static_cast<std::size_t>(m - 1)] +
                (n >= m ? bounded[static_cast<std::size_t>(n - m)][static_cast<std::size_t>(m)] : 0);

    std::ostringstream detail;
    for (int k = 0; k <= k_max && r.passed; ++k) {
        const auto want = bounded[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
        const auto parts = enumerate_partitions(k);
        if (static_cast<long long>(parts.size()) != want ||
            static_cast<long long>(partition_count(k)) != want) {
            r.passed = false;
            detail << "count mismatch at k=" << k << "; ";
        }
        for (int len = 1; len <= k + 1; ++len) {
            // conjugation: exactly len summands <-> largest part exactly len
            const long long with_largest =
                len <= k ? bounded[static_cast<std::size_t>(k - len)][static_cast<std::size_t>(len)] : 0;
            if (static_cast<long long>(partitions_with_length(k, len).size()) != with_largest) {
                r.passed = false;
                detail << "length-" << len << " mismatch at k=" << k << "; ";
            }
        }
        for (std::size_t j = 0; j < parts.size(); ++j) {
            if (multiplicity_profile(parts[j]).expand() != parts[j] || parts[j].total() != k) {
                r.passed = false;
                detail << "profile round-trip failed at k=" << k << "; ";
            }
            if (j > 0 && !std::lexicographical_compare(parts[j].summands().begin(), parts[j].summands().end(),
                                                       parts[j - 1].summands().begin(),
                                                       parts[j - 1].summands().end())) {
                r.passed = false;
                detail << "order not descending at k=" << k << "; ";
            }
        }
    }
    if (r.passed)
        detail << "p(" << k_max << ")=" << bounded[static_cast<std::size_t>(k_max)][static_cast<std::size_t>(k_max)];
    r.detail = detail.str();
    return r;
}

CheckResult check_collapse_identities(int points, std::uint64_t seed, double tol)
{
    RandomStream rng(seed);
    double worst_single = 0.0;
    double worst_noise = 0.0;
    const double gammas[] = {10.0, 100.0, kInfiniteSnr};
    for (int i = 0; i < points; ++i) {
        const double alpha = 2.1 + 3.9 * rng.uniform();
        const double z = std::pow(10.0, -2.0 + 4.0 * rng.uniform());
        const double d0 = 0.5 + 1.5 * rng.uniform();
        const double lambda = rng.uniform();
        const double gamma = gammas[i % 3];
        const double s = std::isinf(gamma) ? 0.0 : z * std::pow(d0, alpha) / gamma;

        const LinkConfig siso{1, 1, z, gamma, d0};
        const double want_single = 1.0 - std::exp(-s - single_stream_theta(z, d0, alpha) * lambda);
        worst_single = std::max(worst_single,
                                std::abs(outage_probability(siso, {lambda, alpha}) - want_single));

        const int n_r = 1 + i % 6;
        const LinkConfig simo{1, n_r, z, gamma, d0};
        worst_noise = std::max(worst_noise, std::abs(outage_probability(simo, {0.0, alpha}) -
                                                     noise_only_outage(s, n_r)));
    }
    std::ostringstream detail;
    detail.precision(3);
    detail << "max |err| single-antenna " << worst_single << ", noise-only " << worst_noise
           << " (tol " << tol << ", " << points << " points each)";
    return {"outage collapse identities", worst_single <= tol && worst_noise <= tol, detail.str()};
}

std::vector<CurvePoint> outage_grid(const std::vector<int>& stream_counts, int points, double eps_lo,
                                    double eps_hi)
{
    std::vector<CurvePoint> grid;
    for (int n_t : stream_counts) {
        const auto cfg = presets::outage_link(n_t);
        const double lo = n_t * contention_density(cfg, presets::kOutageAlpha, eps_lo);
        const double hi = n_t * contention_density(cfg, presets::kOutageAlpha, eps_hi);
        for (double density : log_grid(lo, hi, points)) {
            grid.push_back({n_t, density,
                            outage_probability(cfg, {density / n_t, presets::kOutageAlpha})});
        }
    }
    return grid;
}

std::vector<EstimatorRun> run_estimators(const std::vector<CurvePoint>& grid, const McOptions& options,
                                         bool semianalytic)
{
    std::vector<EstimatorRun> runs;
    for (const auto& point : grid) {
        const auto cfg = presets::outage_link(point.n_t);
        const NetworkParams net{point.stream_density / point.n_t, presets::kOutageAlpha};
        EstimatorRun run;
        run.point = point;
        run.mc = simulate_outage(cfg, net, options);
        if (semianalytic) {
            McOptions independent = options;
            independent.seed = options.seed + 1;
            run.semianalytic = simulate_outage_semianalytic(cfg, net, independent);
            run.has_semianalytic = true;
        }
        runs.push_back(run);
    }
    return runs;
}

CheckResult check_mc_agreement(const std::vector<EstimatorRun>& runs, double sigmas)
{
    CheckResult r{"analytic outage vs direct Monte Carlo", true, {}};
    std::ostringstream detail;
    detail.precision(4);
    double worst = 0.0;
    for (const auto& run : runs) {
        const double z = std::abs(run.point.analytic - run.mc.probability) / run.mc.std_error;
        worst = std::max(worst, z);
        if (!(std::abs(run.point.analytic - run.mc.probability) <= sigmas * run.mc.std_error))
            r.passed = false;
        detail << "[n_t=" << run.point.n_t << " dens=" << run.point.stream_density
               << " F=" << run.point.analytic << " mc=" << run.mc.probability << "+-"
               << run.mc.std_error << "] ";
    }
    detail << "max deviation " << worst << " sigma (gate " << sigmas << ")";
    r.detail = detail.str();
    return r;
}

CheckResult check_estimator_equivalence(const std::vector<EstimatorRun>& runs, double sigmas)
{
    CheckResult r{"semi-analytic vs direct Monte Carlo", true, {}};
    std::ostringstream detail;
    detail.precision(4);
    double worst = 0.0;
    for (const auto& run : runs) {
        if (!run.has_semianalytic) {
            r.passed = false;
            detail << "missing semi-analytic estimate; ";
            continue;
        }
        const double combined = std::hypot(run.mc.std_error, run.semianalytic.std_error);
        const double gap = std::abs(run.semianalytic.probability - run.mc.probability);
        worst = std::max(worst, gap / combined);
        const bool smaller = run.semianalytic.std_error < run.mc.std_error;
        if (!(gap <= sigmas * combined) || !smaller)
            r.passed = false;
        detail << "[n_t=" << run.point.n_t << " dens=" << run.point.stream_density
               << " semi=" << run.semianalytic.probability << "+-" << run.semianalytic.std_error
               << " mc=" << run.mc.probability << "+-" << run.mc.std_error
               << (smaller ? "" : " SE-not-smaller") << "] ";
    }
    detail << "max deviation " << worst << " combined sigma (gate " << sigmas << ")";
    r.detail = detail.str();
    return r;
}

CheckResult check_single_stream_dominance(int density_points, int epsilon_points)
{
    CheckResult r{"single-stream dominance", true, {}};
    std::ostringstream detail;
    detail.precision(4);

    int outage_violations = 0;
    for (double density : log_grid(1e-3, 1.0, density_points)) {
        const double single =
            outage_probability(presets::outage_link(1), {density, presets::kOutageAlpha});
        for (int n_t : {2, 4}) {
            const double multi =
                outage_probability(presets::outage_link(n_t), {density / n_t, presets::kOutageAlpha});
            if (!(single <= multi)) {
                ++outage_violations;
                detail << "outage n_t=1 " << single << " > n_t=" << n_t << " " << multi
                       << " at density " << density << "; ";
            }
        }
    }

    int capacity_violations = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    for (double eps : log_grid(1e-4, 0.8, epsilon_points)) {
        const double single =
            transmission_capacity_exact(presets::capacity_link(1), presets::kCapacityAlpha, eps)
                .exact_capacity;
        for (int n_t : {2, 4}) {
            const double multi =
                transmission_capacity_exact(presets::capacity_link(n_t), presets::kCapacityAlpha, eps)
                    .exact_capacity;
            min_margin = std::min(min_margin, single / multi);
            if (!(single > multi)) {
                ++capacity_violations;
                detail << "capacity n_t=1 " << single << " <= n_t=" << n_t << " " << multi
                       << " at eps " << eps << "; ";
            }
        }
    }
    r.passed = outage_violations == 0 && capacity_violations == 0;
    detail << density_points << " densities in [0.001, 1], " << epsilon_points
           << " targets; smallest capacity ratio c1/c_multi = " << min_margin
           << "; outage ordering reverses above density " << dominance_crossing(2, 1e-3, 4.0)
           << " (n_t=2), " << dominance_crossing(4, 1e-3, 4.0) << " (n_t=4)";
    r.detail = detail.str();
    return r;
}

double dominance_crossing(int n_t, double lo, double hi)
{
    auto gap = [n_t](double density) {
        return outage_probability(presets::outage_link(1), {density, presets::kOutageAlpha}) -
               outage_probability(presets::outage_link(n_t), {density / n_t, presets::kOutageAlpha});
    };
    if (gap(hi) <= 0.0)
        return std::numeric_limits<double>::infinity();
    if (gap(lo) > 0.0)
        return lo;
    return find_root_increasing(gap, 0.0, lo, hi, 1e-10);
}

CheckResult check_asymptotic_consistency(double rel_slope)
{
    CheckResult r{"high-SNR capacity scaling", true, {}};
    std::ostringstream detail;
    detail.precision(5);
    for (int n_t : presets::kStreamCounts) {
        const auto cfg = presets::capacity_link(n_t);
        const int ell = max_cancelable(cfg.n_r, cfg.n_t);

        const auto eps_grid = log_grid(1e-6, 1e-3, 13);
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (double eps : eps_grid) {
            const double x = std::log(eps);
            const double y = std::log(contention_density(cfg, presets::kCapacityAlpha, eps));
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double n = static_cast<double>(eps_grid.size());
        const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        const bool slope_ok = std::abs(slope * ell - 1.0) <= rel_slope;

        auto ratio_gap = [&](double eps) {
            const auto c = transmission_capacity_exact(cfg, presets::kCapacityAlpha, eps);
            return std::abs(c.exact_capacity / c.asymptotic_capacity - 1.0);
        };
        const double gap_small = ratio_gap(1e-4);
        const double gap_large = ratio_gap(1e-2);
        const bool converging = gap_small < gap_large;

        if (!slope_ok || !converging)
            r.passed = false;
        detail << "[n_t=" << n_t << " ell=" << ell << " slope=" << slope << " (1/ell=" << 1.0 / ell
               << ") |c/c_asym-1| " << gap_small << " @1e-4 vs " << gap_large << " @1e-2] ";
    }
    r.detail = detail.str();
    return r;
}

CheckResult check_conditional_cdf(int configurations, std::int64_t trials, double sigmas,
                                  std::uint64_t seed, unsigned workers)
{
    CheckResult r{"conditional outage vs channel-only Monte Carlo", true, {}};
    std::ostringstream detail;
    detail.precision(4);
    RandomStream rng(seed);
    const double alpha = presets::kOutageAlpha;
    double worst = 0.0;
    int checked = 0;
    for (int n_t : {1, 2}) {
        const auto cfg = presets::outage_link(n_t);
        for (int c = 0; c < configurations; ++c) {
            PppRealization layout;
            double conditional = 0.0;
            // Skip layouts whose expected outage or success count is too small
            // for a normal-approximation gate.
            const double lo = std::max(1e-3, 10.0 / static_cast<double>(trials));
            const double hi = std::min(0.999, 1.0 - 10.0 / static_cast<double>(trials));
            for (int attempt = 0; attempt < 10000; ++attempt) {
                layout.points.clear();
                const int count = 1 + static_cast<int>(rng.uniform() * 5.0);
                std::vector<double> radii;
                for (int i = 0; i < count; ++i)
                    radii.push_back(0.4 + 1.2 * rng.uniform());
                std::sort(radii.begin(), radii.end());
                for (double radius : radii) {
                    const double angle = 2.0 * std::numbers::pi * rng.uniform();
                    layout.points.emplace_back(radius * std::cos(angle), radius * std::sin(angle));
                }
                layout.radius = radii.back();
                conditional = conditional_outage(cfg, alpha, distances_to_alpha(layout, alpha));
                if (conditional >= lo && conditional <= hi)
                    break;
            }
            McOptions options;
            options.trials = trials;
            options.seed = seed + static_cast<std::uint64_t>(1000 * n_t + c);
            options.workers = workers;
            const auto mc = simulate_outage_fixed(cfg, alpha, layout, options);
            const double gap = std::abs(conditional - mc.probability);
            worst = std::max(worst, gap / mc.std_error);
            if (!(gap <= sigmas * mc.std_error)) {
                r.passed = false;
                detail << "[n_t=" << n_t << " L=" << layout.points.size() << " cond=" << conditional
                       << " mc=" << mc.probability << "+-" << mc.std_error << "] ";
            }
            ++checked;
        }
    }
    detail << checked << " layouts, max deviation " << worst << " sigma (gate " << sigmas << ")";
    r.detail = detail.str();
    return r;
}

CheckResult check_truncation_insensitivity(const CurvePoint& point, const McOptions& options,
                                           double max_sigmas)
{
    const auto cfg = presets::outage_link(point.n_t);
    const NetworkParams net{point.stream_density / point.n_t, presets::kOutageAlpha};
    McOptions finer = options;
    finer.delta = options.delta / 2.0;
    const auto base = simulate_outage(cfg, net, options);
    const auto wide = simulate_outage(cfg, net, finer);
    const double shift = std::abs(base.probability - wide.probability);
    std::ostringstream detail;
    detail.precision(6);
    detail << "n_t=" << point.n_t << " density=" << point.stream_density << ": delta "
           << options.delta << " -> " << base.probability << " (radius "
           << truncation_radius(net, cfg, options.delta) << "), delta " << finer.delta << " -> "
           << wide.probability << " (radius " << truncation_radius(net, cfg, finer.delta)
           << "); shift " << shift / base.std_error << " sigma (gate < " << max_sigmas << ")";
    return {"truncation insensitivity", shift < max_sigmas * base.std_error, detail.str()};
}

}  // namespace mimo_adhoc
