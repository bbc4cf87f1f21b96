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

#include "mimo_adhoc/montecarlo.hpp"

#include "mimo_adhoc/errors.hpp"
#include "mimo_adhoc/linalg.hpp"
#include "mimo_adhoc/polynomial.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>

namespace mimo_adhoc {

namespace {

enum Lane : std::uint64_t { kPositions = 0, kChannels = 1 };

// Interferers stronger than this (relative to unit noise) are folded into the
// Cholesky factor by rank-one updates rather than summed into the Gram matrix,
// whose small entries they would otherwise swamp.
constexpr double kStrongWeight = 1e6;
constexpr std::int64_t kTrialBlock = 64;

void check_options(const McOptions& options)
{
    if (options.trials < 1)
        throw DomainError("trial count must be positive");
    if (!(options.delta > 0.0))
        throw DomainError("truncation tolerance delta must be positive");
}

void check_stream(const LinkConfig& cfg, int stream_k)
{
    if (stream_k < 1 || stream_k > cfg.n_t)
        throw DomainError("stream index " + std::to_string(stream_k) + " outside [1, " +
                          std::to_string(cfg.n_t) + "]");
}

// Runs body(trial) for every trial in [0, trials) on `workers` threads.
// Failures are rethrown as NumericalError naming the lowest failing trial.
template <typename Body>
void for_each_trial(std::int64_t trials, unsigned workers, Body body)
{
    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    const std::int64_t blocks = (trials + kTrialBlock - 1) / kTrialBlock;
    workers = static_cast<unsigned>(std::min<std::int64_t>(workers, blocks));

    std::atomic<std::int64_t> next_block{0};
    std::mutex error_mutex;
    std::int64_t failed_trial = -1;
    std::string failure;

    auto run = [&] {
        for (std::int64_t b = next_block++; b < blocks; b = next_block++) {
            const std::int64_t end = std::min(trials, (b + 1) * kTrialBlock);
            for (std::int64_t t = b * kTrialBlock; t < end; ++t) {
                try {
                    body(t);
                } catch (const std::exception& e) {
                    std::lock_guard lock(error_mutex);
                    if (failed_trial < 0 || t < failed_trial) {
                        failed_trial = t;
                        failure = e.what();
                    }
                    return;
                }
            }
        }
    };

    if (workers <= 1) {
        run();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(run);
    }
    if (failed_trial >= 0)
        throw NumericalError("trial " + std::to_string(failed_trial) + ": " + failure);
}

OutageEstimate binomial_estimate(std::int64_t outages, std::int64_t trials)
{
    OutageEstimate est;
    est.trials = trials;
    est.probability = static_cast<double>(outages) / static_cast<double>(trials);
    est.std_error =
        std::sqrt(est.probability * (1.0 - est.probability) / static_cast<double>(trials));
    return est;
}

// Lower triangle of R += weight * g g^H.
void accumulate_outer(Eigen::MatrixXcd& r, const Eigen::VectorXcd& g, double weight)
{
    const Eigen::Index n = g.size();
    for (Eigen::Index c = 0; c < n; ++c) {
        const double gc_re = weight * g[c].real();
        const double gc_im = weight * g[c].imag();
        for (Eigen::Index row = c; row < n; ++row) {
            const double gr_re = g[row].real();
            const double gr_im = g[row].imag();
            r(row, c) += std::complex<double>(gr_re * gc_re + gr_im * gc_im,
                                              gr_im * gc_re - gr_re * gc_im);
        }
    }
}

void fill_gaussian(Eigen::VectorXcd& g, RandomStream& rng)
{
    for (Eigen::Index i = 0; i < g.size(); ++i)
        g[i] = rng.complex_gaussian();
}

// |D|^-alpha from squared distance.
double path_gain(const Eigen::Vector2d& point, double alpha)
{
    return std::exp(-0.5 * alpha * std::log(point.squaredNorm()));
}

SinrSample mmse_sinr_finite(const LinkConfig& cfg, double alpha, const PppRealization& realization,
                            RandomStream& rng, int stream_k)
{
    const Eigen::Index n_r = cfg.n_r;
    const double signal_gain = cfg.gamma / std::pow(cfg.d0, alpha);

    Eigen::MatrixXcd h0(n_r, cfg.n_t);
    for (Eigen::Index q = 0; q < cfg.n_t; ++q)
        for (Eigen::Index i = 0; i < n_r; ++i)
            h0(i, q) = rng.complex_gaussian();

    Eigen::MatrixXcd r = Eigen::MatrixXcd::Identity(n_r, n_r);
    Eigen::VectorXcd g(n_r);
    for (Eigen::Index q = 0; q < cfg.n_t; ++q) {
        if (q == stream_k - 1)
            continue;
        g = h0.col(q);
        accumulate_outer(r, g, signal_gain);
    }

    std::vector<std::pair<double, Eigen::VectorXcd>> strong;
    for (const auto& point : realization.points) {
        const double weight = cfg.gamma * path_gain(point, alpha);
        for (int q = 0; q < cfg.n_t; ++q) {
            fill_gaussian(g, rng);
            if (weight > kStrongWeight)
                strong.emplace_back(weight, g);
            else
                accumulate_outer(r, g, weight);
        }
    }

    HermitianPdFactor<std::complex<double>> factor(r);
    for (const auto& [weight, column] : strong)
        factor.rank_one_update(column, weight);
    return {signal_gain * factor.inverse_quadratic_form(h0.col(stream_k - 1)), stream_k};
}

// Interference-limited receiver: R has no identity term. Rows of the stacked
// matrix A satisfy A^H A = R, and the QR factor of A gives R = T^H T.
SinrSample mmse_sinr_high_snr(const LinkConfig& cfg, double alpha,
                              const PppRealization& realization, RandomStream& rng, int stream_k)
{
    const Eigen::Index n_r = cfg.n_r;
    const double signal_gain = 1.0 / std::pow(cfg.d0, alpha);

    Eigen::MatrixXcd h0(n_r, cfg.n_t);
    for (Eigen::Index q = 0; q < cfg.n_t; ++q)
        for (Eigen::Index i = 0; i < n_r; ++i)
            h0(i, q) = rng.complex_gaussian();

    const Eigen::Index columns =
        (cfg.n_t - 1) + static_cast<Eigen::Index>(realization.points.size()) * cfg.n_t;
    Eigen::MatrixXcd stacked(columns, n_r);
    Eigen::Index row = 0;
    const double self_scale = std::sqrt(signal_gain);
    for (Eigen::Index q = 0; q < cfg.n_t; ++q)
        if (q != stream_k - 1)
            stacked.row(row++) = self_scale * h0.col(q).adjoint();
    Eigen::VectorXcd g(n_r);
    for (const auto& point : realization.points) {
        const double scale = std::sqrt(path_gain(point, alpha));
        for (int q = 0; q < cfg.n_t; ++q) {
            fill_gaussian(g, rng);
            stacked.row(row++) = scale * g.adjoint();
        }
    }

    constexpr double inf = std::numeric_limits<double>::infinity();
    // Fewer interfering dimensions than antennas: the desired stream sees a
    // direction free of interference and noise.
    if (columns < n_r)
        return {inf, stream_k};

    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(stacked);
    const Eigen::MatrixXcd t = qr.matrixQR().topRows(n_r).triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < n_r; ++i)
        if (t(i, i) == 0.0)
            return {inf, stream_k};
    const Eigen::VectorXcd y =
        t.adjoint().triangularView<Eigen::Lower>().solve(h0.col(stream_k - 1));
    return {signal_gain * y.squaredNorm(), stream_k};
}

}  // namespace

double truncation_radius(const NetworkParams& net, const LinkConfig& cfg, double delta)
{
    cfg.validate();
    net.validate();
    if (!(delta > 0.0))
        throw DomainError("truncation tolerance delta must be positive");
    const double floor_radius = 25.0 * cfg.d0;
    if (net.lambda == 0.0)
        return floor_radius;
    // Mean interference beyond r per receive antenna: P n_t lambda 2 pi r^(2-alpha) / (alpha-2).
    const double reference = cfg.high_snr() ? std::pow(cfg.d0, -net.alpha) : 1.0 / cfg.gamma;
    const double scale = cfg.n_t * net.lambda * 2.0 * std::numbers::pi /
                         ((net.alpha - 2.0) * delta * reference);
    const double r_star = std::pow(scale, 1.0 / (net.alpha - 2.0));
    return std::max(floor_radius, r_star);
}

PppRealization sample_ppp(const NetworkParams& net, double radius, RandomStream& rng)
{
    net.validate();
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw DomainError("disc radius must be finite and positive");
    PppRealization out;
    out.radius = radius;
    if (net.lambda == 0.0)
        return out;
    // Areas enclosed by successive points form a rate-lambda Poisson process.
    const double max_area = std::numbers::pi * radius * radius;
    const double expected = net.lambda * max_area;
    out.points.reserve(static_cast<std::size_t>(expected + 6.0 * std::sqrt(expected) + 8.0));
    double area = 0.0;
    while (true) {
        area += rng.exponential() / net.lambda;
        if (area > max_area)
            break;
        const double r = std::sqrt(area / std::numbers::pi);
        const double angle = 2.0 * std::numbers::pi * rng.uniform();
        out.points.emplace_back(r * std::cos(angle), r * std::sin(angle));
    }
    return out;
}

SinrSample mmse_sinr(const LinkConfig& cfg, double alpha, const PppRealization& realization,
                     RandomStream& rng, int stream_k)
{
    cfg.validate();
    check_path_loss(alpha);
    check_stream(cfg, stream_k);
    return cfg.high_snr() ? mmse_sinr_high_snr(cfg, alpha, realization, rng, stream_k)
                          : mmse_sinr_finite(cfg, alpha, realization, rng, stream_k);
}

OutageEstimate simulate_outage(const LinkConfig& cfg, const NetworkParams& net,
                               const McOptions& options, int stream_k)
{
    cfg.validate();
    net.validate();
    check_options(options);
    check_stream(cfg, stream_k);
    const double radius = truncation_radius(net, cfg, options.delta);
    std::atomic<std::int64_t> outages{0};
    for_each_trial(options.trials, options.workers, [&](std::int64_t t) {
        auto positions = RandomStream::substream(options.seed, static_cast<std::uint64_t>(t), kPositions);
        auto channels = RandomStream::substream(options.seed, static_cast<std::uint64_t>(t), kChannels);
        const auto realization = sample_ppp(net, radius, positions);
        if (mmse_sinr(cfg, net.alpha, realization, channels, stream_k).sinr <= cfg.z)
            outages.fetch_add(1, std::memory_order_relaxed);
    });
    return binomial_estimate(outages.load(), options.trials);
}

OutageEstimate simulate_outage_fixed(const LinkConfig& cfg, double alpha,
                                     const PppRealization& realization, const McOptions& options,
                                     int stream_k)
{
    cfg.validate();
    check_path_loss(alpha);
    check_options(options);
    check_stream(cfg, stream_k);
    std::atomic<std::int64_t> outages{0};
    for_each_trial(options.trials, options.workers, [&](std::int64_t t) {
        auto channels = RandomStream::substream(options.seed, static_cast<std::uint64_t>(t), kChannels);
        if (mmse_sinr(cfg, alpha, realization, channels, stream_k).sinr <= cfg.z)
            outages.fetch_add(1, std::memory_order_relaxed);
    });
    return binomial_estimate(outages.load(), options.trials);
}

double conditional_outage(const LinkConfig& cfg, double alpha,
                          std::span<const double> distances_alpha)
{
    cfg.validate();
    check_path_loss(alpha);
    const double d0_alpha = std::pow(cfg.d0, alpha);
    const double s = cfg.high_snr() ? 0.0 : cfg.z * d0_alpha / cfg.gamma;
    const Eigen::Index max_degree = cfg.n_r - 1;

    // The coefficient of t^p in
    //   prod_j (1 + a_j t) / (1 + a_j),  a = z (n_t - 1 times), z d0^alpha / x_i (n_t times each)
    // equals z^p d0^(alpha p) C_p divided by the normalizing product, i.e. the
    // numerator of I_p times z^p d0^(alpha p). Each normalized factor keeps the
    // coefficients in [0, 1] however many interferers there are.
    RealPolynomial acc{1.0};
    auto multiply = [&](double a, int times) {
        const std::array<double, 2> factor{1.0 / (1.0 + a), a / (1.0 + a)};
        for (int i = 0; i < times; ++i)
            acc.multiply_truncated(factor, max_degree);
    };
    multiply(cfg.z, cfg.n_t - 1);
    for (double x : distances_alpha) {
        if (!(x > 0.0))
            throw DomainError("interferer distance^alpha must be positive");
        multiply(cfg.z * d0_alpha / x, cfg.n_t);
    }

    double success = 0.0;
    double noise_series = 0.0;  // sum_{v=1}^{n_r - p} s^(v-1)/(v-1)!, built from p = n_r-1 down
    double term = 1.0;
    int terms = 0;
    for (int p = cfg.n_r - 1; p >= 0; --p) {
        while (terms < cfg.n_r - p) {
            noise_series += term;
            ++terms;
            term *= s / terms;
        }
        success += noise_series * acc[p];
    }
    success *= std::exp(-s);
    return std::clamp(1.0 - success, 0.0, 1.0);
}

std::vector<double> distances_to_alpha(const PppRealization& realization, double alpha)
{
    std::vector<double> out;
    out.reserve(realization.points.size());
    for (const auto& point : realization.points)
        out.push_back(std::exp(0.5 * alpha * std::log(point.squaredNorm())));
    return out;
}

OutageEstimate simulate_outage_semianalytic(const LinkConfig& cfg, const NetworkParams& net,
                                            const McOptions& options)
{
    cfg.validate();
    net.validate();
    check_options(options);
    const double radius = truncation_radius(net, cfg, options.delta);
    std::vector<double> values(static_cast<std::size_t>(options.trials));
    for_each_trial(options.trials, options.workers, [&](std::int64_t t) {
        auto positions = RandomStream::substream(options.seed, static_cast<std::uint64_t>(t), kPositions);
        const auto realization = sample_ppp(net, radius, positions);
        values[static_cast<std::size_t>(t)] =
            conditional_outage(cfg, net.alpha, distances_to_alpha(realization, net.alpha));
    });

    // Trial-order summation keeps the result independent of the worker count.
    const auto n = static_cast<double>(options.trials);
    double mean = 0.0;
    for (double v : values)
        mean += v;
    mean /= n;
    double sq = 0.0;
    for (double v : values)
        sq += (v - mean) * (v - mean);

    OutageEstimate est;
    est.trials = options.trials;
    est.probability = mean;
    est.std_error = options.trials > 1 ? std::sqrt(sq / (n - 1.0) / n) : 0.0;
    return est;
}

}  // namespace mimo_adhoc
