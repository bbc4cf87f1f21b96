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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mimo_adhoc/errors.hpp"
#include "mimo_adhoc/montecarlo.hpp"
#include "mimo_adhoc/polynomial.hpp"
#include "mimo_adhoc/presets.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace mimo_adhoc;
using doctest::Approx;

namespace {

PppRealization layout(std::initializer_list<std::pair<double, double>> points)
{
    PppRealization r;
    for (const auto& [x, y] : points)
        r.points.emplace_back(x, y);
    std::sort(r.points.begin(), r.points.end(),
              [](const auto& a, const auto& b) { return a.squaredNorm() < b.squaredNorm(); });
    r.radius = r.points.empty() ? 1.0 : r.points.back().norm();
    return r;
}

// SINR from the textbook MMSE expression, replaying the draw order of mmse_sinr.
double sinr_oracle(const LinkConfig& c, double alpha, const PppRealization& r, RandomStream rng, int k)
{
    Eigen::MatrixXcd h(c.n_r, c.n_t);
    for (int q = 0; q < c.n_t; ++q)
        for (int i = 0; i < c.n_r; ++i)
            h(i, q) = rng.complex_gaussian();
    const double p0 = std::pow(c.d0, -alpha);
    std::vector<std::pair<double, Eigen::VectorXcd>> terms;
    for (int q = 0; q < c.n_t; ++q)
        if (q != k - 1)
            terms.emplace_back(p0, h.col(q));
    for (const auto& point : r.points) {
        const double w = std::pow(point.norm(), -alpha);
        for (int q = 0; q < c.n_t; ++q) {
            Eigen::VectorXcd g(c.n_r);
            for (int i = 0; i < c.n_r; ++i)
                g[i] = rng.complex_gaussian();
            terms.emplace_back(w, g);
        }
    }
    return p0 * oracle::quadratic_form_hp(c.high_snr() ? 0.0 : 1.0 / c.gamma, terms, h.col(k - 1));
}

// Conditional outage from the unnormalized product form with exact polynomial products.
double conditional_oracle(const LinkConfig& c, double alpha, const std::vector<double>& x)
{
    const double da = std::pow(c.d0, alpha);
    const double s = c.high_snr() ? 0.0 : c.z * da / c.gamma;
    auto num = oracle::binomial_power(c.z, c.n_t - 1);
    double den = std::pow(1.0 + c.z, c.n_t - 1);
    for (double xi : x) {
        num = oracle::convolve(num, oracle::binomial_power(c.z * da / xi, c.n_t));
        den *= std::pow(1.0 + c.z * da / xi, c.n_t);
    }
    double success = 0.0;
    for (int p = 0; p < c.n_r; ++p) {
        double u = 0.0;
        for (int v = 1; v <= c.n_r - p; ++v)
            u += std::pow(s, v - 1) / std::tgamma(v);
        if (p < static_cast<int>(num.size()))
            success += u * num[static_cast<std::size_t>(p)];
    }
    return 1.0 - std::exp(-s) * success / den;
}

}  // namespace

TEST_CASE("truncation radius")
{
    const LinkConfig c{1, 4, 1.0, 100.0, 1.0};
    const double want = std::sqrt(100.0 * 0.01 * 2.0 * std::numbers::pi / (2.0 * 1e-3));
    CHECK(truncation_radius({0.01, 4.0}, c, 1e-3) == Approx(want).epsilon(1e-14));
    CHECK(truncation_radius({1e-6, 4.0}, c, 1e-3) == 25.0);
    CHECK(truncation_radius({0.0, 4.0}, c, 1e-3) == 25.0);
    CHECK(truncation_radius({0.01, 4.0}, c, 1e-6) > truncation_radius({0.01, 4.0}, c, 1e-3));
    const LinkConfig hs{2, 4, 1.0, kInfiniteSnr, 2.0};
    const double ref = std::pow(2.0, -4.0);
    CHECK(truncation_radius({0.05, 4.0}, hs, 1e-3) ==
          Approx(std::max(50.0, std::sqrt(2 * 0.05 * 2 * std::numbers::pi / (2 * 1e-3 * ref)))).epsilon(1e-14));
    CHECK_THROWS_AS(truncation_radius({0.01, 4.0}, c, 0.0), DomainError);
}

TEST_CASE("Poisson sampling on a disc")
{
    const NetworkParams net{0.5, 4.0};
    const double radius = 6.0;
    const double mean = net.lambda * std::numbers::pi * radius * radius;
    double total = 0.0, inner = 0.0;
    const int reps = 2000;
    for (int i = 0; i < reps; ++i) {
        auto rng = RandomStream::substream(3, static_cast<std::uint64_t>(i));
        const auto r = sample_ppp(net, radius, rng);
        for (std::size_t j = 0; j < r.points.size(); ++j) {
            CHECK(r.points[j].norm() <= radius);
            if (j > 0)
                CHECK(r.points[j].norm() >= r.points[j - 1].norm());
            if (r.points[j].norm() <= radius / 2)
                inner += 1.0;
        }
        total += static_cast<double>(r.points.size());
    }
    CHECK(std::abs(total / reps - mean) < 4.0 * std::sqrt(mean / reps));
    CHECK(std::abs(inner / reps - mean / 4) < 4.0 * std::sqrt(mean / 4 / reps));
}

TEST_CASE("a larger disc extends the same realization")
{
    const NetworkParams net{0.3, 4.0};
    auto a = RandomStream::substream(1, 2);
    auto b = RandomStream::substream(1, 2);
    const auto small = sample_ppp(net, 5.0, a);
    const auto large = sample_ppp(net, 9.0, b);
    REQUIRE(large.points.size() >= small.points.size());
    for (std::size_t i = 0; i < small.points.size(); ++i)
        CHECK(small.points[i] == large.points[i]);
}

TEST_CASE("MMSE SINR matches the explicit inverse")
{
    const double alpha = 4.0;
    const auto r = layout({{0.8, 0.3}, {-1.2, 0.5}, {0.1, -2.0}, {3.0, 3.0}});
    for (const LinkConfig c : {LinkConfig{1, 1, 1.0, 100.0, 1.0}, LinkConfig{2, 4, 1.0, 100.0, 1.0},
                               LinkConfig{3, 5, 1.0, 10.0, 0.7}, LinkConfig{2, 4, 1.0, kInfiniteSnr, 1.0},
                               LinkConfig{1, 3, 1.0, kInfiniteSnr, 1.2}}) {
        for (int k = 1; k <= c.n_t; ++k) {
            for (std::uint64_t seed = 0; seed < 5; ++seed) {
                RandomStream rng(seed);
                const double want = sinr_oracle(c, alpha, r, rng, k);
                const auto got = mmse_sinr(c, alpha, r, rng, k);
                CHECK(got.stream_index == k);
                CHECK(got.sinr == Approx(want).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("single-antenna SINR is the scalar ratio")
{
    const auto r = layout({{0.0, 1.5}});
    RandomStream rng(4);
    RandomStream replay = rng;
    const auto h = replay.complex_gaussian();
    const auto g = replay.complex_gaussian();
    const double want = std::norm(h) / (0.01 + std::norm(g) * std::pow(1.5, -4.0));
    CHECK(mmse_sinr(LinkConfig{1, 1, 1.0, 100.0, 1.0}, 4.0, r, rng).sinr == Approx(want).epsilon(1e-12));
}

TEST_CASE("strong nearby interferers keep the solve accurate")
{
    const auto r = layout({{1e-3, 0.0}, {0.0, 2e-3}, {1.0, 1.0}});
    const LinkConfig c{1, 4, 1.0, 100.0, 1.0};
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        RandomStream rng(seed);
        const double want = sinr_oracle(c, 4.0, r, rng, 1);
        CHECK(mmse_sinr(c, 4.0, r, rng).sinr == Approx(want).epsilon(1e-6));
    }
}

TEST_CASE("interference-limited receiver with free dimensions")
{
    const LinkConfig c{1, 4, 1.0, kInfiniteSnr, 1.0};
    RandomStream rng(0);
    CHECK(std::isinf(mmse_sinr(c, 4.0, layout({{1.0, 0.0}, {0.0, 2.0}}), rng).sinr));
    CHECK(std::isinf(mmse_sinr(c, 4.0, PppRealization{}, rng).sinr));
    CHECK(std::isfinite(mmse_sinr(c, 4.0, layout({{1, 0}, {0, 2}, {3, 0}, {0, 4}}), rng).sinr));
}

TEST_CASE("stream index is validated")
{
    RandomStream rng(0);
    CHECK_THROWS_AS(mmse_sinr(LinkConfig{2, 4, 1.0, 100.0, 1.0}, 4.0, PppRealization{}, rng, 3), DomainError);
    CHECK_THROWS_AS(mmse_sinr(LinkConfig{2, 4, 1.0, 100.0, 1.0}, 4.0, PppRealization{}, rng, 0), DomainError);
}

TEST_CASE("conditional outage against the unnormalized product")
{
    RandomStream rng(21);
    const double gammas[] = {100.0, 5.0, kInfiniteSnr};
    for (int i = 0; i < 200; ++i) {
        const int n_r = 1 + static_cast<int>(rng.uniform() * 6);
        const int n_t = 1 + static_cast<int>(rng.uniform() * 4);
        const LinkConfig c{n_t, n_r, std::pow(10.0, -1.0 + 2.0 * rng.uniform()), gammas[i % 3], 0.5 + rng.uniform()};
        const double alpha = 2.5 + 3.0 * rng.uniform();
        std::vector<double> x;
        const int count = static_cast<int>(rng.uniform() * 6);
        for (int j = 0; j < count; ++j)
            x.push_back(std::pow(0.3 + 3.0 * rng.uniform(), alpha));
        CHECK(conditional_outage(c, alpha, x) ==
              Approx(conditional_oracle(c, alpha, x)).epsilon(1e-11).scale(1.0));
    }
}

TEST_CASE("conditional outage closed forms")
{
    // one antenna, Rayleigh: 1 - e^{-s} prod 1/(1 + z/x_i)
    const LinkConfig c{1, 1, 2.0, 10.0, 1.0};
    const std::vector<double> x{1.5, 4.0};
    const double want = 1.0 - std::exp(-0.2) / ((1.0 + 2.0 / 1.5) * (1.0 + 2.0 / 4.0));
    CHECK(conditional_outage(c, 4.0, x) == Approx(want).epsilon(1e-14));
    // noise only: gamma CDF
    const LinkConfig n{1, 3, 2.0, 4.0, 1.0};
    CHECK(conditional_outage(n, 4.0, {}) ==
          Approx(1.0 - std::exp(-0.5) * (1.0 + 0.5 + 0.125)).epsilon(1e-14));
    // many far interferers stay in range
    std::vector<double> many(5000, 1e6);
    const double f = conditional_outage(LinkConfig{4, 4, 1.0, 100.0, 1.0}, 4.0, many);
    CHECK(f >= 0.0);
    CHECK(f <= 1.0);
}

TEST_CASE("conditional outage against channel-only simulation")
{
    const auto c = presets::outage_link(2);
    const auto r = layout({{0.7, 0.2}, {-0.9, 0.6}, {1.4, -0.3}});
    McOptions o;
    o.trials = 20000;
    o.seed = 5;
    const auto mc = simulate_outage_fixed(c, 4.6, r, o);
    const double want = conditional_outage(c, 4.6, distances_to_alpha(r, 4.6));
    CHECK(std::abs(mc.probability - want) <= 3.5 * mc.std_error);
}

TEST_CASE("simulation is independent of the worker count")
{
    const auto c = presets::outage_link(2);
    const NetworkParams net{0.05, 4.6};
    McOptions o;
    o.trials = 1000;
    o.seed = 9;
    o.workers = 1;
    const auto a = simulate_outage(c, net, o);
    const auto sa = simulate_outage_semianalytic(c, net, o);
    o.workers = 3;
    const auto b = simulate_outage(c, net, o);
    const auto sb = simulate_outage_semianalytic(c, net, o);
    CHECK(a.probability == b.probability);
    CHECK(a.std_error == b.std_error);
    CHECK(sa.probability == sb.probability);
    CHECK(sa.std_error == sb.std_error);
    o.seed = 10;
    CHECK(simulate_outage_semianalytic(c, net, o).probability != sa.probability);
}

TEST_CASE("simulated outage agrees with the analytic value")
{
    for (int n_t : {1, 4}) {
        const auto c = presets::outage_link(n_t);
        const NetworkParams net{0.06, 4.6};
        McOptions o;
        o.trials = 20000;
        const auto mc = simulate_outage(c, net, o);
        const auto semi = simulate_outage_semianalytic(c, net, o);
        const double f = outage_probability(c, net);
        CHECK(std::abs(mc.probability - f) <= 3.5 * mc.std_error);
        CHECK(std::abs(semi.probability - f) <= 3.5 * semi.std_error);
        CHECK(semi.std_error < mc.std_error);
        CHECK(mc.trials == 20000);
    }
}

TEST_CASE("high-SNR simulation agrees with the analytic value")
{
    const auto c = presets::capacity_link(2);
    const NetworkParams net{0.01, 4.5};
    McOptions o;
    o.trials = 20000;
    const auto mc = simulate_outage(c, net, o);
    const double f = outage_probability(c, net);
    CHECK(std::abs(mc.probability - f) <= 3.5 * mc.std_error);
}

TEST_CASE("invalid options")
{
    McOptions o;
    o.trials = 0;
    CHECK_THROWS_AS(simulate_outage(presets::outage_link(1), {0.1, 4.6}, o), DomainError);
    o.trials = 10;
    o.delta = -1.0;
    CHECK_THROWS_AS(simulate_outage_semianalytic(presets::outage_link(1), {0.1, 4.6}, o), DomainError);
}
