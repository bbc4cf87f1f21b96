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

#include "mimo_adhoc/analytic.hpp"

#include "mimo_adhoc/errors.hpp"
#include "mimo_adhoc/root_finding.hpp"
#include "mimo_adhoc/special.hpp"

#include <numbers>
#include <sstream>
#include <string>

namespace mimo_adhoc {

namespace {

constexpr double kRangeSlack = 1e-9;
constexpr double kContentionRelTol = 1e-10;
constexpr int kMaxBracketDoublings = 60;

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

void check_epsilon(double epsilon)
{
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw DomainError("outage target epsilon must lie in (0, 1), got " + fmt(epsilon));
}

// z d0^alpha / gamma, zero in the high-SNR limit.
double noise_term(const LinkConfig& cfg, double alpha)
{
    if (cfg.high_snr())
        return 0.0;
    return cfg.z * std::pow(cfg.d0, alpha) / cfg.gamma;
}

// sum_{v=1}^{count} s^(v-1) / (v-1)!
double truncated_exponential_series(double s, int count)
{
    double term = 1.0;
    double sum = 0.0;
    for (int v = 1; v <= count; ++v) {
        sum += term;
        term *= s / v;
    }
    return sum;
}

// sum over partitions j of w: Xi_{j,w} (-x)^{|h(.,j,w)|}
double partition_sum(int w, int n_t, double alpha, double x)
{
    double sum = 0.0;
    for (const auto& part : partitions_of(w))
        sum += xi(part, n_t, alpha) * pow_int(-x, static_cast<int>(part.length()));
    return sum;
}

}  // namespace

void LinkConfig::validate() const
{
    if (n_t < 1 || n_r < 1)
        throw DomainError("antenna counts must be positive");
    if (n_r - 1 > kMaxPartitionedInteger)
        throw DomainError("n_r exceeds the supported partition range");
    if (!(z >= 0.0) || !std::isfinite(z))
        throw DomainError("SINR threshold z must be finite and non-negative, got " + fmt(z));
    if (!(gamma > 0.0))
        throw DomainError("transmit SNR gamma must be positive, got " + fmt(gamma));
    if (!(d0 > 0.0) || !std::isfinite(d0))
        throw DomainError("link distance d0 must be finite and positive, got " + fmt(d0));
}

void check_path_loss(double alpha)
{
    if (!(alpha > 2.0) || !std::isfinite(alpha))
        throw DomainError("path loss exponent alpha must be finite and > 2, got " + fmt(alpha));
}

void NetworkParams::validate() const
{
    if (!(lambda >= 0.0) || !std::isfinite(lambda))
        throw DomainError("density lambda must be finite and non-negative, got " + fmt(lambda));
    check_path_loss(alpha);
}

double theta(const LinkConfig& cfg, double alpha)
{
    cfg.validate();
    check_path_loss(alpha);
    if (cfg.z == 0.0)
        return 0.0;
    const double delta = 2.0 / alpha;
    const double log_theta = std::log(std::numbers::pi) +
                             delta * (alpha * std::log(cfg.d0) + std::log(cfg.z)) +
                             log_gamma(cfg.n_t + delta) + log_gamma(1.0 - delta) -
                             log_gamma(static_cast<double>(cfg.n_t));
    return std::exp(log_theta);
}

double xi(const Partition& p, int n_t, double alpha)
{
    check_path_loss(alpha);
    if (n_t < 1)
        throw DomainError("n_t must be positive");
    const double delta = 2.0 / alpha;
    double numerator = 1.0;
    for (int s : p.summands()) {
        for (int k = 1; k <= s; ++k)
            numerator *= (n_t - k + 1) * (k - 1 - delta) / (k * (n_t + delta - k));
    }
    double denominator = 1.0;
    const auto profile = multiplicity_profile(p);
    for (const auto& entry : profile.entries())
        denominator *= factorial(entry.multiplicity);
    return numerator / denominator;
}

double outage_probability(const LinkConfig& cfg, const NetworkParams& net)
{
    cfg.validate();
    net.validate();
    const double s = noise_term(cfg, net.alpha);
    const double x = theta(cfg, net.alpha) * net.lambda;

    double total = 0.0;
    for (int p = 0; p <= cfg.n_r - 1; ++p) {
        const double noise_series = truncated_exponential_series(s, cfg.n_r - p);
        double inner = 0.0;
        for (int q = 0; q <= std::min(p, cfg.n_t - 1); ++q) {
            inner += static_cast<double>(binomial(cfg.n_t - 1, q)) * pow_int(cfg.z, q) *
                     partition_sum(p - q, cfg.n_t, net.alpha, x);
        }
        total += noise_series * inner;
    }
    const double success =
        std::exp(-s - x) * total / pow_int(1.0 + cfg.z, cfg.n_t - 1);
    const double outage = 1.0 - success;
    if (!(outage >= -kRangeSlack && outage <= 1.0 + kRangeSlack))
        throw ConsistencyError("outage probability " + fmt(outage) + " left [0, 1]");
    return std::clamp(outage, 0.0, 1.0);
}

bool cancelation_condition_holds(int n_r, int n_t, int k)
{
    if (k < 1)
        return false;
    return n_r + 1 <= n_t * (k + 1) && n_t * k < n_r + 1;
}

int max_cancelable(int n_r, int n_t)
{
    if (n_t < 1 || n_r < 1)
        throw DomainError("antenna counts must be positive");
    if (n_t > n_r)
        throw DomainError("n_t = " + std::to_string(n_t) + " exceeds n_r = " +
                          std::to_string(n_r) + ": streams cannot be separated");
    const int ell = n_r / n_t;
    if (!cancelation_condition_holds(n_r, n_t, ell))
        throw ConsistencyError("floor(n_r / n_t) violates the cancelation condition");
    return ell;
}

double omega(const LinkConfig& cfg, double alpha)
{
    cfg.validate();
    check_path_loss(alpha);
    const int ell = max_cancelable(cfg.n_r, cfg.n_t);
    double sum = 0.0;
    for (int q = 0; q <= cfg.n_t - 1; ++q) {
        double over_p = 0.0;
        for (int p = ell; p <= cfg.n_r - 1 - q; ++p)
            for (const auto& part : partitions_with_length(p, ell))
                over_p += xi(part, cfg.n_t, alpha);
        sum += static_cast<double>(binomial(cfg.n_t - 1, q)) * pow_int(cfg.z, q) * over_p;
    }
    const double sign = (ell % 2 == 0) ? 1.0 : -1.0;
    return 1.0 / factorial(ell) - sign * sum / pow_int(1.0 + cfg.z, cfg.n_t - 1);
}

double contention_density(const LinkConfig& cfg, double alpha, double epsilon)
{
    cfg.validate();
    check_path_loss(alpha);
    check_epsilon(epsilon);
    auto outage_at = [&](double lambda) { return outage_probability(cfg, {lambda, alpha}); };

    const double floor = outage_at(0.0);
    if (epsilon <= floor)
        throw InfeasibleEpsilon("epsilon = " + fmt(epsilon) +
                                    " does not exceed the zero-density outage " + fmt(floor),
                                floor);
    double hi = 1.0;
    for (int i = 0; i < kMaxBracketDoublings && outage_at(hi) < epsilon; ++i)
        hi *= 2.0;
    const double f_hi = outage_at(hi);
    if (f_hi < epsilon)
        throw BracketError("no density up to " + fmt(hi) + " reaches epsilon = " + fmt(epsilon),
                           floor, f_hi);
    return find_root_increasing(outage_at, epsilon, 0.0, hi, kContentionRelTol);
}

double transmission_capacity_asymptotic(const LinkConfig& cfg, double alpha, double epsilon)
{
    cfg.validate();
    check_epsilon(epsilon);
    const int ell = max_cancelable(cfg.n_r, cfg.n_t);
    const double om = omega(cfg, alpha);
    if (!(om > 0.0))
        throw ConsistencyError("Omega = " + fmt(om) + " is not positive");
    const double root = 1.0 / ell;
    return cfg.n_t * cfg.rate() * std::pow(epsilon, root) /
           (theta(cfg, alpha) * std::pow(om, root));
}

CapacityResult transmission_capacity_exact(const LinkConfig& cfg, double alpha, double epsilon)
{
    CapacityResult result;
    result.epsilon = epsilon;
    result.ell = max_cancelable(cfg.n_r, cfg.n_t);
    result.contention_density = contention_density(cfg, alpha, epsilon);
    result.exact_capacity = cfg.n_t * result.contention_density * (1.0 - epsilon) * cfg.rate();
    result.omega = omega(cfg, alpha);
    result.asymptotic_capacity = transmission_capacity_asymptotic(cfg, alpha, epsilon);
    return result;
}

}  // namespace mimo_adhoc
