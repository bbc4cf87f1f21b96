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

// Closed-form per-stream outage probability and transmission capacity of
// spatial-multiplexing links with linear MMSE receivers in a Poisson field
// of interferers.
//
// Everything here is on a linear scale. A transmit SNR of +infinity selects
// the interference-limited (high-SNR) regime.

#pragma once

#include "mimo_adhoc/partitions.hpp"

#include <cmath>
#include <limits>

namespace mimo_adhoc {

inline constexpr double kInfiniteSnr = std::numeric_limits<double>::infinity();

struct LinkConfig {
    int n_t = 1;          ///< transmit antennas = data streams
    int n_r = 1;          ///< receive antennas
    double z = 1.0;       ///< SINR threshold, z = 2^R - 1
    double gamma = 100.0; ///< transmit SNR P/N0, may be kInfiniteSnr
    double d0 = 1.0;      ///< link distance

    /// Rate R = log2(1 + z) in bits per stream use.
    double rate() const { return std::log2(1.0 + z); }
    bool high_snr() const { return std::isinf(gamma); }

    /// Throws DomainError on non-positive antenna counts, z < 0, gamma <= 0 or d0 <= 0.
    /// z = 0 is accepted as the zero-rate limit.
    void validate() const;
};

struct NetworkParams {
    double lambda = 0.0; ///< interfering transmitters per unit area
    double alpha = 4.0;  ///< path loss exponent, > 2

    void validate() const;
};

struct CapacityResult {
    double epsilon = 0.0;
    double contention_density = 0.0;
    double exact_capacity = 0.0;
    double asymptotic_capacity = 0.0;
    int ell = 0;
    double omega = 0.0;
};

/// Throws DomainError unless alpha > 2.
void check_path_loss(double alpha);

/// Theta = pi (d0^alpha z)^(2/alpha) Gamma(n_t + 2/alpha) Gamma(1 - 2/alpha) / Gamma(n_t),
/// evaluated in the log domain.
double theta(const LinkConfig& cfg, double alpha);

/// Partition weight Xi for partition p at n_t streams; 1 for the empty partition.
double xi(const Partition& p, int n_t, double alpha);

/// Per-stream outage probability F(z, lambda).
double outage_probability(const LinkConfig& cfg, const NetworkParams& net);

/// Number of strongest interferers plus one whose interference MMSE can null:
/// floor(n_r / n_t). Throws DomainError when n_t > n_r.
int max_cancelable(int n_r, int n_t);

/// (n_r + 1) / (k + 1) <= n_t < (n_r + 1) / k, checked in integers.
bool cancelation_condition_holds(int n_r, int n_t, int k);

/// Leading coefficient Omega of the small-density expansion F ~ Omega (Theta lambda)^ell.
double omega(const LinkConfig& cfg, double alpha);

/// Density lambda at which the outage equals epsilon.
/// Throws DomainError unless 0 < epsilon < 1, InfeasibleEpsilon when epsilon does not
/// exceed the zero-density outage, BracketError if no upper bracket is found.
double contention_density(const LinkConfig& cfg, double alpha, double epsilon);

/// n_t * lambda(epsilon) * (1 - epsilon) * R together with the high-SNR leading term.
CapacityResult transmission_capacity_exact(const LinkConfig& cfg, double alpha, double epsilon);

/// n_t R epsilon^(1/ell) / (Theta Omega^(1/ell)). Ignores cfg.gamma.
double transmission_capacity_asymptotic(const LinkConfig& cfg, double alpha, double epsilon);

}  // namespace mimo_adhoc
