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

// Direct simulation of the typical link: a Poisson field of interferers on a
// truncated disc around the receiver at the origin, iid Rayleigh channels, and
// the MMSE output SINR of one stream. A semi-analytic estimator averages the
// closed-form outage conditioned on interferer positions instead of drawing
// channels.

#pragma once

#include "mimo_adhoc/analytic.hpp"
#include "mimo_adhoc/random.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <span>
#include <vector>

namespace mimo_adhoc {

struct PppRealization {
    double radius = 0.0;
    /// Interferer positions, sorted by increasing distance from the origin.
    std::vector<Eigen::Vector2d> points;
};

struct SinrSample {
    double sinr = 0.0;     ///< linear; +infinity when the interference leaves a free dimension
    int stream_index = 1;  ///< 1-based
};

struct OutageEstimate {
    double probability = 0.0;
    std::int64_t trials = 0;
    double std_error = 0.0;
};

struct McOptions {
    std::int64_t trials = 100000;
    std::uint64_t seed = 0;
    double delta = 1e-3;   ///< far-field interference tolerance, see truncation_radius
    unsigned workers = 0;  ///< 0 selects the hardware concurrency
};

/// Disc radius max(25 d0, r*), where r* bounds the mean interference from beyond r*
/// at delta times the noise power (finite gamma) or delta times the mean desired
/// power d0^-alpha (infinite gamma).
double truncation_radius(const NetworkParams& net, const LinkConfig& cfg, double delta);

/// Homogeneous PPP on the disc, generated outward so that a realization on a
/// larger disc extends one on a smaller disc drawn from the same stream.
PppRealization sample_ppp(const NetworkParams& net, double radius, RandomStream& rng);

/// Draws the desired link channel, then one channel per interferer in radial
/// order, and returns the MMSE SINR of stream `stream_k` (1-based).
SinrSample mmse_sinr(const LinkConfig& cfg, double alpha, const PppRealization& realization,
                     RandomStream& rng, int stream_k = 1);

/// Fraction of trials with SINR <= z; every trial draws a fresh PPP and channels.
OutageEstimate simulate_outage(const LinkConfig& cfg, const NetworkParams& net,
                               const McOptions& options, int stream_k = 1);

/// Outage with interferers frozen at `realization`; only channels are redrawn.
OutageEstimate simulate_outage_fixed(const LinkConfig& cfg, double alpha,
                                     const PppRealization& realization, const McOptions& options,
                                     int stream_k = 1);

/// Closed-form outage conditioned on interferers with |D_i|^alpha = distances_alpha[i].
double conditional_outage(const LinkConfig& cfg, double alpha,
                          std::span<const double> distances_alpha);

/// Mean of conditional_outage over PPP realizations; std_error is the sample
/// standard deviation over sqrt(trials).
OutageEstimate simulate_outage_semianalytic(const LinkConfig& cfg, const NetworkParams& net,
                                            const McOptions& options);

/// |D_i|^alpha for every point of the realization.
std::vector<double> distances_to_alpha(const PppRealization& realization, double alpha);

}  // namespace mimo_adhoc
