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

// Cross-module checks: partition bookkeeping against an independent counting
// oracle, closed-form collapses of the outage formula, and the agreement of
// the analytic outage with both simulators. Each check reports its measured
// values so a failing gate says by how much it failed.

#pragma once

#include "mimo_adhoc/analytic.hpp"
#include "mimo_adhoc/montecarlo.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mimo_adhoc {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Worked h/g examples for k = 4, exact.
CheckResult check_partition_examples();

/// Partition counts and length-restricted counts for k <= k_max against a
/// generating-function / largest-part dynamic program.
CheckResult check_partition_oracle(int k_max);

/// n_t = n_r = 1 exponential form and the lambda = 0 noise-only form on
/// `points` random parameter sets each, to absolute tolerance `tol`.
CheckResult check_collapse_identities(int points, std::uint64_t seed, double tol);

/// One point of an outage-vs-density curve at per-stream density.
struct CurvePoint {
    int n_t = 1;
    double stream_density = 0.0;
    double analytic = 0.0;
};

/// `points` log-spaced per-stream densities per n_t whose analytic outage spans
/// [eps_lo, eps_hi] at the outage-figure configuration.
std::vector<CurvePoint> outage_grid(const std::vector<int>& stream_counts, int points,
                                    double eps_lo, double eps_hi);

struct EstimatorRun {
    CurvePoint point;
    OutageEstimate mc;
    OutageEstimate semianalytic;
    bool has_semianalytic = false;
};

std::vector<EstimatorRun> run_estimators(const std::vector<CurvePoint>& grid,
                                         const McOptions& options, bool semianalytic);

/// |analytic - mc| <= sigmas * mc.std_error at every point.
CheckResult check_mc_agreement(const std::vector<EstimatorRun>& runs, double sigmas);

/// Semi-analytic and direct estimates within sigmas * combined std_error, and
/// the semi-analytic std_error strictly smaller, at every point.
CheckResult check_estimator_equivalence(const std::vector<EstimatorRun>& runs, double sigmas);

/// Single-stream outage no larger than multi-stream at `density_points` log-spaced
/// per-stream densities in [0.001, 1], and single-stream exact capacity the largest at `epsilon_points` targets.
CheckResult check_single_stream_dominance(int density_points, int epsilon_points);

/// Smallest per-stream density in [lo, hi] above which the single-stream outage
/// exceeds that of n_t streams; infinity if it never does, found by bisection
/// assuming a single sign change.
double dominance_crossing(int n_t, double lo, double hi);

/// High-SNR slope of log lambda(eps) vs log eps within rel_slope of 1/ell, and the
/// exact/asymptotic capacity ratio closer to 1 at eps = 1e-4 than at eps = 1e-2.
CheckResult check_asymptotic_consistency(double rel_slope);

/// conditional_outage against channel-only simulation for `configurations`
/// random interferer layouts (1 to 5 interferers) per n_t in {1, 2}.
CheckResult check_conditional_cdf(int configurations, std::int64_t trials, double sigmas,
                                  std::uint64_t seed, unsigned workers);

/// Direct MC at delta and delta / 2 differ by less than max_sigmas standard errors.
CheckResult check_truncation_insensitivity(const CurvePoint& point, const McOptions& options,
                                           double max_sigmas);

}  // namespace mimo_adhoc
