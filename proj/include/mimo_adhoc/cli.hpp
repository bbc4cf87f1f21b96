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

// Command-line front end: figure-data sweeps written as CSV, the validation
// suite, and single-point JSON records.

#pragma once

#include "mimo_adhoc/analytic.hpp"
#include "mimo_adhoc/montecarlo.hpp"
#include "mimo_adhoc/validation.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mimo_adhoc::cli {

inline constexpr const char* kVersion = "1.0.0";

enum class ExitCode : int {
    success = 0,
    validation_failure = 1,
    usage = 2,
    data = 3,
    numerical = 4,
};

enum class Command { outage_curve, tc_vs_epsilon, tc_vs_alpha, validate, point };

const char* command_name(Command command);

struct Sweep {
    double min = 0.0;
    double max = 0.0;
    int points = 1;
    bool log = true;

    /// Throws DomainError for points < 1, min > max, or a log grid with min <= 0.
    void validate() const;
    std::vector<double> values() const;
};

struct RunConfig {
    Command command = Command::point;
    std::vector<int> n_t{1};
    int n_r = 4;
    double z = 1.0;        ///< linear
    double gamma = 100.0;  ///< linear or kInfiniteSnr
    double d0 = 1.0;
    double alpha = 4.6;
    double lambda = 0.01;
    double epsilon = 0.1;
    Sweep sweep;
    bool mc = true;
    bool per_stream_density = true;
    McOptions mc_options;
    double sigma = 3.0;
    std::string out;  ///< empty writes to standard output
    bool gnuplot = false;

    /// Default parameters of `command`.
    static RunConfig defaults(Command command);

    LinkConfig link(int n_t) const { return {n_t, n_r, z, gamma, d0}; }

    /// Throws DomainError on any invalid physical or sweep parameter.
    void validate() const;
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// One-line description of every parameter that influences the output.
std::string describe(const RunConfig& cfg);

/// Leading comment line, header row, then rows at 17 significant digits.
void write_csv(std::ostream& os, const std::string& comment, const Table& table);

/// Rows (lambda, n_t, analytic_outage[, mc_outage, mc_std_error]).
Table run_outage_curve(const RunConfig& cfg);

/// Rows (epsilon, n_t, feasible, exact_capacity, asymptotic_capacity).
/// Throws InfeasibleEpsilon when no point is feasible.
Table run_tc_vs_epsilon(const RunConfig& cfg);

/// Rows (alpha, n_t, feasible, exact_capacity).
/// Throws InfeasibleEpsilon when no point is feasible.
Table run_tc_vs_alpha(const RunConfig& cfg);

/// For each n_t, whether exact capacity is non-decreasing in alpha over the feasible rows.
std::vector<std::pair<int, bool>> alpha_monotonicity(const Table& table);

/// Runs every check, writing one PASS/FAIL line per check as it completes.
std::vector<CheckResult> run_validate(const RunConfig& cfg, std::ostream& os);

/// JSON record with the parameter set and one entry per n_t.
std::string run_point(const RunConfig& cfg);

/// Parses argv, runs the command and returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mimo_adhoc::cli
