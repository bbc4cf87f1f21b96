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

#pragma once

#include <stdexcept>
#include <string>

namespace mimo_adhoc {

/// A parameter lies outside the domain of the model (alpha <= 2, epsilon >= 1, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A factorization or evaluation broke down numerically.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal identity was violated; this signals a bug rather than bad input.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The root-finding target does not lie between f(lo) and f(hi).
class BracketError : public NumericalError {
public:
    BracketError(const std::string& what, double f_lo, double f_hi)
        : NumericalError(what), f_lo_(f_lo), f_hi_(f_hi) {}

    double f_lo() const noexcept { return f_lo_; }
    double f_hi() const noexcept { return f_hi_; }

private:
    double f_lo_;
    double f_hi_;
};

/// The requested outage target is at or below the noise-limited outage at zero density.
class InfeasibleEpsilon : public std::runtime_error {
public:
    InfeasibleEpsilon(const std::string& what, double floor)
        : std::runtime_error(what), floor_(floor) {}

    /// Outage probability at lambda = 0.
    double floor() const noexcept { return floor_; }

private:
    double floor_;
};

}  // namespace mimo_adhoc
