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

#include "mimo_adhoc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <concepts>
#include <limits>
#include <sstream>

namespace mimo_adhoc {

/// Bisection for f(x) = target with f nondecreasing on [lo, hi].
///
/// Stops once the bracket is no wider than rel_tol * max(|x|, lo_guard) and
/// returns its midpoint. Flat stretches of f are handled like any other.
/// Throws BracketError, carrying f(lo) and f(hi), when target lies outside
/// [f(lo), f(hi)].
template <std::invocable<double> F>
double find_root_increasing(F&& f, double target, double lo, double hi, double rel_tol,
                            double lo_guard = std::numeric_limits<double>::min())
{
    if (!(lo <= hi))
        throw DomainError("find_root_increasing: lo must not exceed hi");
    if (!(rel_tol > 0.0))
        throw DomainError("find_root_increasing: rel_tol must be positive");
    const double f_lo = f(lo);
    const double f_hi = f(hi);
    if (!(f_lo <= target && target <= f_hi)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "target " << target << " is not bracketed: f(" << lo << ") = " << f_lo << ", f(" << hi
            << ") = " << f_hi;
        throw BracketError(msg.str(), f_lo, f_hi);
    }
    if (f_lo == target)
        return lo;
    if (f_hi == target)
        return hi;
    while (true) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= rel_tol * std::max(std::abs(mid), lo_guard) || mid <= lo || mid >= hi)
            return mid;
        if (f(mid) < target)
            lo = mid;
        else
            hi = mid;
    }
}

}  // namespace mimo_adhoc
